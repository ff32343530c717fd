#include "frobsem/disamb.hpp"

#include <string>

namespace frobsem {

InventoryMap index_inventories(std::vector<SenseInventory> inventories) {
  InventoryMap out;
  for (auto& inv : inventories) {
    Token key = inv.word;
    out.insert_or_assign(std::move(key), std::move(inv));
  }
  return out;
}

std::size_t choose_sense(const SenseInventory& inventory, const Vector& context) {
  std::size_t best = 0;
  double best_d = 0.0;
  for (std::size_t s = 0; s < inventory.centroids.size(); ++s) {
    const double d = distance(inventory.centroids[s], context, inventory.metric);
    if (s == 0 || d < best_d) {
      best = s;
      best_d = d;
    }
  }
  return best;
}

SenseTensors train_sense_tensors(const SemanticSpace& space, const ArgumentOccurrences& occ,
                                 const SenseInventory& inventory) {
  const std::size_t k = inventory.k;
  std::vector<std::vector<OccurrenceRow>> rows_of(k);
  for (const auto& row : occ.rows()) {
    if (!row.context_id)
      throw Error(ErrorCode::UncoveredContext, occ.word().str() + ": occurrence row without a context id");
    auto it = inventory.membership.find(*row.context_id);
    if (it == inventory.membership.end())
      throw Error(ErrorCode::UncoveredContext,
                  occ.word().str() + ": context " + std::to_string(*row.context_id) + " is not in the sense inventory");
    rows_of[it->second].push_back(row);
  }

  std::size_t dominant = 0;
  for (std::size_t s = 1; s < k; ++s)
    if (rows_of[s].size() > rows_of[dominant].size()) dominant = s;

  std::vector<std::size_t> target(k);
  for (std::size_t s = 0; s < k; ++s) {
    target[s] = rows_of[s].size() < 3 ? dominant : s;
    if (target[s] != s) {
      auto& dst = rows_of[dominant];
      dst.insert(dst.end(), rows_of[s].begin(), rows_of[s].end());
      rows_of[s].clear();
    }
  }

  SenseTensors out;
  out.word = occ.word();
  std::map<std::size_t, std::size_t> index_of;
  for (std::size_t s = 0; s < k; ++s) {
    if (target[s] != s && s != dominant) continue;
    if (rows_of[s].empty()) continue;
    ArgumentOccurrences part(occ.word(), occ.roles(), rows_of[s]);
    VerbTensor t = sum_tensor(space, part);
    t.provenance = {ProvenanceKind::SummedSense, static_cast<int>(s)};
    index_of[s] = out.tensors.size();
    out.tensors.push_back(std::move(t));
  }
  if (out.tensors.empty())
    throw Error(ErrorCode::NoUsableRows, occ.word().str() + ": no rows to train sense tensors on");
  for (std::size_t s = 0; s < k; ++s) out.tensor_for_sense.push_back(index_of.at(target[s]));
  return out;
}

std::vector<DisambiguatedWord> disambiguate_sentence(const SemanticSpace& space, std::span<const SentenceWord> sentence,
                                                     const InventoryMap& inventories, const TensorLexicon& lexicon) {
  std::vector<Token> tokens;
  tokens.reserve(sentence.size());
  for (const auto& w : sentence) tokens.push_back(w.token);

  std::vector<DisambiguatedWord> out;
  for (const auto& w : sentence) {
    if (!w.token.content()) continue;
    auto inv = inventories.find(w.token);
    if (inv == inventories.end())
      throw Error(ErrorCode::MissingInventory, w.token.str() + " has no sense inventory");
    const ContextVector ctx = context_vector(space, tokens, w.token);
    DisambiguatedWord d;
    d.token = w.token;
    d.chosen_sense = choose_sense(inv->second, ctx.vector);
    d.vector = inv->second.centroids.at(d.chosen_sense);
    if (w.tensor_order > 0) {
      const SenseTensors* senses = lexicon.find_senses(w.token, w.tensor_order);
      if (!senses)
        throw Error(ErrorCode::MissingSenseTensor,
                    w.token.str() + " has no order-" + std::to_string(w.tensor_order) + " sense tensors");
      d.tensor = senses->for_sense(d.chosen_sense);
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace frobsem
