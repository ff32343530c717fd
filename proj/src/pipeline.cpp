#include "frobsem/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <limits>
#include <optional>
#include <thread>

#include "frobsem/metrics.hpp"
#include "frobsem/textio.hpp"

namespace frobsem {

namespace {

constexpr SlotRole kAllRoles[] = {SlotRole::Subj, SlotRole::Verb, SlotRole::Obj,   SlotRole::Iobj, SlotRole::Dobj,
                                  SlotRole::Adj,  SlotRole::Noun, SlotRole::Verb2, SlotRole::Obj2};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view to_string(SlotRole r) {
  switch (r) {
    case SlotRole::Subj: return "SUBJ";
    case SlotRole::Verb: return "VERB";
    case SlotRole::Obj: return "OBJ";
    case SlotRole::Iobj: return "IOBJ";
    case SlotRole::Dobj: return "DOBJ";
    case SlotRole::Adj: return "ADJ";
    case SlotRole::Noun: return "NOUN";
    case SlotRole::Verb2: return "VERB2";
    case SlotRole::Obj2: return "OBJ2";
  }
  return "SUBJ";
}

SlotRole parse_slot_role(std::string_view s) {
  const auto u = upper(s);
  for (SlotRole r : kAllRoles)
    if (to_string(r) == u) return r;
  throw Error(ErrorCode::FormatError, "unknown sentence role '" + std::string(s) + "'");
}

TaggedSentence parse_tagged_sentence(std::string_view text) {
  TaggedSentence out;
  for (auto item : textio::split(text, ";")) {
    item = textio::trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::FormatError, "expected ROLE=lemma_POS, got '" + std::string(item) + "'");
    const SlotRole role = parse_slot_role(textio::trim(item.substr(0, eq)));
    for (const auto& rt : out)
      if (rt.role == role) throw Error(ErrorCode::FormatError, "role " + std::string(to_string(role)) + " repeated");
    out.push_back({role, Token::parse(textio::trim(item.substr(eq + 1)))});
  }
  if (out.empty()) throw Error(ErrorCode::FormatError, "empty sentence");
  return out;
}

std::string format_tagged_sentence(const TaggedSentence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(';');
    out += std::string(to_string(s[i].role)) + "=" + s[i].token.str();
  }
  return out;
}

DatasetEntry parse_dataset_line(std::string_view line) {
  const auto cols = textio::split_exact(line, '\t');
  if (cols.size() != 4) throw Error(ErrorCode::FormatError, "dataset line needs 4 tab-separated columns");
  DatasetEntry e;
  e.id = std::string(textio::trim(cols[0]));
  if (e.id.empty()) throw Error(ErrorCode::FormatError, "empty pair id");
  e.first = parse_tagged_sentence(cols[1]);
  e.second = parse_tagged_sentence(cols[2]);
  for (auto f : textio::split(cols[3], ",")) e.scores.push_back(textio::parse_double(textio::trim(f)));
  if (e.scores.empty()) throw Error(ErrorCode::FormatError, "pair " + e.id + " has no scores");
  return e;
}

SentencePairDataset read_dataset(const std::string& path) {
  SentencePairDataset out;
  const auto lines = textio::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = textio::trim(lines[i]);
    if (t.empty() || t.front() == '#') continue;
    try {
      out.entries.push_back(parse_dataset_line(lines[i]));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(i + 1) + ": " + e.detail());
    }
  }
  return out;
}

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::Intransitive: return "intransitive";
    case Structure::Transitive: return "transitive";
    case Structure::Ditransitive: return "ditransitive";
    case Structure::AdjNoun: return "adjective-noun";
    case Structure::VerbPhrase: return "verb phrase";
    case Structure::CoordVerbPhrase: return "coordinated verb phrase";
  }
  return "transitive";
}

Structure detect_structure(const TaggedSentence& s) {
  std::vector<SlotRole> roles;
  for (const auto& rt : s) roles.push_back(rt.role);
  std::sort(roles.begin(), roles.end());
  auto is = [&](std::vector<SlotRole> want) {
    std::sort(want.begin(), want.end());
    return roles == want;
  };
  using R = SlotRole;
  if (is({R::Subj, R::Verb})) return Structure::Intransitive;
  if (is({R::Subj, R::Verb, R::Obj})) return Structure::Transitive;
  if (is({R::Subj, R::Verb, R::Iobj, R::Dobj})) return Structure::Ditransitive;
  if (is({R::Adj, R::Noun})) return Structure::AdjNoun;
  if (is({R::Verb, R::Obj})) return Structure::VerbPhrase;
  if (is({R::Subj, R::Verb, R::Obj, R::Verb2, R::Obj2})) return Structure::CoordVerbPhrase;
  throw Error(ErrorCode::UnsupportedStructure, "no composition rule for " + format_tagged_sentence(s));
}

std::string_view to_string(Aggregate a) { return a == Aggregate::Raw ? "raw" : "mean"; }

Aggregate parse_aggregate(std::string_view s) {
  if (s == "raw") return Aggregate::Raw;
  if (s == "mean") return Aggregate::Mean;
  throw Error(ErrorCode::InvalidArgument, "unknown aggregate '" + std::string(s) + "'");
}

namespace {

bool tensor_model(Model m) {
  return m == Model::Relational || m == Model::CopySubject || m == Model::CopyObject || m == Model::FrobeniusAdditive;
}

int tensor_order_for(Structure st, SlotRole role) {
  const bool verbal = role == SlotRole::Verb || role == SlotRole::Verb2;
  switch (st) {
    case Structure::Intransitive: return verbal ? 1 : 0;
    case Structure::Transitive:
    case Structure::VerbPhrase:
    case Structure::CoordVerbPhrase: return verbal ? 2 : 0;
    case Structure::Ditransitive: return verbal ? 3 : 0;
    case Structure::AdjNoun: return role == SlotRole::Adj ? 1 : 0;
  }
  return 0;
}

struct Slot {
  Vector vector;
  std::optional<VerbTensor> tensor;
};

class Words {
 public:
  Words(const TaggedSentence& s, std::vector<Slot> slots) : sentence_(s), slots_(std::move(slots)) {}

  const Vector& vec(SlotRole r) const { return slots_[index(r)].vector; }
  const VerbTensor& tensor(SlotRole r) const { return *slots_[index(r)].tensor; }
  std::vector<Vector> all_vectors() const {
    std::vector<Vector> out;
    for (const auto& s : slots_) out.push_back(s.vector);
    return out;
  }

 private:
  std::size_t index(SlotRole r) const {
    for (std::size_t i = 0; i < sentence_.size(); ++i)
      if (sentence_[i].role == r) return i;
    throw Error(ErrorCode::UnsupportedStructure, "missing role " + std::string(to_string(r)));
  }

  const TaggedSentence& sentence_;
  std::vector<Slot> slots_;
};

Words gather(const TaggedSentence& s, Structure st, const PipelineResources& res, const PipelineConfig& cfg) {
  const bool need_tensors = tensor_model(cfg.model);
  std::vector<Slot> slots(s.size());
  for (const auto& rt : s)
    if (!rt.token.content())
      throw Error(ErrorCode::InvalidArgument, rt.token.str() + " is a function word in a content slot");

  if (cfg.disambiguate) {
    if (!res.inventories) throw Error(ErrorCode::MissingInventory, "disambiguation needs sense inventories");
    std::vector<SentenceWord> words;
    for (const auto& rt : s) words.push_back({rt.token, need_tensors ? tensor_order_for(st, rt.role) : 0});
    auto chosen = disambiguate_sentence(res.space, words, *res.inventories, res.lexicon);
    for (std::size_t i = 0; i < s.size(); ++i) {
      slots[i].vector = std::move(chosen[i].vector);
      slots[i].tensor = std::move(chosen[i].tensor);
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) {
      slots[i].vector = res.space.at(s[i].token);
      const int order = need_tensors ? tensor_order_for(st, s[i].role) : 0;
      if (order > 0) {
        const VerbTensor* t = res.lexicon.find(s[i].token, order);
        if (!t)
          throw Error(ErrorCode::MissingWord,
                      s[i].token.str() + " has no order-" + std::to_string(order) + " tensor");
        slots[i].tensor = *t;
      }
    }
  }
  return Words(s, std::move(slots));
}

CompositionResult vector_result(Vector v, Model m, std::optional<int> index = std::nullopt) {
  return CompositionResult{std::move(v), m, index};
}

CompositionResult matrix_result(Matrix v, Model m, std::optional<int> index = std::nullopt) {
  return CompositionResult{std::move(v), m, index};
}

[[noreturn]] void unsupported(Model m, Structure st) {
  throw Error(ErrorCode::UnsupportedStructure,
              "model " + std::string(to_string(m)) + " is not defined for " + std::string(to_string(st)) + " sentences");
}

}  // namespace

CompositionResult compose_sentence(const TaggedSentence& s, const PipelineResources& res, const PipelineConfig& cfg) {
  const Structure st = detect_structure(s);
  const Words w = gather(s, st, res, cfg);
  const Model m = cfg.model;
  using R = SlotRole;

  switch (m) {
    case Model::VerbsOnly:
      if (st == Structure::AdjNoun) return vector_result(w.vec(R::Adj), m);
      if (st == Structure::CoordVerbPhrase) return vector_result(w.vec(R::Verb) + w.vec(R::Verb2), m);
      return vector_result(w.vec(R::Verb), m);
    case Model::Additive: {
      const auto vs = w.all_vectors();
      return vector_result(additive(vs), m);
    }
    case Model::Multiplicative: {
      const auto vs = w.all_vectors();
      return vector_result(multiplicative(vs), m);
    }
    default: break;
  }

  switch (st) {
    case Structure::Intransitive:
      return vector_result(pointwise(w.vec(R::Subj), w.tensor(R::Verb).vector()), m, 0);
    case Structure::AdjNoun:
      return vector_result(pointwise(w.tensor(R::Adj).vector(), w.vec(R::Noun)), m, 1);
    case Structure::Transitive: {
      const Vector& subj = w.vec(R::Subj);
      const Vector& obj = w.vec(R::Obj);
      const Matrix& verb = w.tensor(R::Verb).matrix();
      switch (m) {
        case Model::Relational: return matrix_result(relational(subj, verb, obj), m);
        case Model::CopySubject: return vector_result(copy_subject(subj, verb, obj), m, 0);
        case Model::CopyObject: return vector_result(copy_object(subj, verb, obj), m, 1);
        default: return vector_result(frobenius_additive(subj, verb, obj), m);
      }
    }
    case Structure::Ditransitive: {
      const Vector& subj = w.vec(R::Subj);
      const Vector& iobj = w.vec(R::Iobj);
      const Vector& dobj = w.vec(R::Dobj);
      const Tensor3& verb = w.tensor(R::Verb).tensor3();
      switch (m) {
        case Model::Relational: unsupported(m, st);
        case Model::CopySubject:
          return vector_result(ditransitive_frobenius(subj, verb, iobj, dobj, DitransitiveCopy::Subj), m, 0);
        case Model::CopyObject:
          return vector_result(ditransitive_frobenius(subj, verb, iobj, dobj, DitransitiveCopy::Dobj), m, 2);
        default:
          return vector_result(ditransitive_frobenius(subj, verb, iobj, dobj, DitransitiveCopy::Subj) +
                                   ditransitive_frobenius(subj, verb, iobj, dobj, DitransitiveCopy::Iobj) +
                                   ditransitive_frobenius(subj, verb, iobj, dobj, DitransitiveCopy::Dobj),
                               m);
      }
    }
    case Structure::VerbPhrase: {
      const Vector& obj = w.vec(R::Obj);
      const Matrix& verb = w.tensor(R::Verb).matrix();
      switch (m) {
        case Model::Relational: unsupported(m, st);
        case Model::CopySubject: return matrix_result(vp_copy_subject(verb, obj), m, 0);
        case Model::CopyObject: return matrix_result(vp_copy_object(verb, obj), m, 1);
        default: return matrix_result(vp_copy_subject(verb, obj) + vp_copy_object(verb, obj), m);
      }
    }
    case Structure::CoordVerbPhrase: {
      const Vector& subj = w.vec(R::Subj);
      const Vector& o1 = w.vec(R::Obj);
      const Vector& o2 = w.vec(R::Obj2);
      const Matrix& v1 = w.tensor(R::Verb).matrix();
      const Matrix& v2 = w.tensor(R::Verb2).matrix();
      const Vector cs = coord_vp_transitive(subj, v1, o1, v2, o2, cfg.coord);
      const Vector co = coord_sentence(copy_object(subj, v1, o1), copy_object(subj, v2, o2), cfg.coord);
      switch (m) {
        case Model::Relational: unsupported(m, st);
        case Model::CopySubject: return vector_result(cs, m, 0);
        case Model::CopyObject: return vector_result(co, m);
        default: return vector_result(cs + co, m);
      }
    }
  }
  unsupported(m, st);
}

PipelineReport run_pipeline(const SentencePairDataset& data, const PipelineResources& res, const PipelineConfig& cfg) {
  const std::size_t n = data.entries.size();
  if (n == 0) throw Error(ErrorCode::Empty, "dataset has no entries");
  PipelineReport report;
  report.pairs.resize(n);
  std::vector<std::exception_ptr> failures(n);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& e = data.entries[i];
      try {
        const auto a = compose_sentence(e.first, res, cfg);
        const auto b = compose_sentence(e.second, res, cfg);
        report.pairs[i] = PairResult{e.id, cosine(a, b), e.scores};
      } catch (const Error& err) {
        failures[i] = std::make_exception_ptr(Error(err.code(), "pair " + e.id + ": " + err.detail()));
      }
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(cfg.threads, 1, n);
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = t * chunk, e = std::min(n, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::vector<double> model, human;
  for (const auto& p : report.pairs) {
    if (cfg.aggregate == Aggregate::Raw) {
      for (double s : p.scores) {
        model.push_back(p.cosine);
        human.push_back(s);
      }
    } else {
      double mean = 0.0;
      for (double s : p.scores) mean += s;
      model.push_back(p.cosine);
      human.push_back(mean / static_cast<double>(p.scores.size()));
    }
  }
  try {
    report.spearman = spearman_rho(model, human);
  } catch (const Error& e) {
    // One pair, or constant scores: cosines are still reported.
    if (e.code() != ErrorCode::LengthMismatch && e.code() != ErrorCode::DegenerateRanks) throw;
    report.spearman = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

std::string format_report(const PipelineReport& report) {
  std::string out;
  for (const auto& p : report.pairs) out += p.id + "\t" + textio::format_double(p.cosine) + "\n";
  out += "# spearman " + textio::format_double(report.spearman) + "\n";
  return out;
}

}  // namespace frobsem
