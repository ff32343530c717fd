#ifndef FROBSEM_DISAMB_HPP
#define FROBSEM_DISAMB_HPP

// Prior disambiguation: every word of a sentence is replaced by the sense
// nearest to the context formed by the other words, before composition.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "frobsem/linalg.hpp"
#include "frobsem/semspace.hpp"
#include "frobsem/senses.hpp"
#include "frobsem/tensorize.hpp"

namespace frobsem {

using InventoryMap = std::map<Token, SenseInventory>;

InventoryMap index_inventories(std::vector<SenseInventory> inventories);

// Sense whose centroid is nearest to `context` under the inventory's metric;
// ties go to the lowest index.
std::size_t choose_sense(const SenseInventory& inventory, const Vector& context);

// One summed tensor per sense from the rows whose context id belongs to it.
// Senses with fewer than three rows are folded into the dominant sense (most
// rows, lowest index on ties) and redirect to its tensor. Throws
// UncoveredContext when a row has no context id or one unknown to the
// inventory, NoUsableRows when a sense's rows are all out of vocabulary.
SenseTensors train_sense_tensors(const SemanticSpace& space, const ArgumentOccurrences& occ,
                                 const SenseInventory& inventory);

// A sentence word and the tensor order it needs; order 0 asks for a vector.
struct SentenceWord {
  Token token;
  int tensor_order = 0;
};

struct DisambiguatedWord {
  Token token;
  std::size_t chosen_sense = 0;
  Vector vector;                     // sense centroid
  std::optional<VerbTensor> tensor;  // sense tensor for relational words
};

// Function words are dropped; the rest come back in sentence order. Throws
// MissingInventory for a content word without an inventory and
// MissingSenseTensor for a relational word without sense tensors.
std::vector<DisambiguatedWord> disambiguate_sentence(const SemanticSpace& space, std::span<const SentenceWord> sentence,
                                                     const InventoryMap& inventories, const TensorLexicon& lexicon);

}  // namespace frobsem

#endif  // FROBSEM_DISAMB_HPP
