#ifndef FROBSEM_PIPELINE_HPP
#define FROBSEM_PIPELINE_HPP

// Sentence-pair similarity evaluation: compose both sentences of each pair,
// compare by cosine, correlate with human judgements.
//
// Dataset lines:
//   id<TAB>ROLE=lemma_POS;...<TAB>ROLE=lemma_POS;...<TAB>score[,score...]
// with roles SUBJ, VERB, OBJ, IOBJ, DOBJ, ADJ, NOUN, VERB2, OBJ2.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frobsem/compose.hpp"
#include "frobsem/disamb.hpp"
#include "frobsem/semspace.hpp"
#include "frobsem/tensorize.hpp"

namespace frobsem {

enum class SlotRole { Subj, Verb, Obj, Iobj, Dobj, Adj, Noun, Verb2, Obj2 };

std::string_view to_string(SlotRole r);
SlotRole parse_slot_role(std::string_view s);

struct RoleToken {
  SlotRole role;
  Token token;

  bool operator==(const RoleToken&) const = default;
};

using TaggedSentence = std::vector<RoleToken>;

// `ROLE=lemma_POS;...`
TaggedSentence parse_tagged_sentence(std::string_view text);
std::string format_tagged_sentence(const TaggedSentence& s);

struct DatasetEntry {
  std::string id;
  TaggedSentence first;
  TaggedSentence second;
  std::vector<double> scores;
};

struct SentencePairDataset {
  std::vector<DatasetEntry> entries;
};

DatasetEntry parse_dataset_line(std::string_view line);
// Blank lines and lines starting with '#' are skipped.
SentencePairDataset read_dataset(const std::string& path);

// Grammatical shapes the pipeline can compose, keyed by the exact role set:
//   SUBJ VERB                 intransitive (verb tensor of order 1)
//   SUBJ VERB OBJ             transitive (order 2)
//   SUBJ VERB IOBJ DOBJ       ditransitive (order 3)
//   ADJ NOUN                  adjective-noun (adjective tensor of order 1)
//   VERB OBJ                  verb phrase (order 2)
//   SUBJ VERB OBJ VERB2 OBJ2  coordinated verb phrases (order 2 each)
enum class Structure { Intransitive, Transitive, Ditransitive, AdjNoun, VerbPhrase, CoordVerbPhrase };

std::string_view to_string(Structure s);
// Throws UnsupportedStructure.
Structure detect_structure(const TaggedSentence& s);

enum class Aggregate { Raw, Mean };

std::string_view to_string(Aggregate a);
Aggregate parse_aggregate(std::string_view s);

struct PipelineConfig {
  Model model = Model::CopyObject;
  bool disambiguate = false;
  CoordMode coord = CoordMode::Frobenius;
  Aggregate aggregate = Aggregate::Raw;
  std::size_t threads = 1;
};

struct PipelineResources {
  const SemanticSpace& space;
  const TensorLexicon& lexicon;
  const InventoryMap* inventories = nullptr;  // required when disambiguating
};

// Composes one sentence. Errors from the lower layers propagate unchanged.
CompositionResult compose_sentence(const TaggedSentence& s, const PipelineResources& res, const PipelineConfig& cfg);

struct PairResult {
  std::string id;
  double cosine = 0.0;
  std::vector<double> scores;
};

struct PipelineReport {
  std::vector<PairResult> pairs;
  double spearman = 0.0;
};

// Per-pair cosines in input order and Spearman's rho against the human
// scores (every judgement, or their per-pair mean). Spearman is NaN when it
// is undefined (fewer than two points or a constant list). Errors carry the
// entry id in their message.
PipelineReport run_pipeline(const SentencePairDataset& data, const PipelineResources& res, const PipelineConfig& cfg);

// `pair_id<TAB>cosine` lines and a final `# spearman <value>` line.
std::string format_report(const PipelineReport& report);

}  // namespace frobsem

#endif  // FROBSEM_PIPELINE_HPP
