#ifndef FROBSEM_TENSORIZE_HPP
#define FROBSEM_TENSORIZE_HPP

// Relational word tensors built by argument summing: the tensor of a word is
// the sum, over its corpus occurrences, of the tensor products of its
// argument vectors in role order.
//
// Occurrence files hold one row per line:
//   word_POS<TAB>ROLE=lemma_POS;ROLE=lemma_POS[<TAB>context_id]
// The optional context id is the corpus sentence the row was extracted from.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "frobsem/linalg.hpp"
#include "frobsem/semspace.hpp"

namespace frobsem {

enum class Role { Subj, Obj, Iobj, Dobj, ModifiedVerb, NounHead, BareInf, Prep };

std::string_view to_string(Role role);
Role parse_role(std::string_view s);

struct Argument {
  Role role;
  Token token;

  bool operator==(const Argument&) const = default;
};

struct OccurrenceRow {
  std::vector<Argument> args;
  std::optional<std::size_t> context_id;

  bool operator==(const OccurrenceRow&) const = default;
};

// Rows of one relational word sharing one role signature. PREP arguments
// key a phrasal lexeme and do not count towards the arity.
class ArgumentOccurrences {
 public:
  // Throws MixedRoles if a row's roles differ from `roles`, InvalidArgument
  // if the arity is not 1, 2 or 3.
  ArgumentOccurrences(Token word, std::vector<Role> roles, std::vector<OccurrenceRow> rows);
  // Signature taken from the first row; throws NoUsableRows when empty.
  static ArgumentOccurrences from_rows(Token word, std::vector<OccurrenceRow> rows);

  const Token& word() const noexcept { return word_; }
  const std::vector<Role>& roles() const noexcept { return roles_; }
  const std::vector<OccurrenceRow>& rows() const noexcept { return rows_; }
  std::size_t arity() const noexcept { return arity_; }
  // Roles that become tensor legs, in order.
  std::vector<Role> tensor_roles() const;

 private:
  Token word_;
  std::vector<Role> roles_;
  std::vector<OccurrenceRow> rows_;
  std::size_t arity_ = 0;
};

enum class ProvenanceKind { Summed, SummedSense, Regressed, Separable };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Summed;
  int sense = -1;  // only for SummedSense

  std::string str() const;
  static Provenance parse(std::string_view s);
  bool operator==(const Provenance&) const = default;
};

using TensorPayload = std::variant<Vector, Matrix, Tensor3>;

struct VerbTensor {
  Token word;
  TensorPayload payload;
  Provenance provenance;
  std::vector<Role> role_signature;
  std::size_t used_rows = 0;
  std::size_t skipped_rows = 0;

  int order() const noexcept { return static_cast<int>(payload.index()) + 1; }
  // Typed accessors; throw DimensionMismatch on the wrong order.
  const Vector& vector() const;
  const Matrix& matrix() const;
  const Tensor3& tensor3() const;

  bool operator==(const VerbTensor&) const = default;
};

// Throws NoUsableRows when every row has an out-of-vocabulary argument.
VerbTensor sum_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);
// (sum of subjects) (x) (sum of objects); arity-2 only.
VerbTensor separable_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);
// Diagonal matrix of the summed object vectors.
VerbTensor vp_verb_tensor(const SemanticSpace& space, const Token& verb, const std::vector<Token>& objects);
// Rows with roles (MODIFIED_VERB, OBJ) or (NOUN_HEAD, OBJ).
VerbTensor preposition_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);
// Rows with roles (SUBJ, PREP, OBJ); the resulting word is `verb_prep`.
// Throws MixedPreposition when rows disagree on the preposition.
VerbTensor phrasal_verb_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);
// Rows with roles (SUBJ, BARE_INF).
VerbTensor complemented_verb_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);

// Dispatches on the role signature to one of the builders above.
VerbTensor build_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ);

struct OccurrenceLine {
  Token word;
  OccurrenceRow row;
};

OccurrenceLine parse_occurrence_line(std::string_view line);
std::vector<OccurrenceLine> read_occurrences(const std::string& path);
// Groups lines by (word, role signature) in first-appearance order.
std::vector<ArgumentOccurrences> group_occurrences(const std::vector<OccurrenceLine>& lines);

// Per-sense tensors for one word. Senses merged into another one have no
// tensor of their own; tensor_for_sense redirects them.
struct SenseTensors {
  Token word;
  std::vector<VerbTensor> tensors;
  std::vector<std::size_t> tensor_for_sense;

  const VerbTensor& for_sense(std::size_t sense) const;
};

// Ambiguous and per-sense tensors indexed by word and order.
class TensorLexicon {
 public:
  void add(VerbTensor tensor);
  void add_senses(SenseTensors senses);

  const VerbTensor* find(const Token& word, int order) const;
  const SenseTensors* find_senses(const Token& word, int order) const;

  const std::map<std::pair<Token, int>, VerbTensor>& tensors() const noexcept { return tensors_; }
  const std::map<std::pair<Token, int>, SenseTensors>& senses() const noexcept { return senses_; }

 private:
  std::map<std::pair<Token, int>, VerbTensor> tensors_;
  std::map<std::pair<Token, int>, SenseTensors> senses_;
};

std::string serialize_lexicon(const TensorLexicon& lex);
TensorLexicon parse_lexicon(const std::vector<std::string>& lines);
void save_lexicon(const TensorLexicon& lex, const std::string& path);
TensorLexicon load_lexicon(const std::string& path);

}  // namespace frobsem

#endif  // FROBSEM_TENSORIZE_HPP
