#ifndef FROBSEM_COMPOSE_HPP
#define FROBSEM_COMPOSE_HPP

// Composition models. Sentence and noun spaces coincide, so every model
// takes and returns objects over the same basis; mixed dimensions are
// rejected with DimensionMismatch rather than padded.
//
// Order-3 tensors use the axis order (SUBJ, IOBJ, DOBJ); matrices of
// transitive words use (SUBJ, OBJ).

#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "frobsem/linalg.hpp"

namespace frobsem {

enum class Model { VerbsOnly, Additive, Multiplicative, Relational, CopySubject, CopyObject, FrobeniusAdditive };

std::string_view to_string(Model m);
// Accepts the CLI spellings: verbs_only, additive, multiplicative,
// relational, copy_subject, copy_object, frobenius_additive.
Model parse_model(std::string_view s);

struct CompositionResult {
  enum class Kind { Vector, Matrix };

  std::variant<Vector, Matrix> payload;
  Model model = Model::Additive;
  std::optional<int> frobenius_index;  // 0-based argument that was copied

  Kind kind() const noexcept { return payload.index() == 0 ? Kind::Vector : Kind::Matrix; }
};

// Cosine between two results of the same kind and shape (matrices compare
// over their flattened entries).
double cosine(const CompositionResult& a, const CompositionResult& b);

// -- vector mixtures ---------------------------------------------------------------

// Sum of weights[i] * vectors[i]; empty weights means all ones.
Vector additive(std::span<const Vector> vectors, std::span<const double> weights = {});
Vector multiplicative(std::span<const Vector> vectors);

// -- transitive sentences ----------------------------------------------------------

// verb (.) (subj (x) obj)
Matrix relational(const Vector& subj, const Matrix& verb, const Vector& obj);
// subj (.) (verb x obj)
Vector copy_subject(const Vector& subj, const Matrix& verb, const Vector& obj);
// obj (.) (verb^T x subj)
Vector copy_object(const Vector& subj, const Matrix& verb, const Vector& obj);
Vector frobenius_additive(const Vector& subj, const Matrix& verb, const Vector& obj);
// subj (.) (verb_o x obj) + (subj^T x verb_s) (.) obj
Vector frobenius_additive(const Vector& subj, const Matrix& verb_s, const Matrix& verb_o, const Vector& obj);

// Fully categorical contraction of an order-3 verb with its two arguments;
// the middle leg carries the sentence.
Vector categorical_transitive(const Vector& subj, const Tensor3& verb, const Vector& obj);

// -- ditransitive sentences ---------------------------------------------------------

enum class DitransitiveCopy { Subj, Iobj, Dobj };

Vector ditransitive_frobenius(const Vector& subj, const Tensor3& verb, const Vector& iobj, const Vector& dobj,
                              DitransitiveCopy copy);

// -- verb phrases -------------------------------------------------------------------

// Delta(verb x obj)
Matrix vp_copy_subject(const Matrix& verb, const Vector& obj);
// result(i, j) = verb(i, j) * obj[j]
Matrix vp_copy_object(const Matrix& verb, const Vector& obj);

// -- coordination -------------------------------------------------------------------

// Frobenius merges conjuncts point-wise; Additive sums them instead.
enum class CoordMode { Frobenius, Additive };

Vector coord_np(const Vector& a, const Vector& b, CoordMode mode = CoordMode::Frobenius);
// (subj^T x v1) merged with the row-sum of v2.
Vector coord_vp_intransitive(const Vector& subj, const Matrix& v1, const Matrix& v2,
                             CoordMode mode = CoordMode::Frobenius);
// subj (.) merge(v1 x o1, v2 x o2)
Vector coord_vp_transitive(const Vector& subj, const Matrix& v1, const Vector& o1, const Matrix& v2, const Vector& o2,
                           CoordMode mode = CoordMode::Frobenius);
Vector coord_sentence(const Vector& s1, const Vector& s2, CoordMode mode = CoordMode::Frobenius);

// -- function words -----------------------------------------------------------------

enum class PrepModel { CopySubject, CopyObject };

// A verb-modifying preposition applied to the sentence it modifies and its
// object noun, with the same closed forms as a transitive verb.
Vector compose_prep_verb(const Vector& sentence_part, const Matrix& prep, const Vector& noun, PrepModel model);

// Complementizers such as "that" pass their sentence through unchanged.
Vector complementizer_pass(const Vector& s);

enum class RelCase { Subject, Object };

// Subject relative ("men who like sports"): copy_subject(head, verb, other).
// Object relative ("sports that men like"): copy_object(other, verb, head).
Vector rel_pronoun(const Vector& head, const Matrix& verb, const Vector& other, RelCase rel_case);

}  // namespace frobsem

#endif  // FROBSEM_COMPOSE_HPP
