#include "frobsem/compose.hpp"

#include <string>

namespace frobsem {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected " + std::to_string(n) + "x" +
                                                  std::to_string(n) + " matrix, got " + std::to_string(m.rows()) +
                                                  "x" + std::to_string(m.cols()));
}

void require_dim(const Vector& v, std::size_t n, const char* what) {
  if (v.dim() != n)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": expected dim " + std::to_string(n) + ", got " + std::to_string(v.dim()));
}

void require_cube(const Tensor3& t, std::size_t n, const char* what) {
  if (t.d1() != n || t.d2() != n || t.d3() != n)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": tensor is not " + std::to_string(n) + "^3");
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::VerbsOnly: return "verbs_only";
    case Model::Additive: return "additive";
    case Model::Multiplicative: return "multiplicative";
    case Model::Relational: return "relational";
    case Model::CopySubject: return "copy_subject";
    case Model::CopyObject: return "copy_object";
    case Model::FrobeniusAdditive: return "frobenius_additive";
  }
  return "additive";
}

Model parse_model(std::string_view s) {
  for (Model m : {Model::VerbsOnly, Model::Additive, Model::Multiplicative, Model::Relational, Model::CopySubject,
                  Model::CopyObject, Model::FrobeniusAdditive})
    if (to_string(m) == s) return m;
  throw Error(ErrorCode::InvalidArgument, "unknown model '" + std::string(s) + "'");
}

double cosine(const CompositionResult& a, const CompositionResult& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::DimensionMismatch, "cannot compare a vector with a matrix");
  if (a.kind() == CompositionResult::Kind::Vector) return cosine(std::get<Vector>(a.payload), std::get<Vector>(b.payload));
  return cosine(std::get<Matrix>(a.payload), std::get<Matrix>(b.payload));
}

Vector additive(std::span<const Vector> vectors, std::span<const double> weights) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "additive needs at least one vector");
  if (!weights.empty() && weights.size() != vectors.size())
    throw Error(ErrorCode::DimensionMismatch, "additive: " + std::to_string(weights.size()) + " weights for " +
                                                  std::to_string(vectors.size()) + " vectors");
  Vector acc(vectors.front().dim());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_dim(vectors[i], acc.dim(), "additive");
    acc = acc + (weights.empty() ? 1.0 : weights[i]) * vectors[i];
  }
  return acc;
}

Vector multiplicative(std::span<const Vector> vectors) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "multiplicative needs at least one vector");
  Vector acc = vectors.front();
  for (std::size_t i = 1; i < vectors.size(); ++i) acc = pointwise(acc, vectors[i]);
  return acc;
}

Matrix relational(const Vector& subj, const Matrix& verb, const Vector& obj) {
  require_dim(obj, subj.dim(), "relational");
  require_square(verb, subj.dim(), "relational");
  return pointwise(verb, tensor_product(subj, obj));
}

Vector copy_subject(const Vector& subj, const Matrix& verb, const Vector& obj) {
  require_dim(obj, subj.dim(), "copy_subject");
  require_square(verb, subj.dim(), "copy_subject");
  return pointwise(subj, matvec(verb, obj));
}

Vector copy_object(const Vector& subj, const Matrix& verb, const Vector& obj) {
  require_dim(obj, subj.dim(), "copy_object");
  require_square(verb, subj.dim(), "copy_object");
  return pointwise(obj, vecmat(subj, verb));
}

Vector frobenius_additive(const Vector& subj, const Matrix& verb, const Vector& obj) {
  return copy_subject(subj, verb, obj) + copy_object(subj, verb, obj);
}

Vector frobenius_additive(const Vector& subj, const Matrix& verb_s, const Matrix& verb_o, const Vector& obj) {
  require_dim(obj, subj.dim(), "frobenius_additive");
  require_square(verb_s, subj.dim(), "frobenius_additive");
  require_square(verb_o, subj.dim(), "frobenius_additive");
  return pointwise(subj, matvec(verb_o, obj)) + pointwise(vecmat(subj, verb_s), obj);
}

Vector categorical_transitive(const Vector& subj, const Tensor3& verb, const Vector& obj) {
  require_dim(obj, subj.dim(), "categorical_transitive");
  require_cube(verb, subj.dim(), "categorical_transitive");
  return matvec(contract(verb, 0, subj), obj);
}

Vector ditransitive_frobenius(const Vector& subj, const Tensor3& verb, const Vector& iobj, const Vector& dobj,
                              DitransitiveCopy copy) {
  const std::size_t n = subj.dim();
  require_dim(iobj, n, "ditransitive");
  require_dim(dobj, n, "ditransitive");
  require_cube(verb, n, "ditransitive");
  switch (copy) {
    case DitransitiveCopy::Subj:
      return pointwise(subj, matvec(contract(verb, 1, iobj), dobj));
    case DitransitiveCopy::Dobj:
      return pointwise(dobj, vecmat(subj, contract(verb, 1, iobj)));
    case DitransitiveCopy::Iobj:
      return pointwise(iobj, vecmat(subj, contract(verb, 2, dobj)));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ditransitive variant");
}

Matrix vp_copy_subject(const Matrix& verb, const Vector& obj) {
  require_square(verb, obj.dim(), "vp_copy_subject");
  return frobenius_copy(matvec(verb, obj));
}

Matrix vp_copy_object(const Matrix& verb, const Vector& obj) {
  require_square(verb, obj.dim(), "vp_copy_object");
  Matrix out = verb;
  for (std::size_t i = 0; i < verb.rows(); ++i)
    for (std::size_t j = 0; j < verb.cols(); ++j) out(i, j) *= obj[j];
  return out;
}

namespace {

Vector merge(const Vector& a, const Vector& b, CoordMode mode) {
  return mode == CoordMode::Frobenius ? pointwise(a, b) : a + b;
}

}  // namespace

Vector coord_np(const Vector& a, const Vector& b, CoordMode mode) { return merge(a, b, mode); }

Vector coord_vp_intransitive(const Vector& subj, const Matrix& v1, const Matrix& v2, CoordMode mode) {
  require_square(v1, subj.dim(), "coord_vp_intransitive");
  require_square(v2, subj.dim(), "coord_vp_intransitive");
  return merge(vecmat(subj, v1), iota_delete(v2, Axis::Rows), mode);
}

Vector coord_vp_transitive(const Vector& subj, const Matrix& v1, const Vector& o1, const Matrix& v2, const Vector& o2,
                           CoordMode mode) {
  const std::size_t n = subj.dim();
  require_square(v1, n, "coord_vp_transitive");
  require_square(v2, n, "coord_vp_transitive");
  require_dim(o1, n, "coord_vp_transitive");
  require_dim(o2, n, "coord_vp_transitive");
  return pointwise(subj, merge(matvec(v1, o1), matvec(v2, o2), mode));
}

Vector coord_sentence(const Vector& s1, const Vector& s2, CoordMode mode) { return merge(s1, s2, mode); }

Vector compose_prep_verb(const Vector& sentence_part, const Matrix& prep, const Vector& noun, PrepModel model) {
  return model == PrepModel::CopySubject ? copy_subject(sentence_part, prep, noun)
                                         : copy_object(sentence_part, prep, noun);
}

Vector complementizer_pass(const Vector& s) { return s; }

Vector rel_pronoun(const Vector& head, const Matrix& verb, const Vector& other, RelCase rel_case) {
  return rel_case == RelCase::Subject ? copy_subject(head, verb, other) : copy_object(other, verb, head);
}

}  // namespace frobsem
