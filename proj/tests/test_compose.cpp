#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frobsem/compose.hpp"
#include "oracles.hpp"

using namespace frobsem;
using doctest::Approx;

namespace {

const Vector kSubj{1, 2};
const Matrix kVerb{{1, 0}, {1, 1}};
const Vector kObj{1, 1};

bool near(std::span<const double> a, std::span<const double> b, double tol) {
  return oracle::max_abs_diff(a, b) <= tol;
}

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }

}  // namespace

TEST_CASE("model names") {
  for (Model m : {Model::VerbsOnly, Model::Additive, Model::Multiplicative, Model::Relational, Model::CopySubject,
                  Model::CopyObject, Model::FrobeniusAdditive})
    CHECK(parse_model(to_string(m)) == m);
  CHECK(parse_model("copy_object") == Model::CopyObject);
  CHECK_THROWS_AS(parse_model("kronecker"), Error);
}

TEST_CASE("vector mixtures") {
  const std::vector<Vector> unit{Vector{1, 0}, Vector{0, 1}};
  CHECK(additive(unit) == Vector{1, 1});
  const std::vector<Vector> two{Vector{1, 2}, Vector{3, 4}};
  const std::vector<double> w{2, 1};
  CHECK(additive(two, w) == Vector{5, 8});
  const std::vector<Vector> one{Vector{4, -1}};
  CHECK(additive(one) == Vector{4, -1});
  CHECK_THROWS_AS(additive(two, std::vector<double>{1}), Error);
  const std::vector<Vector> mixed{Vector{1, 2}, Vector{1, 2, 3}};
  CHECK_THROWS_AS(additive(mixed), Error);

  CHECK(multiplicative(two) == Vector{3, 8});
  const std::vector<Vector> river_bank{Vector{7, 1}, Vector{10, 10}};
  CHECK(multiplicative(river_bank) == Vector{70, 10});
  const std::vector<Vector> with_zero{Vector{7, 1}, Vector{0, 0}};
  CHECK(multiplicative(with_zero) == Vector{0, 0});
}

TEST_CASE("relational model") {
  CHECK(relational(kSubj, kVerb, kObj) == Matrix{{1, 0}, {2, 2}});
  CHECK(relational(kSubj, Matrix::ones(2, 2), kObj) == tensor_product(kSubj, kObj));
  const Matrix v{{3, 5}, {7, 11}};
  CHECK(relational(e(2, 0), v, e(2, 1)) == Matrix{{0, 5}, {0, 0}});
  CHECK_THROWS_AS(relational(kSubj, kVerb, Vector{1, 1, 1}), Error);
}

TEST_CASE("copy-subject model") {
  CHECK(copy_subject(kSubj, kVerb, kObj) == Vector{1, 4});
  CHECK(copy_subject(kSubj, kVerb, Vector{0, 0}) == Vector{0, 0});
  Matrix likes(4, 4);
  likes(0, 3) = likes(1, 3) = likes(3, 3) = 1.0;
  likes(2, 0) = 1.0;
  CHECK(copy_subject(e(4, 1), likes, e(4, 3)) == Vector{0, 1, 0, 0});
  CHECK_THROWS_AS(copy_subject(kSubj, Matrix::identity(3), kObj), Error);
}

TEST_CASE("copy-object model") {
  CHECK(copy_object(kSubj, kVerb, kObj) == Vector{3, 2});
  CHECK(copy_object(Vector{0, 0}, kVerb, kObj) == Vector{0, 0});
  CHECK(copy_object(kSubj, Matrix::identity(2), Vector{3, 5}) == Vector{3, 10});
}

TEST_CASE("frobenius additive model") {
  CHECK(frobenius_additive(kSubj, kVerb, kObj) == Vector{4, 6});
  CHECK(frobenius_additive(kSubj, Matrix::zeros(2, 2), kObj) == Vector{0, 0});
  // Two matrices: subj (.) (V_o x obj) + (subj^T x V_s) (.) obj.
  const Matrix vs{{2, 1}, {0, 3}};
  const Matrix vo{{1, 4}, {2, 0}};
  const Vector s{1, 2}, o{3, -1};
  // V_o x o = (3-4, 6) = (-1, 6); s (.) = (-1, 12)
  // s^T x V_s = (2, 1+6) = (2, 7); (.) o = (6, -7)
  CHECK(frobenius_additive(s, vs, vo, o) == Vector{5, 5});
  CHECK(frobenius_additive(s, kVerb, kVerb, o) == frobenius_additive(s, kVerb, o));
}

TEST_CASE("ditransitive copy variants") {
  const Tensor3 verb = tensor_product(e(2, 0), e(2, 1), e(2, 0));
  CHECK(ditransitive_frobenius(e(2, 0), verb, e(2, 1), e(2, 0), DitransitiveCopy::Subj) == e(2, 0));
  CHECK(ditransitive_frobenius(e(2, 1), verb, e(2, 1), e(2, 0), DitransitiveCopy::Subj) == Vector{0, 0});
  CHECK(ditransitive_frobenius(e(2, 0), verb, e(2, 1), e(2, 0), DitransitiveCopy::Dobj) == e(2, 0));
  CHECK(ditransitive_frobenius(e(2, 0), verb, e(2, 1), e(2, 0), DitransitiveCopy::Iobj) == e(2, 1));
  CHECK_THROWS_AS(ditransitive_frobenius(e(3, 0), verb, e(2, 1), e(2, 0), DitransitiveCopy::Subj), Error);
}

TEST_CASE("verb-phrase models") {
  CHECK(vp_copy_subject(kVerb, kObj) == Matrix{{1, 0}, {0, 2}});
  CHECK(vp_copy_object(kVerb, kObj) == Matrix{{1, 0}, {1, 1}});
  CHECK(vp_copy_subject(kVerb, Vector{0, 0}) == Matrix::zeros(2, 2));
  CHECK(vp_copy_object(kVerb, Vector{0, 0}) == Matrix::zeros(2, 2));
  CHECK(vp_copy_object(Matrix{{1, 2}, {3, 4}}, Vector{2, 3}) == Matrix{{2, 6}, {6, 12}});
}

TEST_CASE("coordination") {
  CHECK(coord_np(Vector{1, 2}, Vector{2, 1}) == Vector{2, 2});
  CHECK(coord_np(Vector{1, 2}, Vector::ones(2)) == Vector{1, 2});
  CHECK(coord_np(Vector{3, -2}, Vector{5, 7}) == coord_np(Vector{5, 7}, Vector{3, -2}));
  CHECK(coord_np(Vector{1, 2}, Vector{2, 1}, CoordMode::Additive) == Vector{3, 3});

  CHECK(coord_vp_intransitive(Vector{1, 0}, Matrix::identity(2), Matrix{{1, 2}, {3, 4}}) == Vector{4, 0});
  const Vector s{0.5, 3};
  const Matrix v1{{1, 2}, {-1, 1}};
  CHECK(coord_vp_intransitive(s, v1, Matrix::ones(2, 2)) == 2.0 * vecmat(s, v1));
  CHECK(coord_vp_intransitive(Vector{0, 0}, v1, Matrix::ones(2, 2)) == Vector{0, 0});

  CHECK(coord_vp_transitive(Vector{2, 3}, Matrix::identity(2), Vector{1, 1}, Matrix::identity(2), Vector{1, 0}) ==
        Vector{2, 0});
  CHECK(coord_vp_transitive(Vector{2, 3}, v1, Vector{0, 0}, Matrix::identity(2), Vector{1, 1}) == Vector{0, 0});
  const Vector o1{1, -2}, o2{0.5, 4};
  const Matrix v2{{2, 0}, {1, 3}};
  CHECK(coord_vp_transitive(s, v1, o1, v2, o2) == coord_vp_transitive(s, v2, o2, v1, o1));

  CHECK(coord_sentence(Vector{1, 2}, Vector{2, 1}) == Vector{2, 2});
  CHECK(coord_sentence(Vector{4, 5}, Vector::ones(2)) == Vector{4, 5});
  CHECK(coord_sentence(Vector{1, 3}, Vector{2, 5}) == coord_sentence(Vector{2, 5}, Vector{1, 3}));
}

TEST_CASE("prepositions, complementizers and relative pronouns") {
  CHECK(compose_prep_verb(Vector{1, 1}, Matrix::identity(2), Vector{2, 0}, PrepModel::CopyObject) == Vector{2, 0});
  CHECK(compose_prep_verb(Vector{3, 4}, Matrix::ones(2, 2), Vector{2, 5}, PrepModel::CopySubject) == Vector{21, 28});
  CHECK(compose_prep_verb(Vector{3, 4}, kVerb, Vector{0, 0}, PrepModel::CopySubject) == Vector{0, 0});

  for (const Vector& v : {Vector{0, 0}, Vector{1, -2}, Vector{3.5, 0, 1}}) CHECK(complementizer_pass(v) == v);

  CHECK(rel_pronoun(kSubj, kVerb, kObj, RelCase::Subject) == Vector{1, 4});
  CHECK(rel_pronoun(kObj, kVerb, kSubj, RelCase::Object) == Vector{3, 2});
  CHECK(rel_pronoun(kSubj, kVerb, Vector{0, 0}, RelCase::Subject) == Vector{0, 0});
}

TEST_CASE("closed forms match the explicit copy-and-contract diagrams") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const auto s = oracle::random_vector(rng, n), o = oracle::random_vector(rng, n);
    const auto v = oracle::random_matrix(rng, n, n);
    CHECK(near(copy_subject(s, v, o).entries(), oracle::copy_subject(s, v, o).entries(), 1e-10));
    CHECK(near(copy_object(s, v, o).entries(), oracle::copy_object(s, v, o).entries(), 1e-10));
    CHECK(near(relational(s, v, o).entries(), oracle::relational(s, v, o).entries(), 1e-10));
    CHECK(near(frobenius_additive(s, v, o).entries(), (copy_subject(s, v, o) + copy_object(s, v, o)).entries(), 1e-12));
  }
}

TEST_CASE("ditransitive variants match brute-force contraction") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
    const auto s = oracle::random_vector(rng, n), io = oracle::random_vector(rng, n), dob = oracle::random_vector(rng, n);
    const auto v = oracle::random_tensor(rng, n);
    const DitransitiveCopy kinds[] = {DitransitiveCopy::Subj, DitransitiveCopy::Iobj, DitransitiveCopy::Dobj};
    for (int c = 0; c < 3; ++c)
      CHECK(near(ditransitive_frobenius(s, v, io, dob, kinds[c]).entries(),
                 oracle::ditransitive(s, v, io, dob, c).entries(), 1e-10));
  }
}

TEST_CASE("separable verbs collapse") {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 4);
    const auto s = oracle::random_vector(rng, n, 0.1, 1), o = oracle::random_vector(rng, n, 0.1, 1);
    const auto a = oracle::random_vector(rng, n, 0.1, 1), b = oracle::random_vector(rng, n, 0.1, 1);
    const auto m = oracle::random_vector(rng, n, 0.1, 1);
    const Matrix verb = tensor_product(a, b);
    CHECK(cosine(copy_subject(s, verb, o), pointwise(s, a)) == Approx(1.0).epsilon(1e-12));
    CHECK(cosine(copy_object(s, verb, o), pointwise(b, o)) == Approx(1.0).epsilon(1e-12));
    CHECK(near(relational(s, verb, o).entries(), tensor_product(pointwise(s, a), pointwise(b, o)).entries(), 1e-12));
    CHECK(cosine(categorical_transitive(s, tensor_product(a, m, b), o), m) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("one-hot individuals give set membership") {
  std::mt19937_64 rng(109);
  std::bernoulli_distribution coin(0.5);
  for (int t = 0; t < 50; ++t) {
    Matrix r(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) r(i, j) = coin(rng) ? 1.0 : 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Vector expect_s = r(i, j) == 1.0 ? e(4, i) : Vector(4);
        const Vector expect_o = r(i, j) == 1.0 ? e(4, j) : Vector(4);
        CHECK(copy_subject(e(4, i), r, e(4, j)) == expect_s);
        CHECK(copy_object(e(4, i), r, e(4, j)) == expect_o);
      }
  }
}

TEST_CASE("composition results compare by cosine") {
  CompositionResult a{Vector{1, 0}, Model::CopySubject, 0};
  CompositionResult b{Vector{2, 0}, Model::CopySubject, 0};
  CompositionResult m{Matrix::identity(2), Model::Relational, std::nullopt};
  CHECK(a.kind() == CompositionResult::Kind::Vector);
  CHECK(m.kind() == CompositionResult::Kind::Matrix);
  CHECK(cosine(a, b) == Approx(1.0));
  CHECK(cosine(m, m) == Approx(1.0));
  CHECK_THROWS_AS(cosine(a, m), Error);
}
