#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "frobsem/regress.hpp"
#include "frobsem/textio.hpp"
#include "oracles.hpp"

using namespace frobsem;
using doctest::Approx;

namespace {

// Central differences of `loss` around w, one entry at a time.
template <class F>
Matrix numeric_gradient(const Matrix& w, F&& loss, double h = 1e-5) {
  Matrix g(w.rows(), w.cols());
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) {
      Matrix up = w, down = w;
      up(i, j) += h;
      down(i, j) -= h;
      g(i, j) = (loss(up) - loss(down)) / (2 * h);
    }
  return g;
}

double relative_error(const Matrix& a, const Matrix& b) {
  const double scale = std::max({frobenius_norm(a), frobenius_norm(b), 1e-12});
  return frobenius_norm(a - b) / scale;
}

RegressionProblem random_problem(std::mt19937_64& rng, std::size_t n, std::size_t m, double lambda) {
  RegressionProblem p;
  for (std::size_t i = 0; i < m; ++i) {
    p.inputs.push_back(oracle::random_vector(rng, n));
    p.targets.push_back(oracle::random_vector(rng, n));
  }
  p.options.lambda = lambda;
  return p;
}

JointProblem random_joint(std::mt19937_64& rng, std::size_t n, std::size_t m, double lambda, bool pointwise) {
  JointProblem p;
  for (std::size_t i = 0; i < m; ++i) {
    p.subjects.push_back(oracle::random_vector(rng, n));
    p.objects.push_back(oracle::random_vector(rng, n));
    p.targets.push_back(oracle::random_vector(rng, n));
  }
  p.pointwise_interaction = pointwise;
  p.options.lambda = lambda;
  return p;
}

}  // namespace

TEST_CASE("fitting a diagonal map") {
  RegressionProblem p;
  p.inputs = {Vector{1, 0}, Vector{0, 1}};
  p.targets = {Vector{2, 0}, Vector{0, 3}};
  p.options.epochs = 5000;
  const auto t = train_matrix(p);
  CHECK(oracle::max_abs_diff(t.w.entries(), Matrix{{2, 0}, {0, 3}}.entries()) < 1e-4);
  CHECK(predict(t.w, Vector{1, 1})[1] == Approx(3.0).epsilon(1e-4));
}

TEST_CASE("a single pair leaves unconstrained entries at zero") {
  RegressionProblem p;
  p.inputs = {Vector{1, 0}};
  p.targets = {Vector{1, 0}};
  p.options.epochs = 5000;
  const auto t = train_matrix(p);
  CHECK(t.w(0, 0) == Approx(1.0).epsilon(1e-6));
  CHECK(t.w(1, 0) == 0.0);
  CHECK(t.w(0, 1) == 0.0);
  CHECK(t.w(1, 1) == 0.0);
}

TEST_CASE("heavy regularisation shrinks the matrix") {
  RegressionProblem p;
  p.inputs = {Vector{1, 0}, Vector{0, 1}};
  p.targets = {Vector{2, 0}, Vector{0, 3}};
  p.options.lambda = 1e6;
  p.options.lr = 1e-7;
  p.options.epochs = 2000;
  const auto t = train_matrix(p);
  CHECK(frobenius_norm(t.w) < 1e-4);
}

TEST_CASE("prediction is a matrix-vector product") {
  const Vector v{3, -1, 2};
  CHECK(predict(Matrix::identity(3), v) == v);
  CHECK(predict(Matrix::zeros(3, 3), v) == Vector{0, 0, 0});
}

TEST_CASE("problem validation") {
  RegressionProblem p;
  CHECK_THROWS_AS(train_matrix(p), Error);
  p.inputs = {Vector{1, 0}};
  p.targets = {Vector{1, 0}, Vector{0, 1}};
  CHECK_THROWS_AS(train_matrix(p), Error);
  p.targets = {Vector{1, 0, 0}};
  CHECK_THROWS_AS(train_matrix(p), Error);
}

TEST_CASE("matrix gradient matches finite differences") {
  std::mt19937_64 rng(401);
  for (int t = 0; t < 25; ++t) {
    const auto p = random_problem(rng, 3, 5, t % 2 ? 0.3 : 0.0);
    const Matrix w = oracle::random_matrix(rng, 3, 3);
    const Matrix g = matrix_loss_and_gradient(p, w).gradient;
    const Matrix fd = numeric_gradient(w, [&](const Matrix& x) { return matrix_loss_and_gradient(p, x).loss; });
    CHECK(relative_error(g, fd) < 1e-4);
  }
}

TEST_CASE("joint gradients match finite differences") {
  std::mt19937_64 rng(409);
  for (int t = 0; t < 25; ++t) {
    const auto p = random_joint(rng, 3, 5, t % 3 ? 0.2 : 0.0, t % 2 == 0);
    const Matrix ws = oracle::random_matrix(rng, 3, 3), wo = oracle::random_matrix(rng, 3, 3);
    const auto lg = joint_loss_and_gradient(p, ws, wo);
    const Matrix fds = numeric_gradient(ws, [&](const Matrix& x) { return joint_loss_and_gradient(p, x, wo).loss; });
    const Matrix fdo = numeric_gradient(wo, [&](const Matrix& x) { return joint_loss_and_gradient(p, ws, x).loss; });
    CHECK(relative_error(lg.grad_s, fds) < 1e-4);
    CHECK(relative_error(lg.grad_o, fdo) < 1e-4);
  }
}

TEST_CASE("loss matches its definition") {
  RegressionProblem p;
  p.inputs = {Vector{1, 2}, Vector{0, 1}};
  p.targets = {Vector{1, 0}, Vector{2, 2}};
  p.options.lambda = 0.5;
  const Matrix w{{1, 1}, {0, 2}};
  // Wx1 = (3, 4), r1 = (2, 4); Wx2 = (1, 2), r2 = (-1, 0); |W|^2 = 6.
  CHECK(matrix_loss_and_gradient(p, w).loss == Approx((20.0 + 1.0 + 0.5 * 6.0) / 4.0));
}

TEST_CASE("descent never increases the loss") {
  std::mt19937_64 rng(419);
  for (int t = 0; t < 10; ++t) {
    auto p = random_problem(rng, 3, 6, 0.1);
    p.options.lr = 5.0;  // deliberately too large; backtracking must cope
    p.options.epochs = 200;
    const auto tm = train_matrix(p);
    for (std::size_t i = 1; i < tm.history.size(); ++i) CHECK(tm.history[i] <= tm.history[i - 1]);

    auto j = random_joint(rng, 3, 6, 0.1, t % 2 == 0);
    j.options.lr = 5.0;
    j.options.epochs = 200;
    const auto tj = train_joint(j);
    for (std::size_t i = 1; i < tj.history.size(); ++i) CHECK(tj.history[i] <= tj.history[i - 1]);
  }
}

TEST_CASE("a huge step without backtracking diverges") {
  RegressionProblem p;
  p.inputs = {Vector{10, 10}};
  p.targets = {Vector{1, 1}};
  p.options.lr = 1e3;
  p.options.epochs = 5000;
  p.options.backtracking = false;
  try {
    train_matrix(p);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Diverged);
  }
}

TEST_CASE("exact fit on determined data") {
  std::mt19937_64 rng(421);
  for (int t = 0; t < 5; ++t) {
    const Matrix planted = oracle::random_matrix(rng, 3, 3);
    RegressionProblem p;
    for (std::size_t i = 0; i < 3; ++i) {
      p.inputs.push_back(Vector::basis(3, i) + 0.2 * oracle::random_vector(rng, 3));
      p.targets.push_back(matvec(planted, p.inputs.back()));
    }
    p.options.epochs = 20000;
    const auto tm = train_matrix(p);
    double resid = 0.0;
    for (std::size_t i = 0; i < 3; ++i) resid = std::max(resid, norm(predict(tm.w, p.inputs[i]) - p.targets[i]));
    CHECK(resid < 1e-6);
  }
}

TEST_CASE("planted additive joint model is recovered through its predictions") {
  std::mt19937_64 rng(431);
  const Matrix ws_star{{2, 0, 0}, {0, -1, 0}, {0, 0, 0.5}};
  const Matrix wo_star{{1, 0, 0}, {0, 3, 0}, {0, 0, -2}};
  JointProblem p;
  for (int i = 0; i < 12; ++i) {
    p.subjects.push_back(oracle::random_vector(rng, 3));
    p.objects.push_back(oracle::random_vector(rng, 3));
    p.targets.push_back(matvec(ws_star, p.subjects.back()) + matvec(wo_star, p.objects.back()));
  }
  p.pointwise_interaction = false;
  p.options.lr = 0.5;
  p.options.epochs = 20000;
  const auto t = train_joint(p);
  for (int i = 0; i < 12; ++i) {
    const Vector got = predict_joint(t, p.subjects[static_cast<std::size_t>(i)], p.objects[static_cast<std::size_t>(i)], false);
    CHECK(oracle::max_abs_diff(got.entries(), p.targets[static_cast<std::size_t>(i)].entries()) < 1e-3);
  }
}

TEST_CASE("zero targets with regularisation give zero matrices") {
  std::mt19937_64 rng(433);
  for (bool pw : {true, false}) {
    JointProblem p;
    for (int i = 0; i < 5; ++i) {
      p.subjects.push_back(oracle::random_vector(rng, 3));
      p.objects.push_back(oracle::random_vector(rng, 3));
      p.targets.push_back(Vector(3));
    }
    p.pointwise_interaction = pw;
    p.options.lambda = 0.5;
    const auto t = train_joint(p);
    CHECK(frobenius_norm(t.w_s) < 1e-9);
    CHECK(frobenius_norm(t.w_o) < 1e-9);
  }
}

TEST_CASE("pointwise and additive objectives coincide on all-ones arguments") {
  std::mt19937_64 rng(439);
  JointProblem pw;
  for (int i = 0; i < 4; ++i) {
    pw.subjects.push_back(Vector::ones(3));
    pw.objects.push_back(Vector::ones(3));
    pw.targets.push_back(oracle::random_vector(rng, 3));
  }
  pw.options.lambda = 0.1;
  pw.options.epochs = 300;
  JointProblem add = pw;
  add.pointwise_interaction = false;

  const Matrix ws = oracle::random_matrix(rng, 3, 3), wo = oracle::random_matrix(rng, 3, 3);
  const auto a = joint_loss_and_gradient(pw, ws, wo), b = joint_loss_and_gradient(add, ws, wo);
  CHECK(a.loss == Approx(b.loss).epsilon(1e-12));
  CHECK(oracle::max_abs_diff(a.grad_s.entries(), b.grad_s.entries()) < 1e-12);
  CHECK(oracle::max_abs_diff(a.grad_o.entries(), b.grad_o.entries()) < 1e-12);

  const auto ta = train_joint(pw), tb = train_joint(add);
  CHECK(oracle::max_abs_diff(ta.w_s.entries(), tb.w_s.entries()) < 1e-6);
  CHECK(oracle::max_abs_diff(ta.w_o.entries(), tb.w_o.entries()) < 1e-6);
}

TEST_CASE("pointwise interaction with an all-ones subject") {
  // With subj = 1 the pointwise prediction is (W_s 1) (.) o + W_o o, so the
  // object-side gradient is the additive one.
  std::mt19937_64 rng(443);
  JointProblem pw;
  for (int i = 0; i < 4; ++i) {
    pw.subjects.push_back(Vector::ones(3));
    pw.objects.push_back(oracle::random_vector(rng, 3));
    pw.targets.push_back(oracle::random_vector(rng, 3));
  }
  const Matrix ws = Matrix::zeros(3, 3), wo = oracle::random_matrix(rng, 3, 3);
  JointProblem add = pw;
  add.pointwise_interaction = false;
  const auto a = joint_loss_and_gradient(pw, ws, wo), b = joint_loss_and_gradient(add, ws, wo);
  CHECK(oracle::max_abs_diff(a.grad_o.entries(), b.grad_o.entries()) < 1e-12);
}

TEST_CASE("seeded shuffling does not change the full-batch optimum") {
  std::mt19937_64 rng(449);
  auto p = random_problem(rng, 3, 6, 0.2);
  p.options.epochs = 3000;
  const auto plain = train_matrix(p);
  p.options.shuffle_seed = 99;
  const auto shuffled = train_matrix(p);
  // Loss-based step acceptance pins W only to about sqrt(machine epsilon).
  CHECK(oracle::max_abs_diff(plain.w.entries(), shuffled.w.entries()) < 1e-6);
}

TEST_CASE("training pairs file") {
  const auto path = (std::filesystem::temp_directory_path() / "frobsem_test_pairs.tsv").string();
  textio::write_file(path, "1 0\t2 0\n\n0 1\t0 3\n");
  const auto [x, y] = read_training_pairs(path);
  REQUIRE(x.size() == 2);
  CHECK(x[1] == Vector{0, 1});
  CHECK(y[1] == Vector{0, 3});
  textio::write_file(path, "1 0 2 0\n");
  CHECK_THROWS_AS(read_training_pairs(path), Error);
  std::filesystem::remove(path);
}
