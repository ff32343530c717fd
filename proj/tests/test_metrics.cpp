#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "frobsem/metrics.hpp"
#include "oracles.hpp"

using namespace frobsem;
using doctest::Approx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Small integer grids make ties common.
std::vector<double> random_scores(std::mt19937_64& rng, std::size_t n, int levels) {
  std::uniform_int_distribution<int> d(0, levels - 1);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng) * 0.5;
  return v;
}

bool constant(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

}  // namespace

TEST_CASE("average ranks share tied positions") {
  const std::vector<double> v{3.0, 1.0, 3.0, 2.0};
  CHECK(average_ranks(v) == std::vector<double>{3.5, 1.0, 3.5, 2.0});
  const std::vector<double> same{7, 7, 7};
  CHECK(average_ranks(same) == std::vector<double>{2, 2, 2});
}

TEST_CASE("spearman examples") {
  const std::vector<double> a{1, 2, 3, 4}, b{1, 3, 2, 4}, rev{4, 3, 2, 1};
  CHECK(spearman_rho(a, b) == Approx(1.0 - 6.0 * 2.0 / (4.0 * 15.0)));
  CHECK(spearman_rho(a, b) == Approx(0.8));
  CHECK(spearman_rho(a, a) == 1.0);
  CHECK(spearman_rho(a, rev) == -1.0);
}

TEST_CASE("spearman errors") {
  const std::vector<double> a{1, 2, 3}, b{1, 2}, one{1}, flat{2, 2, 2};
  CHECK(code_of([&] { spearman_rho(a, b); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { spearman_rho(one, one); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([&] { spearman_rho(a, flat); }) == ErrorCode::DegenerateRanks);
  CHECK(code_of([&] { spearman_rho(flat, a); }) == ErrorCode::DegenerateRanks);
}

TEST_CASE("spearman matches the brute-force reference") {
  std::mt19937_64 rng(601);
  int compared = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 9);
    const auto a = random_scores(rng, n, 1 + t % 6), b = random_scores(rng, n, 2 + t % 5);
    if (constant(a) || constant(b)) {
      CHECK(code_of([&] { spearman_rho(a, b); }) == ErrorCode::DegenerateRanks);
      continue;
    }
    const double got = spearman_rho(a, b);
    CHECK(std::abs(got - oracle::spearman(a, b)) <= 1e-12);
    CHECK(got >= -1.0);
    CHECK(got <= 1.0);
    ++compared;
  }
  CHECK(compared > 500);
}

TEST_CASE("spearman ignores strictly monotone transforms") {
  std::mt19937_64 rng(607);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 3 + static_cast<std::size_t>(t % 10);
    std::vector<double> a(n), b(n);
    for (auto& x : a) x = g(rng);
    for (auto& x : b) x = std::round(g(rng) * 2.0);
    if (constant(b)) continue;
    std::vector<double> ta(n), tb(n);
    std::transform(a.begin(), a.end(), ta.begin(), [](double x) { return std::exp(3.0 * x) + 7.0; });
    std::transform(b.begin(), b.end(), tb.begin(), [](double x) { return x * x * x - 100.0; });
    CHECK(spearman_rho(ta, tb) == Approx(spearman_rho(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("reciprocal rank and accuracy") {
  const std::vector<std::size_t> ones{1, 1, 1}, r12{1, 2}, r24{2, 4}, r121{1, 2, 1};
  CHECK(mrr(ones) == 1.0);
  CHECK(mrr(r12) == 0.75);
  CHECK(mrr(r24) == 0.375);
  CHECK(accuracy_top1(r121) == Approx(2.0 / 3.0));
  CHECK(accuracy_top1(ones) == 1.0);
  const std::vector<std::size_t> none, zero{0};
  CHECK(code_of([&] { mrr(none); }) == ErrorCode::Empty);
  CHECK(code_of([&] { accuracy_top1(none); }) == ErrorCode::Empty);
  CHECK(code_of([&] { mrr(zero); }) == ErrorCode::InvalidArgument);

  std::mt19937_64 rng(613);
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::size_t> r(1 + static_cast<std::size_t>(t % 12));
    for (auto& x : r) x = 1 + rng() % 20;
    const double got = mrr(r);
    CHECK(std::abs(got - oracle::mrr(r)) <= 1e-12);
    CHECK(got > 0.0);
    CHECK(got <= 1.0);
  }
}

TEST_CASE("rank of the correct candidate") {
  const std::vector<double> s{0.2, 0.9, 0.5, 0.9};
  CHECK(rank_of_correct(s, 1) == 2);
  CHECK(rank_of_correct(s, 2) == 3);
  CHECK(rank_of_correct(s, 0) == 4);
  CHECK(code_of([&] { rank_of_correct(s, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("average cosine") {
  const std::vector<std::pair<Vector, Vector>> same{{Vector{1, 2}, Vector{1, 2}}, {Vector{0, 3}, Vector{0, 6}}};
  CHECK(avg_cos(same) == Approx(1.0));
  const std::vector<std::pair<Vector, Vector>> mixed{{Vector{1, 0}, Vector{0, 1}}, {Vector{1, 0}, Vector{1, 0}}};
  CHECK(avg_cos(mixed) == Approx(0.5));
  CHECK(code_of([] { avg_cos(std::vector<std::pair<Vector, Vector>>{}); }) == ErrorCode::Empty);
}

TEST_CASE("v-measure examples") {
  const std::vector<int> gold{0, 0, 1, 1}, relabelled{5, 5, 2, 2}, single{3, 3, 3, 3}, cross{0, 1, 0, 1};
  CHECK(v_measure(gold, relabelled) == Approx(1.0));
  const auto one = v_measure_scores(gold, single);
  CHECK(one.completeness == 1.0);
  CHECK(one.homogeneity == Approx(0.0));
  CHECK(one.v == Approx(0.0));
  CHECK(std::abs(v_measure(gold, cross)) < 1e-15);
  const std::vector<int> shorter{0, 1};
  CHECK(code_of([&] { v_measure(gold, shorter); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("v-measure matches the reference and ignores relabelling") {
  std::mt19937_64 rng(617);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 15);
    const int kg = 1 + t % 4, kp = 1 + (t / 4) % 5;
    std::vector<int> gold(n), pred(n);
    for (auto& g : gold) g = static_cast<int>(rng() % static_cast<unsigned>(kg));
    for (auto& p : pred) p = static_cast<int>(rng() % static_cast<unsigned>(kp));
    const double v = v_measure(gold, pred);
    CHECK(std::abs(v - oracle::v_measure(gold, pred)) <= 1e-12);
    CHECK(v >= -1e-15);
    CHECK(v <= 1.0 + 1e-15);

    std::vector<int> pg = gold, pp = pred;
    for (auto& g : pg) g = 10 - 3 * g;
    for (auto& p : pp) p = (p + 2) % kp + 40;
    CHECK(v_measure(pg, pp) == Approx(v).epsilon(1e-12));
  }
}
