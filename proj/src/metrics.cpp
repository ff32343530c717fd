#include "frobsem/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace frobsem {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = r;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> model_scores, std::span<const double> human_scores) {
  if (model_scores.size() != human_scores.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(model_scores.size()) + " model scores vs " +
                                               std::to_string(human_scores.size()) + " human scores");
  if (model_scores.size() < 2) throw Error(ErrorCode::LengthMismatch, "need at least two scores");
  for (double x : model_scores)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "model score is not finite");
  for (double x : human_scores)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "human score is not finite");
  const auto a = average_ranks(model_scores);
  const auto b = average_ranks(human_scores);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - mean, db = b[i] - mean;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw Error(ErrorCode::DegenerateRanks, "a score list is constant");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::size_t rank_of_correct(std::span<const double> scores, std::size_t correct) {
  if (correct >= scores.size()) throw Error(ErrorCode::InvalidArgument, "correct index out of range");
  std::size_t rank = 1;
  for (std::size_t i = 0; i < scores.size(); ++i)
    if (i != correct && scores[i] >= scores[correct]) ++rank;
  return rank;
}

namespace {

void check_ranks(std::span<const std::size_t> ranks) {
  if (ranks.empty()) throw Error(ErrorCode::Empty, "no ranks");
  for (auto r : ranks)
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "ranks start at 1");
}

}  // namespace

double mrr(std::span<const std::size_t> ranks) {
  check_ranks(ranks);
  double s = 0.0;
  for (auto r : ranks) s += 1.0 / static_cast<double>(r);
  return s / static_cast<double>(ranks.size());
}

double accuracy_top1(std::span<const std::size_t> ranks) {
  check_ranks(ranks);
  const auto hits = std::count(ranks.begin(), ranks.end(), std::size_t{1});
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

double avg_cos(std::span<const std::pair<Vector, Vector>> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::Empty, "no vector pairs");
  double s = 0.0;
  for (const auto& [a, b] : pairs) s += cosine(a, b);
  return s / static_cast<double>(pairs.size());
}

VMeasure v_measure_scores(std::span<const int> gold, std::span<const int> predicted) {
  if (gold.size() != predicted.size())
    throw Error(ErrorCode::LengthMismatch, "gold and predicted label lists differ in length");
  VMeasure out;
  const std::size_t n = gold.size();
  if (n == 0) return out;
  std::map<int, double> cg, cp;
  std::map<std::pair<int, int>, double> joint;
  for (std::size_t i = 0; i < n; ++i) {
    cg[gold[i]] += 1;
    cp[predicted[i]] += 1;
    joint[{gold[i], predicted[i]}] += 1;
  }
  const double N = static_cast<double>(n);
  auto entropy = [N](const std::map<int, double>& counts) {
    double h = 0.0;
    for (const auto& [label, c] : counts) h -= c / N * std::log(c / N);
    return h;
  };
  const double hc = entropy(cg), hk = entropy(cp);
  // H(C|K) and H(K|C) from the contingency table.
  double hc_k = 0.0, hk_c = 0.0;
  for (const auto& [key, nck] : joint) {
    hc_k -= nck / N * std::log(nck / cp[key.second]);
    hk_c -= nck / N * std::log(nck / cg[key.first]);
  }
  out.homogeneity = hc == 0.0 ? 1.0 : 1.0 - hc_k / hc;
  out.completeness = hk == 0.0 ? 1.0 : 1.0 - hk_c / hk;
  const double denom = out.homogeneity + out.completeness;
  out.v = denom == 0.0 ? 0.0 : 2.0 * out.homogeneity * out.completeness / denom;
  return out;
}

double v_measure(std::span<const int> gold, std::span<const int> predicted) {
  return v_measure_scores(gold, predicted).v;
}

}  // namespace frobsem
