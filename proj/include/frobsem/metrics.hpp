#ifndef FROBSEM_METRICS_HPP
#define FROBSEM_METRICS_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "frobsem/linalg.hpp"

namespace frobsem {

// 1-based ranks, ties sharing the average of the positions they span.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of the average ranks. Throws LengthMismatch for
// unequal or too short lists, DegenerateRanks when either list is constant.
double spearman_rho(std::span<const double> model_scores, std::span<const double> human_scores);

// Position (1-based) of `correct` among candidates ordered by decreasing
// score; candidates scoring equal to the correct one count against it.
std::size_t rank_of_correct(std::span<const double> scores, std::size_t correct);

// Throw Empty on empty input; ranks must be >= 1 (InvalidArgument).
double mrr(std::span<const std::size_t> ranks);
double accuracy_top1(std::span<const std::size_t> ranks);
double avg_cos(std::span<const std::pair<Vector, Vector>> pairs);

struct VMeasure {
  double homogeneity = 1.0;
  double completeness = 1.0;
  double v = 1.0;
};

// Entropies in nats. A single gold class gives homogeneity 1; a single
// predicted cluster gives completeness 1. Throws LengthMismatch.
VMeasure v_measure_scores(std::span<const int> gold, std::span<const int> predicted);
double v_measure(std::span<const int> gold, std::span<const int> predicted);

}  // namespace frobsem

#endif  // FROBSEM_METRICS_HPP
