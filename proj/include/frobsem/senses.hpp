#ifndef FROBSEM_SENSES_HPP
#define FROBSEM_SENSES_HPP

// Word-sense induction: agglomerative clustering of context vectors, with the
// number of senses picked by the variance ratio criterion (Calinski-Harabasz).

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobsem/linalg.hpp"
#include "frobsem/semspace.hpp"

namespace frobsem {

enum class Metric { Euclidean, Cosine, Correlation };
enum class Linkage { Complete, Ward };

std::string_view to_string(Metric m);
std::string_view to_string(Linkage l);
Metric parse_metric(std::string_view s);
Linkage parse_linkage(std::string_view s);

// Euclidean distance, 1 - cosine, or 1 - Pearson r. A constant vector has
// zero correlation with everything.
double distance(const Vector& a, const Vector& b, Metric metric);

struct Merge {
  std::size_t a = 0;  // cluster ids: leaves are 0..n-1, merge i creates n+i
  std::size_t b = 0;
  double height = 0.0;
  std::size_t size = 0;

  bool operator==(const Merge&) const = default;
};

struct Dendrogram {
  std::size_t n = 0;
  std::vector<Merge> merges;  // n - 1 entries
};

// Complete link uses the given metric between points. Ward always works on
// raw coordinates, with D(X,Y) = 2|X||Y|/(|X|+|Y|) * |c_X - c_Y|^2; the metric
// then only matters at disambiguation time. Ties go to the lowest slot pair.
// Throws TooFewPoints for fewer than two points.
Dendrogram hac(std::span<const Vector> points, Linkage linkage, Metric metric);

// Cluster label per point after undoing the last k-1 merges. Labels are
// numbered in order of each cluster's smallest member. Throws BadK.
std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k);

constexpr double kVrcInfinity = std::numeric_limits<double>::infinity();

// (Tr B / Tr W) * (N - k) / (k - 1), +infinity when Tr W is zero.
// Throws BadK unless 2 <= k <= N - 1.
double vrc(std::span<const Vector> points, std::span<const std::size_t> labels);

// Argmax of vrc over cuts with k in [k_min, min(k_max, N - 1)]; ties go to
// the smaller k. Throws TooFewPoints when N < 3.
std::size_t select_k(std::span<const Vector> points, const Dendrogram& d, std::size_t k_min = 2,
                     std::size_t k_max = 10);

struct SenseInventory {
  Token word;
  std::size_t k = 0;
  std::vector<Vector> centroids;
  std::map<std::size_t, std::size_t> membership;  // context id -> sense
  Metric metric = Metric::Cosine;
  Linkage linkage = Linkage::Ward;
  // Set when two centroids are nearly parallel (cosine > 0.99), the usual
  // sign of a word forced into two senses it does not have.
  bool near_duplicate = false;

  std::vector<std::size_t> member_counts() const;
};

// hac -> select_k -> cut, then centroids and membership. Throws TooFewPoints
// for fewer than three contexts.
SenseInventory induce_senses(const Token& word, std::span<const ContextVector> contexts, Linkage linkage,
                             Metric metric);

// Contexts of `word`: one per corpus sentence containing it, id = sentence index.
std::vector<ContextVector> collect_contexts(const SemanticSpace& space, std::span<const Sentence> corpus,
                                            const Token& word);

std::string serialize_inventories(std::span<const SenseInventory> inventories);
std::vector<SenseInventory> parse_inventories(const std::vector<std::string>& lines);
void save_inventories(std::span<const SenseInventory> inventories, const std::string& path);
std::vector<SenseInventory> load_inventories(const std::string& path);

}  // namespace frobsem

#endif  // FROBSEM_SENSES_HPP
