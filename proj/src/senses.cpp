#include "frobsem/senses.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>

#include "frobsem/textio.hpp"

namespace frobsem {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::Euclidean: return "EUCLIDEAN";
    case Metric::Cosine: return "COSINE";
    case Metric::Correlation: return "CORRELATION";
  }
  return "COSINE";
}

std::string_view to_string(Linkage l) { return l == Linkage::Complete ? "COMPLETE" : "WARD"; }

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Metric parse_metric(std::string_view s) {
  const auto u = upper(s);
  if (u == "EUCLIDEAN") return Metric::Euclidean;
  if (u == "COSINE") return Metric::Cosine;
  if (u == "CORRELATION") return Metric::Correlation;
  throw Error(ErrorCode::InvalidArgument, "unknown metric '" + std::string(s) + "'");
}

Linkage parse_linkage(std::string_view s) {
  const auto u = upper(s);
  if (u == "COMPLETE") return Linkage::Complete;
  if (u == "WARD") return Linkage::Ward;
  throw Error(ErrorCode::InvalidArgument, "unknown linkage '" + std::string(s) + "'");
}

double distance(const Vector& a, const Vector& b, Metric metric) {
  switch (metric) {
    case Metric::Euclidean: return norm(a - b);
    case Metric::Cosine: return 1.0 - cosine(a, b);
    case Metric::Correlation: {
      if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "correlation distance");
      const double n = static_cast<double>(a.dim());
      if (n == 0) return 1.0;
      const double ma = sum(a) / n, mb = sum(b) / n;
      Vector ca(a.dim()), cb(b.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) {
        ca[i] = a[i] - ma;
        cb[i] = b[i] - mb;
      }
      return 1.0 - cosine(ca, cb);
    }
  }
  return 0.0;
}

// -- clustering ---------------------------------------------------------------------

Dendrogram hac(std::span<const Vector> points, Linkage linkage, Metric metric) {
  const std::size_t n = points.size();
  if (n < 2) throw Error(ErrorCode::TooFewPoints, "clustering needs at least two points");
  const std::size_t dim = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "points differ in dimension");

  std::vector<double> dist(n * n, 0.0);
  auto D = [&](std::size_t i, std::size_t j) -> double& { return dist[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double d;
      if (linkage == Linkage::Ward) {
        const Vector diff = points[i] - points[j];
        d = dot(diff, diff);
      } else {
        d = distance(points[i], points[j], metric);
      }
      D(i, j) = D(j, i) = d;
    }

  std::vector<bool> active(n, true);
  std::vector<std::size_t> id(n), size(n, 1);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Vector> centroid(points.begin(), points.end());

  Dendrogram out;
  out.n = n;
  out.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t bi = 0, bj = 0;
    double best = std::numeric_limits<double>::infinity();
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        if (!found || D(i, j) < best) {
          best = D(i, j);
          bi = i;
          bj = j;
          found = true;
        }
      }
    }

    const std::size_t merged_size = size[bi] + size[bj];
    out.merges.push_back(Merge{std::min(id[bi], id[bj]), std::max(id[bi], id[bj]), best, merged_size});

    if (linkage == Linkage::Ward) {
      const double wi = static_cast<double>(size[bi]) / static_cast<double>(merged_size);
      centroid[bi] = wi * centroid[bi] + (1.0 - wi) * centroid[bj];
    }
    active[bj] = false;
    size[bi] = merged_size;
    id[bi] = n + step;

    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi) continue;
      double d;
      if (linkage == Linkage::Complete) {
        d = std::max(D(bi, k), D(bj, k));
      } else {
        const Vector diff = centroid[bi] - centroid[k];
        const double sx = static_cast<double>(size[bi]), sy = static_cast<double>(size[k]);
        d = 2.0 * sx * sy / (sx + sy) * dot(diff, diff);
      }
      D(bi, k) = D(k, bi) = d;
    }
  }
  return out;
}

std::vector<std::size_t> cut(const Dendrogram& d, std::size_t k) {
  if (k < 1 || k > d.n) throw Error(ErrorCode::BadK, "k=" + std::to_string(k) + " outside [1, " + std::to_string(d.n) + "]");
  const std::size_t total = d.n + d.merges.size();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t m = 0; m < d.n - k; ++m) {
    const std::size_t created = d.n + m;
    parent[find(d.merges[m].a)] = created;
    parent[find(d.merges[m].b)] = created;
  }
  std::vector<std::size_t> labels(d.n);
  std::map<std::size_t, std::size_t> label_of_root;
  for (std::size_t i = 0; i < d.n; ++i) {
    auto [it, fresh] = label_of_root.try_emplace(find(i), label_of_root.size());
    labels[i] = it->second;
  }
  return labels;
}

double vrc(std::span<const Vector> points, std::span<const std::size_t> labels) {
  if (points.size() != labels.size()) throw Error(ErrorCode::LengthMismatch, "one label per point");
  const std::size_t n = points.size();
  std::set<std::size_t> distinct(labels.begin(), labels.end());
  const std::size_t k = distinct.size();
  if (k < 2 || k + 1 > n)
    throw Error(ErrorCode::BadK, "vrc needs 2 <= k <= N-1, got k=" + std::to_string(k) + " N=" + std::to_string(n));
  const std::size_t dim = points.front().dim();

  std::map<std::size_t, Vector> centroid;
  std::map<std::size_t, double> count;
  Vector overall(dim);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = centroid.try_emplace(labels[i], dim);
    it->second = it->second + points[i];
    count[labels[i]] += 1.0;
    overall = overall + points[i];
  }
  overall = (1.0 / static_cast<double>(n)) * overall;
  for (auto& [label, c] : centroid) c = (1.0 / count[label]) * c;

  double trace_w = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vector diff = points[i] - centroid.at(labels[i]);
    trace_w += dot(diff, diff);
  }
  double trace_b = 0.0;
  for (const auto& [label, c] : centroid) {
    const Vector diff = c - overall;
    trace_b += count[label] * dot(diff, diff);
  }
  if (trace_w == 0.0) return kVrcInfinity;
  return trace_b / trace_w * static_cast<double>(n - k) / static_cast<double>(k - 1);
}

std::size_t select_k(std::span<const Vector> points, const Dendrogram& d, std::size_t k_min, std::size_t k_max) {
  const std::size_t n = points.size();
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "choosing k needs at least three points");
  if (d.n != n) throw Error(ErrorCode::LengthMismatch, "dendrogram does not match the points");
  k_min = std::max<std::size_t>(k_min, 2);
  k_max = std::min(k_max, n - 1);
  if (k_min > k_max) throw Error(ErrorCode::BadK, "empty k range");
  std::size_t best_k = k_min;
  double best = -1.0;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    const double v = vrc(points, cut(d, k));
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  return best_k;
}

// -- inventories --------------------------------------------------------------------

std::vector<std::size_t> SenseInventory::member_counts() const {
  std::vector<std::size_t> counts(k, 0);
  for (const auto& [ctx, sense] : membership)
    if (sense < k) ++counts[sense];
  return counts;
}

SenseInventory induce_senses(const Token& word, std::span<const ContextVector> contexts, Linkage linkage,
                             Metric metric) {
  if (contexts.size() < 3)
    throw Error(ErrorCode::TooFewPoints, word.str() + ": " + std::to_string(contexts.size()) + " contexts, need 3");
  std::vector<Vector> points;
  points.reserve(contexts.size());
  std::set<std::size_t> ids;
  for (const auto& c : contexts) {
    if (!ids.insert(c.source_id).second)
      throw Error(ErrorCode::InvalidArgument, word.str() + ": duplicate context id " + std::to_string(c.source_id));
    points.push_back(c.vector);
  }

  const Dendrogram d = hac(points, linkage, metric);
  const std::size_t k = select_k(points, d);
  const auto labels = cut(d, k);

  SenseInventory inv;
  inv.word = word;
  inv.k = k;
  inv.metric = metric;
  inv.linkage = linkage;
  inv.centroids.assign(k, Vector(points.front().dim()));
  std::vector<double> counts(k, 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    inv.centroids[labels[i]] = inv.centroids[labels[i]] + points[i];
    counts[labels[i]] += 1.0;
    inv.membership[contexts[i].source_id] = labels[i];
  }
  for (std::size_t s = 0; s < k; ++s) inv.centroids[s] = (1.0 / counts[s]) * inv.centroids[s];
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool both_zero = norm(inv.centroids[a]) == 0.0 && norm(inv.centroids[b]) == 0.0;
      if (both_zero || cosine(inv.centroids[a], inv.centroids[b]) > 0.99) inv.near_duplicate = true;
    }
  return inv;
}

std::vector<ContextVector> collect_contexts(const SemanticSpace& space, std::span<const Sentence> corpus,
                                            const Token& word) {
  std::vector<ContextVector> out;
  for (std::size_t s = 0; s < corpus.size(); ++s)
    if (std::find(corpus[s].begin(), corpus[s].end(), word) != corpus[s].end())
      out.push_back(context_vector(space, corpus[s], word, s));
  return out;
}

std::string serialize_inventories(std::span<const SenseInventory> inventories) {
  std::string out;
  for (const auto& inv : inventories) {
    out += "frobsem-senses v1 " + inv.word.str() + " " + std::to_string(inv.k) + " " +
           std::string(to_string(inv.metric)) + " " + std::string(to_string(inv.linkage)) + "\n";
    for (const auto& c : inv.centroids) out += textio::join_doubles(c.entries()) + "\n";
    for (const auto& [ctx, sense] : inv.membership)
      out += "member " + std::to_string(ctx) + " " + std::to_string(sense) + "\n";
  }
  return out;
}

std::vector<SenseInventory> parse_inventories(const std::vector<std::string>& lines) {
  std::vector<SenseInventory> out;
  std::size_t i = 0;
  auto where = [&](std::size_t line) { return "senses line " + std::to_string(line + 1) + ": "; };
  while (i < lines.size()) {
    if (textio::trim(lines[i]).empty()) {
      ++i;
      continue;
    }
    const auto header = textio::split(lines[i], " ");
    if (header.size() != 6 || header[0] != "frobsem-senses" || header[1] != "v1")
      throw Error(ErrorCode::FormatError, where(i) + "bad header");
    SenseInventory inv;
    inv.word = Token::parse(header[2]);
    const auto k = textio::parse_int(header[3]);
    if (k < 1) throw Error(ErrorCode::FormatError, where(i) + "k must be positive");
    inv.k = static_cast<std::size_t>(k);
    inv.metric = parse_metric(header[4]);
    inv.linkage = parse_linkage(header[5]);
    ++i;
    for (std::size_t c = 0; c < inv.k; ++c, ++i) {
      if (i >= lines.size()) throw Error(ErrorCode::FormatError, where(i) + "missing centroid");
      inv.centroids.push_back(textio::parse_vector(lines[i]));
      if (inv.centroids.back().dim() != inv.centroids.front().dim())
        throw Error(ErrorCode::FormatError, where(i) + "centroid dimension mismatch");
    }
    while (i < lines.size() && textio::trim(lines[i]).substr(0, 7) == "member ") {
      const auto f = textio::split(lines[i], " ");
      if (f.size() != 3) throw Error(ErrorCode::FormatError, where(i) + "bad member line");
      const auto ctx = textio::parse_int(f[1]);
      const auto sense = textio::parse_int(f[2]);
      if (ctx < 0 || sense < 0 || static_cast<std::size_t>(sense) >= inv.k)
        throw Error(ErrorCode::FormatError, where(i) + "member out of range");
      inv.membership[static_cast<std::size_t>(ctx)] = static_cast<std::size_t>(sense);
      ++i;
    }
    for (std::size_t a = 0; a < inv.k; ++a)
      for (std::size_t b = a + 1; b < inv.k; ++b)
        if (cosine(inv.centroids[a], inv.centroids[b]) > 0.99) inv.near_duplicate = true;
    out.push_back(std::move(inv));
  }
  return out;
}

void save_inventories(std::span<const SenseInventory> inventories, const std::string& path) {
  textio::write_file(path, serialize_inventories(inventories));
}

std::vector<SenseInventory> load_inventories(const std::string& path) {
  return parse_inventories(textio::read_lines(path));
}

}  // namespace frobsem
