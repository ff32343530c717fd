#ifndef FROBSEM_TESTS_ORACLES_HPP
#define FROBSEM_TESTS_ORACLES_HPP

// Brute-force reference implementations shared by the unit tests and the
// acceptance runner. Nothing here calls the library code it checks.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "frobsem/linalg.hpp"

namespace oracle {

using frobsem::Matrix;
using frobsem::Tensor3;
using frobsem::Vector;

// Dense tensor with `legs` indices, each of size n, last leg fastest.
struct LegTensor {
  std::size_t n = 0;
  std::size_t legs = 0;
  std::vector<double> data;

  static LegTensor scalar(std::size_t n) { return {n, 0, {1.0}}; }

  std::size_t size() const { return data.size(); }

  std::vector<std::size_t> unravel(std::size_t flat) const {
    std::vector<std::size_t> idx(legs);
    for (std::size_t l = legs; l-- > 0;) {
      idx[l] = flat % n;
      flat /= n;
    }
    return idx;
  }

  std::size_t ravel(const std::vector<std::size_t>& idx) const {
    std::size_t flat = 0;
    for (auto i : idx) flat = flat * n + i;
    return flat;
  }

  // Appends the legs of `values` (a flat tensor with `extra` legs).
  LegTensor outer(const std::vector<double>& values, std::size_t extra) const {
    LegTensor out{n, legs + extra, std::vector<double>(data.size() * values.size())};
    for (std::size_t a = 0; a < data.size(); ++a)
      for (std::size_t b = 0; b < values.size(); ++b) out.data[a * values.size() + b] = data[a] * values[b];
    return out;
  }
  LegTensor outer(const Vector& v) const { return outer(v.values(), 1); }
  LegTensor outer(const Matrix& m) const {
    return outer(std::vector<double>(m.entries().begin(), m.entries().end()), 2);
  }
  LegTensor outer(const Tensor3& t) const {
    return outer(std::vector<double>(t.entries().begin(), t.entries().end()), 3);
  }

  // Delta: leg `l` is copied; the copy is inserted right after it.
  LegTensor copy_leg(std::size_t l) const {
    LegTensor out{n, legs + 1, std::vector<double>(data.size() * n, 0.0)};
    for (std::size_t f = 0; f < data.size(); ++f) {
      auto idx = unravel(f);
      idx.insert(idx.begin() + static_cast<std::ptrdiff_t>(l) + 1, idx[l]);
      out.data[out.ravel(idx)] = data[f];
    }
    return out;
  }

  // Cap / inner product: sums over index equality of legs a and b.
  LegTensor contract(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    LegTensor out{n, legs - 2, std::vector<double>(data.size() / (n * n), 0.0)};
    for (std::size_t f = 0; f < data.size(); ++f) {
      auto idx = unravel(f);
      if (idx[a] != idx[b]) continue;
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(b));
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(a));
      out.data[out.ravel(idx)] += data[f];
    }
    return out;
  }

  // Merge (mu): legs l and l+1 become one leg holding their diagonal.
  LegTensor merge_legs(std::size_t l) const {
    LegTensor out{n, legs - 1, std::vector<double>(data.size() / n, 0.0)};
    for (std::size_t f = 0; f < data.size(); ++f) {
      auto idx = unravel(f);
      if (idx[l] != idx[l + 1]) continue;
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(l) + 1);
      out.data[out.ravel(idx)] += data[f];
    }
    return out;
  }

  Vector as_vector() const { return Vector(data); }
  Matrix as_matrix() const { return Matrix(n, n, data); }
};

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// -- Frobenius algebra as explicit linear maps --------------------------------------

// Row-major (rows x cols) linear map.
struct Linear {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;

  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline Linear identity_map(std::size_t n) {
  Linear m{n, n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) m.a[i * n + i] = 1.0;
  return m;
}

// V -> V (x) V, e_i -> e_i (x) e_i
inline Linear delta_map(std::size_t n) {
  Linear m{n * n, n, std::vector<double>(n * n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) m.a[(i * n + i) * n + i] = 1.0;
  return m;
}

// V (x) V -> V, e_i (x) e_j -> delta_ij e_i
inline Linear mu_map(std::size_t n) {
  Linear m{n, n * n, std::vector<double>(n * n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) m.a[i * n * n + i * n + i] = 1.0;
  return m;
}

inline Linear kron(const Linear& x, const Linear& y) {
  Linear out{x.rows * y.rows, x.cols * y.cols, {}};
  out.a.assign(out.rows * out.cols, 0.0);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      const double xv = x.at(i, j);
      if (xv == 0.0) continue;
      for (std::size_t k = 0; k < y.rows; ++k)
        for (std::size_t l = 0; l < y.cols; ++l) out.a[(i * y.rows + k) * out.cols + j * y.cols + l] = xv * y.at(k, l);
    }
  return out;
}

inline Linear compose(const Linear& outer, const Linear& inner) {
  Linear out{outer.rows, inner.cols, std::vector<double>(outer.rows * inner.cols, 0.0)};
  for (std::size_t i = 0; i < outer.rows; ++i)
    for (std::size_t k = 0; k < outer.cols; ++k) {
      const double o = outer.at(i, k);
      if (o == 0.0) continue;
      for (std::size_t j = 0; j < inner.cols; ++j) out.a[i * inner.cols + j] += o * inner.at(k, j);
    }
  return out;
}

inline std::vector<double> apply(const Linear& m, std::span<const double> x) {
  std::vector<double> y(m.rows, 0.0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) y[i] += m.at(i, j) * x[j];
  return y;
}

// -- composition models as explicit Delta / epsilon diagrams ------------------------

// Legs: subj | verb_i verb_j | obj. Copy the row leg, cap subj with one copy
// and the column leg with obj.
inline Vector copy_subject(const Vector& subj, const Matrix& verb, const Vector& obj) {
  auto t = LegTensor::scalar(subj.dim()).outer(subj).outer(verb).outer(obj);  // s, i, j, o
  t = t.copy_leg(1);                                                         // s, i, i', j, o
  t = t.contract(0, 1);                                                      // i', j, o
  t = t.contract(1, 2);                                                      // i'
  return t.as_vector();
}

inline Vector copy_object(const Vector& subj, const Matrix& verb, const Vector& obj) {
  auto t = LegTensor::scalar(subj.dim()).outer(subj).outer(verb).outer(obj);  // s, i, j, o
  t = t.copy_leg(2);                                                         // s, i, j, j', o
  t = t.contract(0, 1);                                                      // j, j', o
  t = t.contract(1, 2);                                                      // j
  return t.as_vector();
}

inline Matrix relational(const Vector& subj, const Matrix& verb, const Vector& obj) {
  auto t = LegTensor::scalar(subj.dim()).outer(subj).outer(verb).outer(obj);  // s, i, j, o
  t = t.copy_leg(1);                                                         // s, i, i', j, o
  t = t.copy_leg(3);                                                         // s, i, i', j, j', o
  t = t.contract(0, 1);                                                      // i', j, j', o
  t = t.contract(2, 3);                                                      // i', j
  return t.as_matrix();
}

// Axes of `verb`: (SUBJ, IOBJ, DOBJ); `copy` names the copied leg (0, 1, 2).
inline Vector ditransitive(const Vector& subj, const Tensor3& verb, const Vector& iobj, const Vector& dobj,
                           int copy) {
  auto t = LegTensor::scalar(subj.dim()).outer(subj).outer(verb).outer(iobj).outer(dobj);  // s, a, b, c, io, do
  t = t.copy_leg(1 + static_cast<std::size_t>(copy));  // seven legs, copy inserted after the copied one
  if (copy == 2) {
    t = t.contract(3, 6);  // c with dobj: s, a, b, c', io
    t = t.contract(2, 4);  // b with iobj: s, a, c'
  } else {
    t = t.contract(4, 6);  // c with dobj: s, x, y, z, io
    t = t.contract(3, 4);  // z with iobj: s, x, y
  }
  t = t.contract(0, 1);  // subject with the first verb leg
  return t.as_vector();
}

// -- random inputs ------------------------------------------------------------------

inline Vector random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return Vector(v);
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(r * c);
  for (auto& x : v) x = u(rng);
  return Matrix(r, c, v);
}

inline Tensor3 random_tensor(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n * n * n);
  for (auto& x : v) x = u(rng);
  return Tensor3(n, n, n, v);
}

// -- metrics ------------------------------------------------------------------------

// rank = #strictly smaller + (#equal including self + 1) / 2
inline std::vector<double> naive_ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (double y : x) {
      if (y < x[i]) ++less;
      if (y == x[i]) ++equal;
    }
    r[i] = less + (equal + 1.0) / 2.0;
  }
  return r;
}

inline double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  return pearson(naive_ranks(a), naive_ranks(b));
}

inline double mrr(const std::vector<std::size_t>& ranks) {
  double s = 0;
  for (auto r : ranks) s += 1.0 / static_cast<double>(r);
  return s / static_cast<double>(ranks.size());
}

// V-measure from conditional entropies written out over explicit label sets.
inline double v_measure(const std::vector<int>& gold, const std::vector<int>& pred) {
  const double n = static_cast<double>(gold.size());
  std::map<int, int> gc, pc;
  std::map<std::pair<int, int>, int> joint;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++gc[gold[i]];
    ++pc[pred[i]];
    ++joint[{gold[i], pred[i]}];
  }
  double hc = 0, hk = 0;
  for (auto [l, c] : gc) hc -= (c / n) * std::log(c / n);
  for (auto [l, c] : pc) hk -= (c / n) * std::log(c / n);
  double hck = 0, hkc = 0;
  for (auto [g, cg] : gc)
    for (auto [p, cp] : pc) {
      auto it = joint.find({g, p});
      if (it == joint.end()) continue;
      const double a = it->second;
      hck -= (a / n) * std::log(a / cp);
      hkc -= (a / n) * std::log(a / cg);
    }
  const double h = hc == 0 ? 1.0 : 1.0 - hck / hc;
  const double c = hk == 0 ? 1.0 : 1.0 - hkc / hk;
  return h + c == 0 ? 0.0 : 2 * h * c / (h + c);
}

// Calinski-Harabasz from its definition: between- and within-cluster
// scatter traces over explicit cluster means.
inline double vrc(const std::vector<Vector>& pts, const std::vector<std::size_t>& labels) {
  const std::size_t n = pts.size(), d = pts.front().dim();
  std::size_t k = 0;
  for (auto l : labels) k = std::max(k, l + 1);
  std::vector<double> grand(d, 0.0);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < d; ++i) grand[i] += p[i] / static_cast<double>(n);
  std::vector<std::vector<double>> mean(k, std::vector<double>(d, 0.0));
  std::vector<double> size(k, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    size[labels[p]] += 1;
    for (std::size_t i = 0; i < d; ++i) mean[labels[p]][i] += pts[p][i];
  }
  for (std::size_t c = 0; c < k; ++c)
    for (auto& x : mean[c]) x /= size[c];
  double tw = 0, tb = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t i = 0; i < d; ++i) tw += (pts[p][i] - mean[labels[p]][i]) * (pts[p][i] - mean[labels[p]][i]);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < d; ++i) tb += size[c] * (mean[c][i] - grand[i]) * (mean[c][i] - grand[i]);
  if (tw == 0) return INFINITY;
  return tb / tw * static_cast<double>(n - k) / static_cast<double>(k - 1);
}

// Equal-sized isotropic Gaussian blobs; centres sit `separation` apart along
// distinct axes. Points are grouped blob by blob.
inline std::vector<Vector> blobs(std::mt19937_64& rng, std::size_t k, std::size_t per_blob, std::size_t dim,
                                 double sigma, double separation) {
  std::normal_distribution<double> noise(0.0, sigma);
  std::vector<Vector> out;
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t p = 0; p < per_blob; ++p) {
      std::vector<double> v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = noise(rng) + (i == b % dim ? separation * static_cast<double>(1 + b / dim) : 0.0);
      out.emplace_back(v);
    }
  return out;
}

}  // namespace oracle

#endif  // FROBSEM_TESTS_ORACLES_HPP
