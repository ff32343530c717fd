#include "frobsem/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace frobsem {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void require_finite(std::span<const double> values, const char* what) {
  if (!all_finite(values)) throw Error(ErrorCode::NonFinite, what);
}

}  // namespace

bool all_finite(std::span<const double> values) {
  return std::all_of(values.begin(), values.end(), [](double x) { return std::isfinite(x); });
}

// -- Vector -------------------------------------------------------------------

Vector::Vector(std::initializer_list<double> values) : data_(values) {
  require_finite(data_, "vector entries");
}

Vector::Vector(std::vector<double> entries) : data_(std::move(entries)) {
  require_finite(data_, "vector entries");
}

Vector Vector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  Vector v(dim);
  v[index] = 1.0;
  return v;
}

// -- Matrix -------------------------------------------------------------------

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_same_dim(r.size(), cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_, "matrix entries");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_same_dim(data_.size(), rows * cols, "matrix entry count");
  require_finite(data_, "matrix entries");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::row(std::size_t i) const {
  Vector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

// -- Tensor3 ------------------------------------------------------------------

Tensor3::Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, std::vector<double> entries)
    : d1_(d1), d2_(d2), d3_(d3), data_(std::move(entries)) {
  require_same_dim(data_.size(), d1 * d2 * d3, "tensor entry count");
  require_finite(data_, "tensor entries");
}

// -- elementary algebra -------------------------------------------------------

Vector operator+(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "vector add");
  Vector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "vector subtract");
  Vector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(double s, const Vector& v) {
  Vector r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = s * v[i];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix add");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix subtract");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

Matrix operator*(double s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  if (a.d1() != b.d1() || a.d2() != b.d2() || a.d3() != b.d3())
    throw Error(ErrorCode::DimensionMismatch, "tensor add");
  Tensor3 r(a.d1(), a.d2(), a.d3());
  for (std::size_t i = 0; i < a.d1(); ++i)
    for (std::size_t j = 0; j < a.d2(); ++j)
      for (std::size_t k = 0; k < a.d3(); ++k) r(i, j, k) = a(i, j, k) + b(i, j, k);
  return r;
}

Tensor3 operator*(double s, const Tensor3& t) {
  Tensor3 r(t.d1(), t.d2(), t.d3());
  for (std::size_t i = 0; i < t.d1(); ++i)
    for (std::size_t j = 0; j < t.d2(); ++j)
      for (std::size_t k = 0; k < t.d3(); ++k) r(i, j, k) = s * t(i, j, k);
  return r;
}

double dot(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (double x : m.entries()) s += x * x;
  return std::sqrt(s);
}

double trace(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "trace");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

double sum(const Vector& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

Vector normalized(const Vector& v) {
  const double n = norm(v);
  if (n == 0.0) throw Error(ErrorCode::InvalidArgument, "cannot normalize the zero vector");
  return (1.0 / n) * v;
}

Matrix tensor_product(const Vector& a, const Vector& b) {
  Matrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(i, j) = a[i] * b[j];
  return m;
}

Tensor3 tensor_product(const Vector& a, const Vector& b, const Vector& c) {
  Tensor3 t(a.dim(), b.dim(), c.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k) t(i, j, k) = a[i] * b[j] * c[k];
  return t;
}

Vector matvec(const Matrix& m, const Vector& v) {
  require_same_dim(m.cols(), v.dim(), "matvec");
  Vector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Vector vecmat(const Vector& v, const Matrix& m) {
  require_same_dim(v.dim(), m.rows(), "vecmat");
  Vector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += v[i] * m(i, j);
    r[j] = s;
  }
  return r;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_dim(a.cols(), b.rows(), "matmul");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector pointwise(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "pointwise");
  Vector r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] * b[i];
  return r;
}

Matrix pointwise(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "pointwise");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) * b(i, j);
  return r;
}

namespace {

double cosine_span(std::span<const double> a, std::span<const double> b) {
  double ab = 0.0, aa = 0.0, bb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  if (aa == 0.0 || bb == 0.0) return 0.0;
  const double c = ab / (std::sqrt(aa) * std::sqrt(bb));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace

double cosine(const Vector& a, const Vector& b) {
  require_same_dim(a.dim(), b.dim(), "cosine");
  return cosine_span(a.entries(), b.entries());
}

double cosine(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "cosine");
  return cosine_span(a.entries(), b.entries());
}

Matrix contract(const Tensor3& t, std::size_t axis, const Vector& v) {
  switch (axis) {
    case 0: {
      require_same_dim(t.d1(), v.dim(), "contract axis 0");
      Matrix r(t.d2(), t.d3());
      for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
          for (std::size_t k = 0; k < t.d3(); ++k) r(j, k) += v[i] * t(i, j, k);
      return r;
    }
    case 1: {
      require_same_dim(t.d2(), v.dim(), "contract axis 1");
      Matrix r(t.d1(), t.d3());
      for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
          for (std::size_t k = 0; k < t.d3(); ++k) r(i, k) += v[j] * t(i, j, k);
      return r;
    }
    case 2: {
      require_same_dim(t.d3(), v.dim(), "contract axis 2");
      Matrix r(t.d1(), t.d2());
      for (std::size_t i = 0; i < t.d1(); ++i)
        for (std::size_t j = 0; j < t.d2(); ++j)
          for (std::size_t k = 0; k < t.d3(); ++k) r(i, j) += v[k] * t(i, j, k);
      return r;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "tensor axis must be 0, 1 or 2");
  }
}

// -- Frobenius operators ------------------------------------------------------

Matrix frobenius_copy(const Vector& v) {
  Matrix m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) m(i, i) = v[i];
  return m;
}

Vector frobenius_mu(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "mu needs a square matrix");
  Vector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, i);
  return v;
}

Vector iota_delete(const Matrix& m, Axis axis) {
  if (axis == Axis::Rows) {
    Vector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r[j] += m(i, j);
    return r;
  }
  Vector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j);
  return r;
}

// -- spectral -----------------------------------------------------------------

Rank1Approx rank1_approx(const Matrix& m, int max_iterations, std::uint64_t seed) {
  if (frobenius_norm(m) == 0.0) throw Error(ErrorCode::InvalidArgument, "rank1_approx of zero matrix");
  constexpr double kTolerance = 1e-9;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto random_unit = [&] {
    Vector v(m.cols());
    double n = 0.0;
    while (n == 0.0) {
      for (std::size_t j = 0; j < v.dim(); ++j) v[j] = gauss(rng);
      n = norm(v);
    }
    return (1.0 / n) * v;
  };

  Vector v = random_unit();
  Rank1Approx out;
  for (int it = 1; it <= max_iterations; ++it) {
    Vector mv = matvec(m, v);
    double mv_norm = norm(mv);
    // The start landed in the null space; draw again.
    if (mv_norm == 0.0) {
      v = random_unit();
      continue;
    }
    Vector u = (1.0 / mv_norm) * mv;
    Vector w = vecmat(u, m);
    const double sigma = norm(w);
    Vector v_next = (1.0 / sigma) * w;
    const double change = norm(v_next - v);
    v = std::move(v_next);
    out.sigma = sigma;
    out.u = std::move(u);
    out.v = v;
    out.iterations = it;
    if (change < kTolerance) return out;
  }
  throw Error(ErrorCode::DidNotConverge,
              "power iteration exceeded " + std::to_string(max_iterations) + " iterations");
}

SymmetricEigen jacobi_eigen(const Matrix& m, double tol, int max_sweeps) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "jacobi_eigen");
  const std::size_t n = m.rows();
  double scale = 0.0;
  for (double x : m.entries()) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-10 * std::max(1.0, scale))
        throw Error(ErrorCode::InvalidArgument, "jacobi_eigen needs a symmetric matrix");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() >= tol) {
    if (sweep++ >= max_sweeps) throw Error(ErrorCode::DidNotConverge, "jacobi sweeps exhausted");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  SymmetricEigen out;
  out.values = Vector(n);
  out.vectors = Matrix(n, n);
  out.sweeps = sweep;
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = a(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

}  // namespace frobsem
