#ifndef FROBSEM_LINALG_HPP
#define FROBSEM_LINALG_HPP

// Dense real vectors, matrices and order-3 tensors over a fixed basis, plus
// the concrete Frobenius operators (copy, uncopy, delete) acting on them.
//
// All storage is row-major double precision. Values are immutable in
// practice: every operation returns a fresh object.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "frobsem/error.hpp"

namespace frobsem {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim, double fill = 0.0) : data_(dim, fill) {}
  Vector(std::initializer_list<double> values);
  // Throws NonFinite if any entry is NaN or infinite.
  explicit Vector(std::vector<double> entries);

  static Vector zeros(std::size_t dim) { return Vector(dim, 0.0); }
  static Vector ones(std::size_t dim) { return Vector(dim, 1.0); }
  static Vector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator[](std::size_t i) const { return data_[i]; }
  double& operator[](std::size_t i) { return data_[i]; }

  std::span<const double> entries() const noexcept { return data_; }
  const std::vector<double>& values() const noexcept { return data_; }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  bool operator==(const Vector&) const = default;

 private:
  std::vector<double> data_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  // Row-major entries; throws DimensionMismatch or NonFinite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols, 0.0}; }
  static Matrix ones(std::size_t rows, std::size_t cols) { return {rows, cols, 1.0}; }
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;

  std::span<const double> entries() const noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, double fill = 0.0)
      : d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, fill) {}
  // Entries in lexicographic (i, j, k) order; throws DimensionMismatch or NonFinite.
  Tensor3(std::size_t d1, std::size_t d2, std::size_t d3, std::vector<double> entries);

  std::size_t d1() const noexcept { return d1_; }
  std::size_t d2() const noexcept { return d2_; }
  std::size_t d3() const noexcept { return d3_; }

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d2_ + j) * d3_ + k];
  }

  std::span<const double> entries() const noexcept { return data_; }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::size_t d3_ = 0;
  std::vector<double> data_;
};

// -- elementary algebra ------------------------------------------------------

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(double s, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& m);
Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator*(double s, const Tensor3& t);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
double frobenius_norm(const Matrix& m);
double trace(const Matrix& m);
double sum(const Vector& v);

// Returns v / |v|; throws InvalidArgument on the zero vector.
Vector normalized(const Vector& v);

Matrix tensor_product(const Vector& a, const Vector& b);
Tensor3 tensor_product(const Vector& a, const Vector& b, const Vector& c);

Vector matvec(const Matrix& m, const Vector& v);
Vector vecmat(const Vector& v, const Matrix& m);
Matrix matmul(const Matrix& a, const Matrix& b);

Vector pointwise(const Vector& a, const Vector& b);
Matrix pointwise(const Matrix& a, const Matrix& b);

// Cosine of the angle between a and b; 0 when either is the zero vector.
double cosine(const Vector& a, const Vector& b);
// Cosine over flattened entries of equally shaped matrices.
double cosine(const Matrix& a, const Matrix& b);

// Contracts the vector with one leg of the tensor (0, 1 or 2) and returns the
// remaining two legs in their original order.
Matrix contract(const Tensor3& t, std::size_t axis, const Vector& v);

// -- Frobenius operators -----------------------------------------------------

// Delta: copies the basis, v -> diag(v).
Matrix frobenius_copy(const Vector& v);
// Mu: uncopies the basis, keeping the diagonal. Throws NotSquare.
Vector frobenius_mu(const Matrix& m);

enum class Axis { Rows, Cols };
// Iota applied to one leg. Rows sums the rows together (one entry per
// column); Cols sums along each row (one entry per row).
Vector iota_delete(const Matrix& m, Axis axis);

// -- spectral helpers ---------------------------------------------------------

struct Rank1Approx {
  double sigma = 0.0;
  Vector u;
  Vector v;
  int iterations = 0;

  Matrix matrix() const { return sigma * tensor_product(u, v); }
};

// Dominant singular triple by power iteration on m^T m from a seeded random
// start. Converges when successive right vectors differ by < 1e-9.
// Throws InvalidArgument for the zero matrix, DidNotConverge otherwise.
Rank1Approx rank1_approx(const Matrix& m, int max_iterations = 1000, std::uint64_t seed = 0);

struct SymmetricEigen {
  Vector values;   // descending
  Matrix vectors;  // column i is the eigenvector for values[i]
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal norm drops below tol.
// Throws NotSquare, InvalidArgument (asymmetric input) or DidNotConverge.
SymmetricEigen jacobi_eigen(const Matrix& m, double tol = 1e-12, int max_sweeps = 100);

bool all_finite(std::span<const double> values);

}  // namespace frobsem

#endif  // FROBSEM_LINALG_HPP
