#include "frobsem/quantum.hpp"

#include <cmath>

#include "frobsem/textio.hpp"

namespace frobsem {

namespace {

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected a " + std::to_string(n) + "x" +
                                                  std::to_string(n) + " operator, got " + std::to_string(m.rows()) +
                                                  "x" + std::to_string(m.cols()));
}

std::size_t side(const Matrix& m, const char* what) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": operator is not square");
  return m.rows();
}

double entropy_of(const Vector& eigenvalues) {
  double s = 0.0;
  for (double e : eigenvalues) {
    if (e < 0.0 && e >= -1e-9) e = 0.0;
    if (e > 0.0) s -= e * std::log(e);
  }
  return s;
}

}  // namespace

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.square() || m_.rows() == 0) throw Error(ErrorCode::InvalidArgument, "density matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (std::abs(m_(i, j) - m_(j, i)) > 1e-10)
        throw Error(ErrorCode::InvalidArgument, "density matrix is not symmetric");
  if (std::abs(trace(m_) - 1.0) > 1e-9)
    throw Error(ErrorCode::InvalidArgument, "density matrix trace is " + textio::format_double(trace(m_)));
  const auto eig = jacobi_eigen(m_);
  if (eig.values[eig.values.dim() - 1] < -1e-9) throw Error(ErrorCode::InvalidArgument, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::pure(const Vector& state) {
  const Vector u = normalized(state);
  return DensityMatrix(tensor_product(u, u));
}

Ensemble Ensemble::from_weights(const std::vector<double>& weights, const std::vector<Vector>& states) {
  if (weights.empty() || weights.size() != states.size())
    throw Error(ErrorCode::BadEnsemble, "need one weight per state");
  double total = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw Error(ErrorCode::BadEnsemble, "weights must be positive");
    total += w;
  }
  Ensemble e;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (norm(states[i]) == 0.0) throw Error(ErrorCode::BadEnsemble, "zero state in ensemble");
    e.members.emplace_back(weights[i] / total, normalized(states[i]));
  }
  return e;
}

DensityMatrix density_from_ensemble(const Ensemble& e) {
  if (e.members.empty()) throw Error(ErrorCode::BadEnsemble, "empty ensemble");
  const std::size_t n = e.members.front().second.dim();
  double total = 0.0;
  Matrix rho(n, n);
  for (const auto& [p, s] : e.members) {
    if (!(p > 0.0)) throw Error(ErrorCode::BadEnsemble, "probabilities must be positive");
    if (s.dim() != n) throw Error(ErrorCode::BadEnsemble, "states differ in dimension");
    if (std::abs(norm(s) - 1.0) > 1e-9) throw Error(ErrorCode::BadEnsemble, "states must be unit vectors");
    total += p;
    rho = rho + p * tensor_product(s, s);
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::BadEnsemble, "probabilities sum to " + textio::format_double(total));
  // Symmetrise away the rounding of the outer products.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = rho(i, j);
  return DensityMatrix(std::move(rho));
}

DensityMatrix density_from_inventory(const SenseInventory& inv, bool uniform) {
  const auto counts = inv.member_counts();
  std::vector<double> weights;
  std::vector<Vector> states;
  for (std::size_t s = 0; s < inv.centroids.size(); ++s) {
    if (norm(inv.centroids[s]) == 0.0) continue;
    const double w = uniform ? 1.0 : static_cast<double>(s < counts.size() ? counts[s] : 0);
    if (w <= 0.0) continue;
    weights.push_back(w);
    states.push_back(inv.centroids[s]);
  }
  if (states.empty()) throw Error(ErrorCode::BadEnsemble, inv.word.str() + ": no usable sense centroids");
  return density_from_ensemble(Ensemble::from_weights(weights, states));
}

double vn_entropy(const DensityMatrix& rho) { return vn_entropy(rho.matrix()); }

double vn_entropy(const Matrix& symmetric) { return entropy_of(jacobi_eigen(symmetric).values); }

double trace_similarity(const Matrix& a, const Matrix& b) {
  const std::size_t n = side(a, "trace_similarity");
  require_square(b, n, "trace_similarity");
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
  return t;
}

double trace_similarity(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_similarity(a.matrix(), b.matrix());
}

ComposedOperator frobenius_compose_density(const Matrix& a, const Matrix& b, bool renormalize) {
  const std::size_t n = side(a, "frobenius_compose_density");
  require_square(b, n, "frobenius_compose_density");
  ComposedOperator out{pointwise(a, b), 0.0};
  out.trace = trace(out.op);
  if (renormalize) {
    if (out.trace <= 1e-12) throw Error(ErrorCode::ZeroTrace, "composite has trace " + textio::format_double(out.trace));
    out.op = (1.0 / out.trace) * out.op;
    out.trace = 1.0;
  }
  return out;
}

ComposedOperator compose_intransitive(const Matrix& rho_subj, const Matrix& rho_verb) {
  const std::size_t n = side(rho_subj, "compose_intransitive");
  require_square(rho_verb, n * n, "compose_intransitive");
  Matrix out(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      double acc = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) acc += rho_verb(a * n + s, b * n + t) * rho_subj(b, a);
      out(s, t) = acc;
    }
  const double tr = trace(out);
  return {std::move(out), tr};
}

ComposedOperator compose_adjective(const Matrix& rho_adj, const Matrix& rho_noun) {
  const std::size_t n = side(rho_noun, "compose_adjective");
  require_square(rho_adj, n * n, "compose_adjective");
  Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t q = 0; q < n; ++q) {
      double acc = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) acc += rho_adj(r * n + a, q * n + b) * rho_noun(b, a);
      out(r, q) = acc;
    }
  const double tr = trace(out);
  return {std::move(out), tr};
}

ComposedOperator compose_transitive(const Matrix& rho_verb, const Matrix& rho_subj, const Matrix& rho_obj) {
  const std::size_t n = side(rho_subj, "compose_transitive");
  require_square(rho_obj, n, "compose_transitive");
  require_square(rho_verb, n * n * n, "compose_transitive");
  auto idx = [n](std::size_t a, std::size_t s, std::size_t c) { return (a * n + s) * n + c; };
  Matrix out(n, n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      double acc = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const double ps = rho_subj(b, a);
          if (ps == 0.0) continue;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d) acc += rho_verb(idx(a, s, c), idx(b, t, d)) * ps * rho_obj(d, c);
        }
      out(s, t) = acc;
    }
  const double tr = trace(out);
  return {std::move(out), tr};
}

double entanglement_pure(const Vector& psi, std::size_t dim_a, std::size_t dim_b) {
  if (dim_a == 0 || dim_b == 0 || psi.dim() != dim_a * dim_b)
    throw Error(ErrorCode::DimensionMismatch, "state of dimension " + std::to_string(psi.dim()) + " is not " +
                                                  std::to_string(dim_a) + "x" + std::to_string(dim_b));
  if (std::abs(norm(psi) - 1.0) > 1e-9) throw Error(ErrorCode::InvalidArgument, "state must be a unit vector");
  Matrix m(dim_a, dim_b, std::vector<double>(psi.values()));
  return vn_entropy(matmul(m, m.transpose()));
}

std::string serialize_density(const Matrix& m) {
  const std::size_t n = side(m, "density file");
  std::string out = "frobsem-dm v1 " + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) out += textio::join_doubles(m.row(i).entries()) + "\n";
  return out;
}

Matrix parse_density(const std::vector<std::string>& lines) {
  if (lines.empty()) throw Error(ErrorCode::FormatError, "empty density file");
  const auto header = textio::split(lines[0], " ");
  if (header.size() != 3 || header[0] != "frobsem-dm" || header[1] != "v1")
    throw Error(ErrorCode::FormatError, "bad density file header");
  const auto n = textio::parse_int(header[2]);
  if (n < 1) throw Error(ErrorCode::FormatError, "density dimension must be positive");
  const auto dim = static_cast<std::size_t>(n);
  std::vector<double> entries;
  std::size_t rows = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (textio::trim(lines[i]).empty()) continue;
    const Vector row = textio::parse_vector(lines[i]);
    if (row.dim() != dim) throw Error(ErrorCode::FormatError, "density row " + std::to_string(rows + 1) + " has wrong length");
    entries.insert(entries.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows != dim) throw Error(ErrorCode::FormatError, "density file has " + std::to_string(rows) + " rows");
  return Matrix(dim, dim, std::move(entries));
}

void save_density(const Matrix& m, const std::string& path) { textio::write_file(path, serialize_density(m)); }

Matrix load_density(const std::string& path) { return parse_density(textio::read_lines(path)); }

}  // namespace frobsem
