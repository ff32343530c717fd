#ifndef FROBSEM_QUANTUM_HPP
#define FROBSEM_QUANTUM_HPP

// Density-matrix semantics over real symmetric matrices. An ambiguous word
// is a mixture of its sense states; composition works either by partial
// trace or by the entrywise (Frobenius) product.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "frobsem/linalg.hpp"
#include "frobsem/senses.hpp"

namespace frobsem {

// Symmetric (1e-10), unit trace (1e-9), eigenvalues >= -1e-9.
class DensityMatrix {
 public:
  // Throws InvalidArgument when an invariant fails.
  explicit DensityMatrix(Matrix m);
  static DensityMatrix pure(const Vector& state);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

struct Ensemble {
  std::vector<std::pair<double, Vector>> members;  // (probability, unit state)

  // Normalises the states and rescales the weights to sum to one. Throws
  // BadEnsemble for empty input, nonpositive weights or zero states.
  static Ensemble from_weights(const std::vector<double>& weights, const std::vector<Vector>& states);
};

// sum p_i |s_i><s_i|. Throws BadEnsemble unless probabilities are positive
// and sum to 1 and states are unit vectors of one dimension.
DensityMatrix density_from_ensemble(const Ensemble& e);

// Mixture of the normalised sense centroids, weighted by cluster size or
// uniformly. Zero centroids are left out.
DensityMatrix density_from_inventory(const SenseInventory& inv, bool uniform = false);

// -sum e ln e over the eigenvalues, natural log, 0 ln 0 = 0.
double vn_entropy(const DensityMatrix& rho);
// Same formula applied to any symmetric matrix, e.g. an unnormalised
// composite; eigenvalues in [-1e-9, 0) count as zero.
double vn_entropy(const Matrix& symmetric);

// Tr(a b). Throws DimensionMismatch.
double trace_similarity(const Matrix& a, const Matrix& b);
double trace_similarity(const DensityMatrix& a, const DensityMatrix& b);

struct ComposedOperator {
  Matrix op;
  double trace = 0.0;
};

// Entrywise a (.) b, divided by its trace when renormalize is set. Throws
// ZeroTrace when renormalising a trace <= 1e-12.
ComposedOperator frobenius_compose_density(const Matrix& a, const Matrix& b, bool renormalize = false);

// Verb over N (x) S (index a*n + s); traces out N against the subject.
ComposedOperator compose_intransitive(const Matrix& rho_subj, const Matrix& rho_verb);
// Adjective over N_result (x) N_arg; traces out the argument leg.
ComposedOperator compose_adjective(const Matrix& rho_adj, const Matrix& rho_noun);
// Verb over N_subj (x) S (x) N_obj; traces out both noun legs.
ComposedOperator compose_transitive(const Matrix& rho_verb, const Matrix& rho_subj, const Matrix& rho_obj);

// Entropy of the reduced state on A of a unit vector over A (x) B.
double entanglement_pure(const Vector& psi, std::size_t dim_a, std::size_t dim_b);

// Density matrix file: `frobsem-dm v1 <dim>` then dim rows.
std::string serialize_density(const Matrix& m);
Matrix parse_density(const std::vector<std::string>& lines);
void save_density(const Matrix& m, const std::string& path);
Matrix load_density(const std::string& path);

}  // namespace frobsem

#endif  // FROBSEM_QUANTUM_HPP
