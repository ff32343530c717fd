#ifndef FROBSEM_REGRESS_HPP
#define FROBSEM_REGRESS_HPP

// Verb matrices learned by ridge regression against holistic phrase vectors,
// minimising (1/2m)(|W X^T - Y^T|^2 + lambda |W|^2) with full-batch gradient
// descent from a zero start.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frobsem/linalg.hpp"

namespace frobsem {

struct DescentOptions {
  double lambda = 0.0;
  double lr = 0.1;
  std::size_t epochs = 1000;
  // Halve the step when the loss goes up and retry; without it a rising
  // loss is accepted and a non-finite one raises Diverged.
  bool backtracking = true;
  // Stop once the gradient norm falls below this.
  double tolerance = 1e-12;
  // When set, rows are shuffled once with this seed before training.
  std::optional<std::uint64_t> shuffle_seed;
};

struct RegressionProblem {
  std::vector<Vector> inputs;
  std::vector<Vector> targets;
  DescentOptions options;

  // Throws InvalidArgument for empty or unequal lists, DimensionMismatch for
  // inconsistent dimensions.
  void validate() const;
};

struct LossAndGradient {
  double loss = 0.0;
  Matrix gradient;
};

LossAndGradient matrix_loss_and_gradient(const RegressionProblem& p, const Matrix& w);

struct TrainedMatrix {
  Matrix w;
  double loss = 0.0;
  std::size_t epochs = 0;  // accepted steps
  std::vector<double> history;  // loss after each accepted step, starting with the initial loss
};

// Throws Diverged when the loss becomes non-finite.
TrainedMatrix train_matrix(const RegressionProblem& p);

struct JointProblem {
  std::vector<Vector> subjects;
  std::vector<Vector> objects;
  std::vector<Vector> targets;
  // true: (W_s s) (.) o + (W_o o) (.) s; false: W_s s + W_o o.
  bool pointwise_interaction = true;
  DescentOptions options;

  void validate() const;
};

struct JointLossAndGradient {
  double loss = 0.0;
  Matrix grad_s;
  Matrix grad_o;
};

JointLossAndGradient joint_loss_and_gradient(const JointProblem& p, const Matrix& w_s, const Matrix& w_o);

struct TrainedJoint {
  Matrix w_s;
  Matrix w_o;
  double loss = 0.0;
  std::size_t epochs = 0;
  std::vector<double> history;
};

TrainedJoint train_joint(const JointProblem& p);

Vector predict(const Matrix& w, const Vector& arg);
Vector predict_joint(const TrainedJoint& t, const Vector& subj, const Vector& obj, bool pointwise_interaction);

// Training pairs, one per line: `arg vector<TAB>target vector`.
std::pair<std::vector<Vector>, std::vector<Vector>> read_training_pairs(const std::string& path);

}  // namespace frobsem

#endif  // FROBSEM_REGRESS_HPP
