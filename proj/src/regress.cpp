#include "frobsem/regress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "frobsem/textio.hpp"

namespace frobsem {

namespace {

void check_lists(std::size_t a, std::size_t b, const char* what) {
  if (a == 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": no training rows");
  if (a != b) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": list lengths differ");
}

void check_dims(const std::vector<Vector>& vs, std::size_t n, const char* what) {
  for (const auto& v : vs)
    if (v.dim() != n) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": inconsistent dimensions");
}

void check_options(const DescentOptions& o) {
  if (!(o.lambda >= 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be nonnegative");
  if (!(o.lr > 0.0)) throw Error(ErrorCode::InvalidArgument, "learning rate must be positive");
  if (o.epochs == 0) throw Error(ErrorCode::InvalidArgument, "epochs must be positive");
}

std::vector<std::size_t> row_order(std::size_t m, const DescentOptions& o) {
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (o.shuffle_seed) {
    std::mt19937_64 rng(*o.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

template <class T>
std::vector<T> permute(const std::vector<T>& v, const std::vector<std::size_t>& order) {
  std::vector<T> out;
  out.reserve(v.size());
  for (auto i : order) out.push_back(v[i]);
  return out;
}

double sq(const Matrix& m) { return frobenius_norm(m) * frobenius_norm(m); }

// Shared descent loop. `eval(params)` returns (loss, grads); params and grads
// are vectors of matrices of matching shapes.
template <class Eval>
std::vector<Matrix> descend(std::vector<Matrix> params, const DescentOptions& o, Eval eval, double& final_loss,
                            std::size_t& steps, std::vector<double>& history) {
  auto [loss, grads] = eval(params);
  if (!std::isfinite(loss)) throw Error(ErrorCode::Diverged, "initial loss is not finite");
  history.push_back(loss);
  double lr = o.lr;
  steps = 0;
  for (std::size_t epoch = 0; epoch < o.epochs; ++epoch) {
    double gnorm2 = 0.0;
    for (const auto& g : grads) gnorm2 += sq(g);
    if (std::sqrt(gnorm2) < o.tolerance) break;

    bool accepted = false;
    while (!accepted) {
      std::vector<Matrix> trial = params;
      for (std::size_t i = 0; i < trial.size(); ++i) trial[i] = trial[i] - lr * grads[i];
      auto [trial_loss, trial_grads] = eval(trial);
      if (!o.backtracking) {
        if (!std::isfinite(trial_loss))
          throw Error(ErrorCode::Diverged, "loss became non-finite at epoch " + std::to_string(epoch + 1));
        params = std::move(trial);
        loss = trial_loss;
        grads = std::move(trial_grads);
        accepted = true;
      } else if (std::isfinite(trial_loss) && trial_loss <= loss) {
        params = std::move(trial);
        loss = trial_loss;
        grads = std::move(trial_grads);
        accepted = true;
        lr = o.lr;
      } else {
        lr *= 0.5;
        if (lr < o.lr * 1e-30) break;
      }
    }
    if (!accepted) break;
    ++steps;
    history.push_back(loss);
  }
  final_loss = loss;
  return params;
}

}  // namespace

void RegressionProblem::validate() const {
  check_lists(inputs.size(), targets.size(), "regression");
  check_dims(inputs, inputs.front().dim(), "regression inputs");
  check_dims(targets, inputs.front().dim(), "regression targets");
  check_options(options);
}

LossAndGradient matrix_loss_and_gradient(const RegressionProblem& p, const Matrix& w) {
  const std::size_t m = p.inputs.size();
  if (w.rows() != p.targets.front().dim() || w.cols() != p.inputs.front().dim())
    throw Error(ErrorCode::DimensionMismatch, "weight matrix shape does not match the data");
  LossAndGradient out{0.0, Matrix(w.rows(), w.cols())};
  for (std::size_t r = 0; r < m; ++r) {
    const Vector res = matvec(w, p.inputs[r]) - p.targets[r];
    out.loss += dot(res, res);
    out.gradient = out.gradient + tensor_product(res, p.inputs[r]);
  }
  const double scale = 1.0 / static_cast<double>(m);
  out.loss = 0.5 * scale * (out.loss + p.options.lambda * sq(w));
  out.gradient = scale * (out.gradient + p.options.lambda * w);
  return out;
}

TrainedMatrix train_matrix(const RegressionProblem& p) {
  p.validate();
  const auto order = row_order(p.inputs.size(), p.options);
  RegressionProblem q{permute(p.inputs, order), permute(p.targets, order), p.options};
  TrainedMatrix out;
  auto eval = [&](const std::vector<Matrix>& params) {
    auto lg = matrix_loss_and_gradient(q, params[0]);
    return std::pair<double, std::vector<Matrix>>{lg.loss, {std::move(lg.gradient)}};
  };
  auto params = descend({Matrix(q.targets.front().dim(), q.inputs.front().dim())}, q.options, eval, out.loss,
                        out.epochs, out.history);
  out.w = std::move(params[0]);
  return out;
}

void JointProblem::validate() const {
  check_lists(subjects.size(), targets.size(), "joint regression");
  check_lists(objects.size(), targets.size(), "joint regression");
  const std::size_t n = subjects.front().dim();
  check_dims(subjects, n, "joint regression");
  check_dims(objects, n, "joint regression");
  check_dims(targets, n, "joint regression");
  check_options(options);
}

JointLossAndGradient joint_loss_and_gradient(const JointProblem& p, const Matrix& w_s, const Matrix& w_o) {
  const std::size_t m = p.targets.size();
  const std::size_t n = p.targets.front().dim();
  if (w_s.rows() != n || w_s.cols() != n || w_o.rows() != n || w_o.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "joint weight matrices must be square over the data dimension");
  JointLossAndGradient out{0.0, Matrix(n, n), Matrix(n, n)};
  for (std::size_t r = 0; r < m; ++r) {
    const Vector& s = p.subjects[r];
    const Vector& o = p.objects[r];
    const Vector ws = matvec(w_s, s), wo = matvec(w_o, o);
    if (p.pointwise_interaction) {
      const Vector res = pointwise(ws, o) + pointwise(wo, s) - p.targets[r];
      out.loss += dot(res, res);
      out.grad_s = out.grad_s + tensor_product(pointwise(res, o), s);
      out.grad_o = out.grad_o + tensor_product(pointwise(res, s), o);
    } else {
      const Vector res = ws + wo - p.targets[r];
      out.loss += dot(res, res);
      out.grad_s = out.grad_s + tensor_product(res, s);
      out.grad_o = out.grad_o + tensor_product(res, o);
    }
  }
  const double scale = 1.0 / static_cast<double>(m);
  const double lambda = p.options.lambda;
  out.loss = 0.5 * scale * (out.loss + lambda * (sq(w_s) + sq(w_o)));
  out.grad_s = scale * (out.grad_s + lambda * w_s);
  out.grad_o = scale * (out.grad_o + lambda * w_o);
  return out;
}

TrainedJoint train_joint(const JointProblem& p) {
  p.validate();
  const auto order = row_order(p.targets.size(), p.options);
  JointProblem q{permute(p.subjects, order), permute(p.objects, order), permute(p.targets, order),
                 p.pointwise_interaction, p.options};
  const std::size_t n = q.targets.front().dim();
  TrainedJoint out;
  auto eval = [&](const std::vector<Matrix>& params) {
    auto lg = joint_loss_and_gradient(q, params[0], params[1]);
    return std::pair<double, std::vector<Matrix>>{lg.loss, {std::move(lg.grad_s), std::move(lg.grad_o)}};
  };
  auto params = descend({Matrix(n, n), Matrix(n, n)}, q.options, eval, out.loss, out.epochs, out.history);
  out.w_s = std::move(params[0]);
  out.w_o = std::move(params[1]);
  return out;
}

Vector predict(const Matrix& w, const Vector& arg) { return matvec(w, arg); }

Vector predict_joint(const TrainedJoint& t, const Vector& subj, const Vector& obj, bool pointwise_interaction) {
  const Vector ws = matvec(t.w_s, subj), wo = matvec(t.w_o, obj);
  return pointwise_interaction ? pointwise(ws, obj) + pointwise(wo, subj) : ws + wo;
}

std::pair<std::vector<Vector>, std::vector<Vector>> read_training_pairs(const std::string& path) {
  std::pair<std::vector<Vector>, std::vector<Vector>> out;
  const auto lines = textio::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (textio::trim(lines[i]).empty()) continue;
    const auto cols = textio::split_exact(lines[i], '\t');
    if (cols.size() != 2)
      throw Error(ErrorCode::FormatError, path + ":" + std::to_string(i + 1) + ": expected two tab-separated vectors");
    out.first.push_back(textio::parse_vector(cols[0]));
    out.second.push_back(textio::parse_vector(cols[1]));
  }
  return out;
}

}  // namespace frobsem
