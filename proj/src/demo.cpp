#include "frobsem/demo.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

#include "frobsem/compose.hpp"
#include "frobsem/quantum.hpp"

namespace frobsem {

QuantumDemo run_quantum_demo() {
  const Vector bank_f{1, 8}, bank_r{9, 2}, river{7, 1}, fish{5, 2}, money{2, 7};

  QuantumDemo d;
  const DensityMatrix bank = density_from_ensemble(Ensemble::from_weights({0.5, 0.5}, {bank_f, bank_r}));
  d.rho_bank = bank.matrix();
  d.entropy_bank = vn_entropy(bank);
  d.max_entropy = vn_entropy(DensityMatrix(0.5 * Matrix::identity(2)));

  const DensityMatrix r = DensityMatrix::pure(river);
  const ComposedOperator rb = frobenius_compose_density(r.matrix(), bank.matrix());
  d.rho_river_bank = rb.op;
  d.entropy_river_bank = vn_entropy(rb.op);
  d.sim_fish = trace_similarity(rb.op, DensityMatrix::pure(fish).matrix());
  d.sim_money = trace_similarity(rb.op, DensityMatrix::pure(money).matrix());

  const Vector bank_amb = bank_f + bank_r;
  const Vector rv = pointwise(river, bank_amb);
  d.cos_fish = cosine(rv, fish);
  d.cos_money = cosine(rv, money);
  return d;
}

namespace {

std::string f2(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string mat2(const Matrix& m) {
  return "[[" + f2(m(0, 0)) + ", " + f2(m(0, 1)) + "], [" + f2(m(1, 0)) + ", " + f2(m(1, 1)) + "]]";
}

std::string vec(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += std::to_string(static_cast<long long>(std::llround(v[i])));
  }
  return out + ")";
}

}  // namespace

std::string format_quantum_demo(const QuantumDemo& d) {
  std::string out;
  out += "rho_bank\t" + mat2(d.rho_bank) + "\n";
  out += "S(rho_bank)\t" + f2(d.entropy_bank) + "\n";
  out += "ln2\t" + f2(d.max_entropy) + "\n";
  out += "rho_river_bank\t" + mat2(d.rho_river_bank) + "\n";
  out += "S(rho_river_bank)\t" + f2(d.entropy_river_bank) + "\n";
  out += "Tr(rho_river_bank fish)\t" + f2(d.sim_fish) + "\n";
  out += "Tr(rho_river_bank money)\t" + f2(d.sim_money) + "\n";
  out += "cos(river*bank, fish)\t" + f2(d.cos_fish) + "\n";
  out += "cos(river*bank, money)\t" + f2(d.cos_money) + "\n";
  return out;
}

TruthDemo run_truth_demo() {
  constexpr std::size_t n = 4;
  TruthDemo d;
  d.subject = Vector::basis(n, 1);
  d.likes_obj = Vector{1, 1, 0, 1};
  d.product = pointwise(d.subject, d.likes_obj);

  for (unsigned mask = 0; mask < (1u << (n * n)); ++mask) {
    if (std::popcount(mask) > 4) continue;
    Matrix rel(n, n);
    for (std::size_t b = 0; b < n * n; ++b)
      if (mask & (1u << b)) rel(b / n, b % n) = 1.0;
    ++d.matrices_checked;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector si = Vector::basis(n, i), oj = Vector::basis(n, j);
        const bool related = rel(i, j) == 1.0;
        const Vector cs = copy_subject(si, rel, oj);
        const Vector co = copy_object(si, rel, oj);
        ++d.cases_checked;
        if (cs != (related ? si : Vector(n))) ++d.failures;
        if (co != (related ? oj : Vector(n))) ++d.failures;
      }
  }
  return d;
}

std::string format_truth_demo(const TruthDemo& d) {
  std::string out;
  out += vec(d.subject) + " * " + vec(d.likes_obj) + " = " + vec(d.product) + "\n";
  out += "relations checked\t" + std::to_string(d.matrices_checked) + "\n";
  out += "subject/object pairs checked\t" + std::to_string(d.cases_checked) + "\n";
  out += "membership failures\t" + std::to_string(d.failures) + "\n";
  return out;
}

}  // namespace frobsem
