#ifndef FROBSEM_DEMO_HPP
#define FROBSEM_DEMO_HPP

// Two small worked examples: an ambiguous "bank" in a two-dimensional
// water/finance space, and Copy-Subject over a set-theoretic model.

#include <cstddef>
#include <string>

#include "frobsem/linalg.hpp"

namespace frobsem {

struct QuantumDemo {
  Matrix rho_bank;
  double entropy_bank = 0.0;
  double max_entropy = 0.0;  // ln 2
  Matrix rho_river_bank;     // unnormalised
  double entropy_river_bank = 0.0;
  double sim_fish = 0.0;
  double sim_money = 0.0;
  double cos_fish = 0.0;   // cos(river (.) bank, fish) with plain vectors
  double cos_money = 0.0;
};

// Basis: water = e1, finance = e2.
QuantumDemo run_quantum_demo();
std::string format_quantum_demo(const QuantumDemo& d);

struct TruthDemo {
  Vector subject;    // (0,1,0,0)
  Vector likes_obj;  // (1,1,0,1)
  Vector product;
  std::size_t matrices_checked = 0;
  std::size_t cases_checked = 0;
  std::size_t failures = 0;
};

// Also checks, over every 4x4 0/1 relation with at most four entries set
// and every pair of individuals, that Copy-Subject yields the subject when
// the pair is related and zero otherwise (and Copy-Object the object).
TruthDemo run_truth_demo();
std::string format_truth_demo(const TruthDemo& d);

}  // namespace frobsem

#endif  // FROBSEM_DEMO_HPP
