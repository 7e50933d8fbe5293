#include "support.hpp"

#include "maxplus/oracle.hpp"

namespace testing_support {

using maxplus::kZero;
using maxplus::TropValue;

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

TropMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo,
                         int hi, double zero_prob) {
  std::bernoulli_distribution hole(zero_prob);
  TropMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a(i, j) = hole(rng) ? kZero : TropValue(uniform_int(rng, lo, hi));
  return a;
}

TropMatrix normalize_cycles(const TropMatrix& a) {
  const TropValue rho = maxplus::oracle::brute_force_cycle_mean(a);
  if (rho.is_zero()) return a;
  return maxplus::otimes(maxplus::inverse(rho), a);
}

ProblemInstance worked_instance() {
  return {{{4.0}}, {{3.0}}, {{1.0}}, {{2.0}},
          {{0.0}}, {{10.0}}, {{5.0}}, {{8.0}}};
}

namespace {

TropMatrix nonzero_matrix(Rng& rng, std::size_t m, std::size_t n, int lo,
                          int hi, double zero_prob) {
  TropMatrix a = random_matrix(rng, m, n, lo, hi, zero_prob);
  if (maxplus::is_zero(a)) a(0, 0) = TropValue(uniform_int(rng, lo, hi));
  return a;
}

}  // namespace

ProblemInstance random_feasible_instance(Rng& rng, std::size_t m,
                                         std::size_t n) {
  ProblemInstance inst = random_instance(rng, m, n);
  // B >= D (zero where D is zero) makes B^- y <= x implied by D^- y <= x.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inst.b(i, j) = inst.d(i, j).is_zero()
                         ? kZero
                         : TropValue(inst.d(i, j).value() + uniform_int(rng, 0, 3));
    }
  // q_i - d_ij <= h_j keeps the latest start times admissible.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.d(i, j).is_zero()) continue;
      const double need = inst.q[i].value() - inst.d(i, j).value();
      if (need > inst.h[j].value()) inst.h[j] = need;
    }
  return inst;
}

ProblemInstance random_instance(Rng& rng, std::size_t m, std::size_t n) {
  ProblemInstance inst{nonzero_matrix(rng, m, n, -3, 4, 0.2),
                       random_matrix(rng, m, n, 0, 5, 0.2),
                       nonzero_matrix(rng, m, n, -3, 4, 0.2),
                       random_matrix(rng, m, n, 0, 5, 0.2),
                       random_matrix(rng, n, 1, 0, 3),
                       TropMatrix(n, 1),
                       random_matrix(rng, m, 1, 2, 8),
                       TropMatrix(m, 1)};
  for (std::size_t j = 0; j < n; ++j) {
    inst.h[j] = inst.g[j].value() + uniform_int(rng, 2, 9);
  }
  for (std::size_t i = 0; i < m; ++i) {
    inst.r[i] = inst.q[i].value() + uniform_int(rng, 1, 8);
  }
  return inst;
}

ProblemInstance relax_deadlines(ProblemInstance inst, double delta) {
  for (std::size_t j = 0; j < inst.h.rows(); ++j) inst.h[j] = inst.h[j].value() + delta;
  for (std::size_t i = 0; i < inst.r.rows(); ++i) inst.r[i] = inst.r[i].value() + delta;
  return inst;
}

}  // namespace testing_support
