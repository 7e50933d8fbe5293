#pragma once

// Brute-force reference implementations. Nothing here calls into the
// optimized kernels: matrices are plain nested vectors with -inf for the
// zero element, and every quantity is computed from its definition.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "maxplus/matrix.hpp"
#include "maxplus/scheduler.hpp"

namespace maxplus::oracle {

using Dense = std::vector<std::vector<double>>;

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Dense to_dense(const TropMatrix& a);
TropMatrix from_dense(const Dense& a);

Dense naive_identity(std::size_t n);
Dense naive_sum(const Dense& a, const Dense& b);
Dense naive_product(const Dense& a, const Dense& b);
Dense naive_power(const Dense& a, std::size_t k);
double naive_trace(const Dense& a);
/// tr A (+) tr A^2 (+) ... (+) tr A^n by explicit powers.
double naive_trace_function(const Dense& a);

/// I (+) A (+) ... (+) A^(terms-1); terms = 0 means the order n.
/// Throws StarDiverges when the trace function exceeds tolerance.
TropMatrix naive_star(const TropMatrix& a, std::size_t terms = 0,
                      double tolerance = kStarTolerance);

/// (+)_{k=1..p} (A (+) B)^k from explicit powers.
TropMatrix naive_binomial(const TropMatrix& a, const TropMatrix& b,
                          std::size_t p);

/// (+) over i0 + ... + ik <= l of B^i0 A B^i1 ... A B^ik, by enumerating
/// every composition. Meant for k + l <= 6.
TropMatrix composition_cell(const TropMatrix& a, const TropMatrix& b,
                            std::size_t k, std::size_t l);

/// Maximum mean over all elementary cycles, found by depth-first
/// enumeration. Zero element when the graph is acyclic. Order <= 8.
TropValue brute_force_cycle_mean(const TropMatrix& a);

/// Grid over a box with halving refinement around the incumbent.
struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  double initial_step = 0.5;
  int refinement_rounds = 24;
  double tolerance = 1e-6;
  int window = 8;  // refinement searches +-window steps per coordinate
  double max_evaluations = 1e8;
};

struct GridResult {
  bool found = false;
  TropValue best = kZero;
  std::vector<double> primary;    // u (stage 1) or x (stage 2)
  std::vector<double> secondary;  // v (stage 1) or y (stage 2)
  std::uint64_t evaluations = 0;
  std::vector<double> history;    // best value after each round
  double final_step = 0.0;
};

/// Box [g, h] over the worker coordinates. Requires regular g.
GridSpec default_spec(const sched::ProblemInstance& inst);

/// Minimizes max_i(max_j(c_ij + u_j) - v_i) over g <= u <= h,
/// q <= v <= r, D^- v <= u. For each u the best v is the largest feasible
/// one, so only u is gridded; the verdict is exact because u = h is
/// always on the grid.
GridResult grid_search_stage1(const sched::ProblemInstance& inst,
                              const GridSpec& spec);
GridResult grid_search_stage1(const sched::ProblemInstance& inst);

/// Minimizes max_i(max_j(a_ij + x_j) - y_i) over the second-stage
/// constraints with the first-stage system fixed at mu. y is eliminated as
/// above. A grid point is accepted when the lower bound on y exceeds the
/// upper one by at most the current step, since the optimal face can be
/// lower-dimensional and miss every grid point.
GridResult grid_search_stage2(const sched::ProblemInstance& inst,
                              const TropValue& mu, const GridSpec& spec);
GridResult grid_search_stage2(const sched::ProblemInstance& inst,
                              const TropValue& mu);

}  // namespace maxplus::oracle
