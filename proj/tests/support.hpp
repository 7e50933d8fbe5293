#pragma once

#include <cstdint>
#include <random>

#include "maxplus/matrix.hpp"
#include "maxplus/scheduler.hpp"

namespace testing_support {

using maxplus::TropMatrix;
using maxplus::sched::ProblemInstance;
using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);

/// Integer entries in [lo, hi]; each entry is the zero element with
/// probability zero_prob.
TropMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo,
                         int hi, double zero_prob = 0.0);

/// Subtracts the maximum cycle mean from every entry, so that the trace
/// function is at most 0. Acyclic matrices are returned unchanged.
TropMatrix normalize_cycles(const TropMatrix& a);

/// m = n = 1: A = 4, B = 3, C = 1, D = 2, g = 0, h = 10, q = 5, r = 8.
ProblemInstance worked_instance();

/// Integer instance with nonempty boxes, B >= D entrywise and every
/// first-stage due date reachable, hence feasible at both stages.
ProblemInstance random_feasible_instance(Rng& rng, std::size_t m,
                                         std::size_t n);

/// Integer instance with nonempty boxes and arbitrary lags; feasibility at
/// either stage is left to chance.
ProblemInstance random_instance(Rng& rng, std::size_t m, std::size_t n);

/// Raises every entry of h and r by `delta`.
ProblemInstance relax_deadlines(ProblemInstance inst, double delta);

}  // namespace testing_support
