#pragma once

#include <optional>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Greatest solution x_max = (d^- A)^- of A x <= d; every solution is
/// x <= x_max. A must be column-regular and d regular.
TropMatrix solve_upper_bound(const TropMatrix& a, const TropMatrix& d);

/// Regular solutions of A x (+) b <= x <= d.
///
/// delta = Tr(A) (+) d^- A* b decides existence. When delta <= 1 the
/// solutions are exactly x = A* w with lower <= w <= upper, where
/// lower = b and upper = (d^- A*)^-.
struct BoxSolutionSet {
  TropValue delta;
  bool feasible = false;
  std::optional<TropMatrix> generator;  // A*, present when feasible
  std::optional<TropMatrix> lower;      // b
  std::optional<TropMatrix> upper;      // (d^- A*)^-
};

/// Infeasibility is reported through BoxSolutionSet::feasible, not thrown.
/// Throws InternalConsistency if delta <= 1 but the box comes out empty.
BoxSolutionSet solve_double_inequality(const TropMatrix& a,
                                       const TropMatrix& b,
                                       const TropMatrix& d,
                                       double tolerance = kStarTolerance);

}  // namespace maxplus
