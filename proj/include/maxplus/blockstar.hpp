#pragma once

#include "maxplus/matrix.hpp"

namespace maxplus {

/// The order m + n matrix
///
///   | 0  B |
///   | C  0 |
///
/// with B of size n x m (upper right) and C of size m x n (lower left).
struct SkewBlock {
  TropMatrix upper;  // B, n x m
  TropMatrix lower;  // C, m x n

  SkewBlock(TropMatrix b, TropMatrix c);

  std::size_t top_order() const { return upper.rows(); }     // n
  std::size_t bottom_order() const { return upper.cols(); }  // m
};

/// The full (m+n) x (m+n) matrix.
TropMatrix assemble(const SkewBlock& sb);

/// (+)_{k=1..min(m,n)} tr (BC)^k, evaluated on whichever of BC, CB has the
/// smaller order. Equals Tr of the assembled matrix whenever that is <= 1;
/// the value is returned even when it exceeds 1 so callers can report it.
TropValue skew_trace(const SkewBlock& sb);

/// Kleene star of the assembled matrix from the star of the smaller of BC
/// and CB. Throws StarDiverges when skew_trace > tolerance.
TropMatrix skew_star(const SkewBlock& sb, double tolerance = kStarTolerance);

}  // namespace maxplus
