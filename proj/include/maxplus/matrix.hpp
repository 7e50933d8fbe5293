#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "maxplus/error.hpp"
#include "maxplus/semiring.hpp"

namespace maxplus {

/// Absolute slack used when deciding whether a closure diverges, i.e.
/// whether Tr(A) <= 1 holds up to floating-point noise.
inline constexpr double kStarTolerance = 1e-9;

/// Dense row-major max-plus matrix. Vectors are one-column matrices and
/// row vectors one-row matrices; both dimensions are always positive.
class TropMatrix {
 public:
  /// rows x cols matrix filled with `fill` (the zero element by default).
  TropMatrix(std::size_t rows, std::size_t cols, TropValue fill = kZero);

  /// Row-by-row literal; every row must have the same length.
  TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows);

  static TropMatrix identity(std::size_t n);
  static TropMatrix zeros(std::size_t rows, std::size_t cols) {
    return TropMatrix(rows, cols);
  }
  static TropMatrix column(std::span<const TropValue> entries);
  static TropMatrix column(std::initializer_list<TropValue> entries) {
    return column(std::span<const TropValue>(entries.begin(), entries.size()));
  }
  static TropMatrix row(std::span<const TropValue> entries);
  static TropMatrix row(std::initializer_list<TropValue> entries) {
    return row(std::span<const TropValue>(entries.begin(), entries.size()));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  const TropValue& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  TropValue& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  /// Entry access for one-column or one-row matrices.
  const TropValue& operator[](std::size_t k) const { return data_[k]; }
  TropValue& operator[](std::size_t k) { return data_[k]; }

  std::span<const TropValue> entries() const { return data_; }

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TropValue> data_;
};

/// Raised by kleene_star when the series does not converge.
class StarDiverges : public Error {
 public:
  explicit StarDiverges(TropValue trace_value);
  /// Value of Tr(A) that violates Tr(A) <= 1.
  TropValue trace_value() const { return trace_value_; }

 private:
  TropValue trace_value_;
};

// Elementwise and product operations.

TropMatrix oplus(const TropMatrix& a, const TropMatrix& b);
TropMatrix otimes(const TropMatrix& a, const TropMatrix& b);
TropMatrix otimes(const TropValue& x, const TropMatrix& a);

/// Multiplicative inverse transpose; zero entries stay zero.
/// Throws ZeroMatrix for the zero matrix, where it is undefined.
TropMatrix conjugate(const TropMatrix& a);

/// Same as conjugate(), but maps a zero matrix to the transposed zero
/// matrix. Used where a constraint matrix may legitimately be empty.
TropMatrix conjugate_allow_zero(const TropMatrix& a);

/// Matrix power; power(a, 0) is the identity.
TropMatrix power(const TropMatrix& a, std::size_t k);

/// tr A: the max over the diagonal.
TropValue trace(const TropMatrix& a);

/// Tr(A) = tr A (+) tr A^2 (+) ... (+) tr A^n.
TropValue trace_function(const TropMatrix& a);

/// A* = I (+) A (+) A^2 (+) ..., computed as a Floyd-Warshall closure.
/// Throws StarDiverges when Tr(A) > tolerance.
TropMatrix kleene_star(const TropMatrix& a, double tolerance = kStarTolerance);

/// Maximum cycle mean of the weighted digraph of A (Karp's algorithm run
/// from a virtual source attached to every node). Returns the zero element
/// when the digraph has no cycle.
TropValue spectral_radius(const TropMatrix& a);

/// The same quantity from its algebraic definition,
/// (+)_{k=1..n} tr^{1/k}(A^k). O(n^4); used as a cross-check.
TropValue spectral_radius_by_traces(const TropMatrix& a);

// Predicates.

bool is_zero(const TropMatrix& a);
bool is_regular(const TropMatrix& v);
bool is_column_regular(const TropMatrix& a);
bool is_row_regular(const TropMatrix& a);

/// Entrywise approx_equal on matrices of equal shape.
bool approx_equal(const TropMatrix& a, const TropMatrix& b, double tol);

/// Entrywise a <= b + tol.
bool leq_tol(const TropMatrix& a, const TropMatrix& b, double tol);

std::ostream& operator<<(std::ostream& os, const TropMatrix& a);

}  // namespace maxplus
