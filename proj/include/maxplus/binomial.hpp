#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus {

/// Table of the matrices
///
///   T(k, l) = (+) over i0 + ... + ik <= l of  B^i0 (A B^i1) ... (A B^ik)
///
/// for k + l <= p, i.e. every word with exactly k factors A and at most l
/// factors B. Filled with T(k, l) = A T(k-1, l) (+) B T(k, l-1), starting
/// from T(k, 0) = A^k and T(0, l) = I (+) B (+) ... (+) B^l.
///
/// T(0, l) is the partial sum of powers of B, not B^l alone: only the sum
/// makes the recurrence reproduce the defining expression.
class BinomialTable {
 public:
  BinomialTable(const TropMatrix& a, const TropMatrix& b, std::size_t p);

  std::size_t truncation() const { return p_; }
  std::size_t order() const { return order_; }

  /// T(k, l); requires k + l <= truncation().
  const TropMatrix& cell(std::size_t k, std::size_t l) const;

  /// Number of d x d matrix products spent filling the table.
  std::size_t products() const { return products_; }

 private:
  std::size_t index(std::size_t k, std::size_t l) const;

  std::size_t p_;
  std::size_t order_;
  std::size_t products_ = 0;
  std::vector<TropMatrix> cells_;
};

/// (+)_{k=1..p} (A (+) B)^k, assembled from the table as
/// (+)_k T(k, p-k) (+) (+)_k B^k.
TropMatrix binomial_power_sum(const TropMatrix& a, const TropMatrix& b,
                              std::size_t p);

/// (+)_{k=1..p} tr (A (+) B)^k.
TropValue binomial_trace_sum(const TropMatrix& a, const TropMatrix& b,
                             std::size_t p);

/// Degree-separated trace coefficients of (+)_{k=1..p} tr(t P (+) Q)^k as a
/// polynomial in the scalar t. Entry k (1 <= k <= p) is the coefficient of
/// t^k, tr T(k, p-k) built with A = P, B = Q; entry 0 is the t-free part
/// (+)_{k=1..p} tr Q^k. Size p + 1.
std::vector<TropValue> weighted_trace_terms(const TropMatrix& p_mat,
                                            const TropMatrix& q_mat,
                                            std::size_t p);

/// Degree-separated bilinear forms lhs T(k, p-k) rhs for k = 0..p, where the
/// table uses A = P, B = Q. lhs is a row vector, rhs a column vector.
/// Evaluated with row-vector products only, O(d^2 p^2).
std::vector<TropValue> weighted_form_terms(const TropMatrix& lhs,
                                           const TropMatrix& p_mat,
                                           const TropMatrix& q_mat,
                                           const TropMatrix& rhs,
                                           std::size_t p);

}  // namespace maxplus
