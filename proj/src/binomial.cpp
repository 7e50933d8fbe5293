#include "maxplus/binomial.hpp"

#include <string>

namespace maxplus {

namespace {

void require_pair(const TropMatrix& a, const TropMatrix& b, const char* op) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch(std::string(op) +
                            ": operands must be square of equal order");
  }
}

}  // namespace

BinomialTable::BinomialTable(const TropMatrix& a, const TropMatrix& b,
                             std::size_t p)
    : p_(p), order_(a.rows()) {
  require_pair(a, b, "BinomialTable");
  if (p == 0) throw std::invalid_argument("BinomialTable: p must be >= 1");
  cells_.reserve((p + 1) * (p + 2) / 2);

  // Row k = 0: partial sums of powers of B.
  cells_.push_back(TropMatrix::identity(order_));
  for (std::size_t l = 1; l <= p; ++l) {
    cells_.push_back(
        oplus(TropMatrix::identity(order_), otimes(b, cells_.back())));
    ++products_;
  }
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t l = 0; k + l <= p; ++l) {
      TropMatrix t = otimes(a, cell(k - 1, l));
      ++products_;
      if (l > 0) {
        t = oplus(t, otimes(b, cells_.back()));
        ++products_;
      }
      cells_.push_back(std::move(t));
    }
  }
}

std::size_t BinomialTable::index(std::size_t k, std::size_t l) const {
  // Row k holds p - k + 1 cells; rows are stored one after another.
  return k * (p_ + 1) - k * (k - 1) / 2 + l;
}

const TropMatrix& BinomialTable::cell(std::size_t k, std::size_t l) const {
  if (k + l > p_) throw std::out_of_range("BinomialTable::cell: k + l > p");
  return cells_[index(k, l)];
}

TropMatrix binomial_power_sum(const TropMatrix& a, const TropMatrix& b,
                              std::size_t p) {
  const BinomialTable table(a, b, p);
  TropMatrix sum = otimes(b, table.cell(0, p - 1));
  for (std::size_t k = 1; k <= p; ++k) sum = oplus(sum, table.cell(k, p - k));
  return sum;
}

TropValue binomial_trace_sum(const TropMatrix& a, const TropMatrix& b,
                             std::size_t p) {
  return trace(binomial_power_sum(a, b, p));
}

std::vector<TropValue> weighted_trace_terms(const TropMatrix& p_mat,
                                            const TropMatrix& q_mat,
                                            std::size_t p) {
  const BinomialTable table(p_mat, q_mat, p);
  std::vector<TropValue> terms(p + 1, kZero);
  terms[0] = trace(otimes(q_mat, table.cell(0, p - 1)));
  for (std::size_t k = 1; k <= p; ++k) terms[k] = trace(table.cell(k, p - k));
  return terms;
}

std::vector<TropValue> weighted_form_terms(const TropMatrix& lhs,
                                           const TropMatrix& p_mat,
                                           const TropMatrix& q_mat,
                                           const TropMatrix& rhs,
                                           std::size_t p) {
  require_pair(p_mat, q_mat, "weighted_form_terms");
  const std::size_t d = p_mat.rows();
  if (lhs.rows() != 1 || lhs.cols() != d || rhs.cols() != 1 ||
      rhs.rows() != d) {
    throw DimensionMismatch("weighted_form_terms: forms must be 1x" +
                            std::to_string(d) + " and " + std::to_string(d) +
                            "x1");
  }
  if (p == 0) throw std::invalid_argument("weighted_form_terms: p must be >= 1");

  // Right-hand recurrence on row vectors, t(k, l) = lhs T(k, l):
  //   t(k, l) = t(k-1, l) P (+) t(k, l-1) Q,  t(0, l) = lhs (+) t(0, l-1) Q.
  std::vector<TropMatrix> prev;
  prev.reserve(p + 1);
  prev.push_back(lhs);
  for (std::size_t l = 1; l <= p; ++l) {
    prev.push_back(oplus(lhs, otimes(prev.back(), q_mat)));
  }
  std::vector<TropValue> terms(p + 1, kZero);
  terms[0] = otimes(prev[p], rhs)[0];
  for (std::size_t k = 1; k <= p; ++k) {
    std::vector<TropMatrix> cur;
    cur.reserve(p - k + 1);
    for (std::size_t l = 0; k + l <= p; ++l) {
      TropMatrix t = otimes(prev[l], p_mat);
      if (l > 0) t = oplus(t, otimes(cur.back(), q_mat));
      cur.push_back(std::move(t));
    }
    terms[k] = otimes(cur[p - k], rhs)[0];
    prev = std::move(cur);
  }
  return terms;
}

}  // namespace maxplus
