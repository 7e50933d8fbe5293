#include "maxplus/blockstar.hpp"

namespace maxplus {

namespace {

void place(TropMatrix& dst, const TropMatrix& src, std::size_t r0,
           std::size_t c0) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) dst(r0 + i, c0 + j) = src(i, j);
  }
}

TropMatrix join_blocks(const TropMatrix& ul, const TropMatrix& ur,
                       const TropMatrix& ll, const TropMatrix& lr) {
  const std::size_t n = ul.rows();
  const std::size_t m = lr.rows();
  TropMatrix a(n + m, n + m);
  place(a, ul, 0, 0);
  place(a, ur, 0, n);
  place(a, ll, n, 0);
  place(a, lr, n, n);
  return a;
}

}  // namespace

SkewBlock::SkewBlock(TropMatrix b, TropMatrix c)
    : upper(std::move(b)), lower(std::move(c)) {
  if (upper.rows() != lower.cols() || upper.cols() != lower.rows()) {
    throw DimensionMismatch("SkewBlock: B must be n x m and C m x n");
  }
}

TropMatrix assemble(const SkewBlock& sb) {
  const std::size_t n = sb.top_order();
  const std::size_t m = sb.bottom_order();
  return join_blocks(TropMatrix(n, n), sb.upper, sb.lower, TropMatrix(m, m));
}

TropValue skew_trace(const SkewBlock& sb) {
  if (sb.top_order() <= sb.bottom_order()) {
    return trace_function(otimes(sb.upper, sb.lower));
  }
  return trace_function(otimes(sb.lower, sb.upper));
}

TropMatrix skew_star(const SkewBlock& sb, double tolerance) {
  const TropMatrix& b = sb.upper;
  const TropMatrix& c = sb.lower;
  if (sb.top_order() <= sb.bottom_order()) {
    const TropMatrix bc_star = kleene_star(otimes(b, c), tolerance);
    const TropMatrix c_bc_star = otimes(c, bc_star);
    return join_blocks(
        bc_star, otimes(bc_star, b), c_bc_star,
        oplus(TropMatrix::identity(sb.bottom_order()), otimes(c_bc_star, b)));
  }
  const TropMatrix cb_star = kleene_star(otimes(c, b), tolerance);
  const TropMatrix b_cb_star = otimes(b, cb_star);
  return join_blocks(
      oplus(TropMatrix::identity(sb.top_order()), otimes(b_cb_star, c)),
      b_cb_star, otimes(cb_star, c), cb_star);
}

}  // namespace maxplus
