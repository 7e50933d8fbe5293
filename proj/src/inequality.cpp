#include "maxplus/inequality.hpp"

namespace maxplus {

TropMatrix solve_upper_bound(const TropMatrix& a, const TropMatrix& d) {
  if (d.cols() != 1) throw NotAVector("solve_upper_bound: d must be a column");
  if (a.rows() != d.rows()) {
    throw DimensionMismatch("solve_upper_bound: A and d disagree on rows");
  }
  if (!is_regular(d)) throw NotRegularVector("solve_upper_bound: d must be regular");
  if (!is_column_regular(a)) {
    throw NotColumnRegular("solve_upper_bound: A has an all-zero column");
  }
  return conjugate(otimes(conjugate(d), a));
}

BoxSolutionSet solve_double_inequality(const TropMatrix& a,
                                       const TropMatrix& b,
                                       const TropMatrix& d,
                                       double tolerance) {
  if (!a.is_square()) throw NotSquare("solve_double_inequality: A not square");
  if (b.cols() != 1 || d.cols() != 1) {
    throw NotAVector("solve_double_inequality: b and d must be columns");
  }
  if (b.rows() != a.rows() || d.rows() != a.rows()) {
    throw DimensionMismatch("solve_double_inequality: order mismatch");
  }
  if (!is_regular(d)) {
    throw NotRegularVector("solve_double_inequality: d must be regular");
  }

  BoxSolutionSet out;
  const TropValue tr = trace_function(a);
  if (!leq_tol(tr, kOne, tolerance)) {
    out.delta = tr;
    return out;
  }
  TropMatrix star = [&] {
    try {
      return kleene_star(a, tolerance);
    } catch (const StarDiverges& e) {
      throw InternalConsistency(
          "solve_double_inequality: Tr(A) <= 1 but the closure diverges");
    }
  }();
  const TropMatrix d_conj = conjugate(d);
  out.delta = oplus(tr, otimes(otimes(d_conj, star), b)[0]);
  if (!leq_tol(out.delta, kOne, tolerance)) return out;

  TropMatrix upper = conjugate(otimes(d_conj, star));
  if (!leq_tol(b, upper, tolerance)) {
    throw InternalConsistency(
        "solve_double_inequality: delta <= 1 but the parameter box is empty");
  }
  out.feasible = true;
  out.generator = std::move(star);
  out.lower = b;
  out.upper = std::move(upper);
  return out;
}

}  // namespace maxplus
