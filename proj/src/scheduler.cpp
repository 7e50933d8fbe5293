#include "maxplus/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "maxplus/binomial.hpp"

namespace maxplus::sched {

namespace {

std::string dims(const TropMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_shape(const TropMatrix& a, std::size_t rows, std::size_t cols,
                   const char* name) {
  if (a.rows() != rows || a.cols() != cols) {
    throw InvalidInstance(std::string(name) + " must be " +
                          std::to_string(rows) + "x" + std::to_string(cols) +
                          ", got " + dims(a));
  }
}

Verdict make_verdict(const TropValue& value) {
  Verdict v;
  v.value = value;
  v.feasible = leq_tol(value, kOne, kFeasibilityTolerance);
  v.marginal = value.is_finite() && std::abs(value.value()) <= kMarginalBand;
  return v;
}

TropValue scalar(const TropMatrix& one_by_one) { return one_by_one(0, 0); }

/// left M^j right for j = 0..count-1, by repeated row-vector products.
std::vector<TropValue> chain(TropMatrix left, const TropMatrix& m,
                             const TropMatrix& right, std::size_t count) {
  std::vector<TropValue> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) left = otimes(left, m);
    out.push_back(scalar(otimes(left, right)));
  }
  return out;
}

TropValue join_rooted(const std::vector<TropValue>& terms, std::size_t first,
                      std::size_t root_offset) {
  TropValue acc = kZero;
  for (std::size_t k = first; k < terms.size(); ++k) {
    acc = oplus(acc, root(terms[k], static_cast<std::int64_t>(k + root_offset)));
  }
  return acc;
}

std::string dominant(const std::vector<TermFamily>& families) {
  const TermFamily* best = nullptr;
  for (const auto& f : families) {
    if (best == nullptr || best->value < f.value) best = &f;
  }
  return best ? best->name : std::string();
}

TropValue join_families(const std::vector<TermFamily>& families) {
  TropValue acc = kZero;
  for (const auto& f : families) acc = oplus(acc, f.value);
  return acc;
}

TropMatrix conj_d(const ProblemInstance& inst) {
  return conjugate_allow_zero(inst.d);
}

std::vector<TermFamily> mu_families(const ProblemInstance& inst) {
  const std::size_t m = inst.tasks();
  const std::size_t n = inst.workers();
  const std::size_t p = std::min(m, n);
  const TropMatrix d_conj = conj_d(inst);
  const TropMatrix h_conj = conjugate(inst.h);
  const TropMatrix r_conj = conjugate(inst.r);
  const TropMatrix due_lhs = oplus(otimes(h_conj, d_conj), r_conj);  // 1 x m

  // All powers go through the smaller of C D^- (m x m) and D^- C (n x n).
  std::vector<TropValue> release;  // h^- (D^- C)^k g,             k = 1..p
  std::vector<TropValue> due;      // (h^- D^- (+) r^-)(C D^-)^k q, k = 1..p
  std::vector<TropValue> cross;    // r^- C (D^- C)^k g,            k = 0..p
  TropValue rho = kZero;
  if (m <= n) {
    const TropMatrix cd = otimes(inst.c, d_conj);
    rho = spectral_radius(cd);
    const TropMatrix cg = otimes(inst.c, inst.g);
    release = chain(otimes(h_conj, d_conj), cd, cg, p);
    due = chain(otimes(due_lhs, cd), cd, inst.q, p);
    cross = chain(r_conj, cd, cg, p + 1);
  } else {
    const TropMatrix dc = otimes(d_conj, inst.c);
    rho = spectral_radius(dc);
    release = chain(otimes(h_conj, dc), dc, inst.g, p);
    due = chain(otimes(due_lhs, inst.c), dc, otimes(d_conj, inst.q), p);
    cross = chain(otimes(r_conj, inst.c), dc, inst.g, p + 1);
  }
  // release[j] and due[j] hold the k = j + 1 terms, cross[j] the k = j term;
  // both get the root 1/(j + 1).
  return {{"cycle_mean", rho},
          {"release_window", join_rooted(release, 0, 1)},
          {"due_window", join_rooted(due, 0, 1)},
          {"deadline_release", join_rooted(cross, 0, 1)}};
}

}  // namespace

void validate_structure(const ProblemInstance& inst) {
  const std::size_t m = inst.a.rows();
  const std::size_t n = inst.a.cols();
  require_shape(inst.b, m, n, "B");
  require_shape(inst.c, m, n, "C");
  require_shape(inst.d, m, n, "D");
  require_shape(inst.g, n, 1, "g");
  require_shape(inst.h, n, 1, "h");
  require_shape(inst.q, m, 1, "q");
  require_shape(inst.r, m, 1, "r");
  if (!is_regular(inst.h)) throw InvalidInstance("h must be regular");
  if (!is_regular(inst.r)) throw InvalidInstance("r must be regular");
  if (is_zero(inst.a)) throw InvalidInstance("A must be a nonzero matrix");
  if (is_zero(inst.c)) throw InvalidInstance("C must be a nonzero matrix");
}

void validate(const ProblemInstance& inst) {
  validate_structure(inst);
  for (std::size_t j = 0; j < inst.workers(); ++j) {
    if (!leq_tol(inst.g[j], inst.h[j], 0.0)) {
      throw InvalidInstance("g must not exceed h (worker " + std::to_string(j) +
                            ")");
    }
  }
  for (std::size_t i = 0; i < inst.tasks(); ++i) {
    if (!leq_tol(inst.q[i], inst.r[i], 0.0)) {
      throw InvalidInstance("q must not exceed r (task " + std::to_string(i) +
                            ")");
    }
  }
}

Verdict check_stage1_feasibility(const ProblemInstance& inst) {
  validate_structure(inst);
  const TropMatrix h_conj = conjugate(inst.h);
  const TropMatrix due_lhs =
      oplus(otimes(h_conj, conj_d(inst)), conjugate(inst.r));
  return make_verdict(
      oplus(scalar(otimes(h_conj, inst.g)), scalar(otimes(due_lhs, inst.q))));
}

StageOneResult solve_stage1(const ProblemInstance& inst) {
  StageOneResult out;
  out.verdict = check_stage1_feasibility(inst);
  if (!out.verdict.feasible) return out;
  out.families = mu_families(inst);
  out.dominant_family = dominant(out.families);
  out.mu = join_families(out.families);
  if (out.mu.is_zero()) {
    throw InvalidInstance(
        "first-stage objective is unbounded below (mu is the zero element)");
  }
  return out;
}

TropValue compute_mu(const ProblemInstance& inst) {
  const StageOneResult res = solve_stage1(inst);
  if (!res.verdict.feasible) {
    std::ostringstream os;
    os << "first stage infeasible: condition value " << res.verdict.value;
    throw StageOneInfeasible(os.str());
  }
  return res.mu;
}

bool stage1_solution_check(const ProblemInstance& inst, const TropValue& mu,
                           const TropMatrix& u, const TropMatrix& v,
                           double tol) {
  if (u.rows() != inst.workers() || u.cols() != 1 || v.rows() != inst.tasks() ||
      v.cols() != 1) {
    return false;
  }
  if (!is_regular(u) || !is_regular(v)) return false;
  const TropMatrix v_lower = oplus(otimes(otimes(inverse(mu), inst.c), u), inst.q);
  const TropMatrix u_lower = oplus(otimes(conj_d(inst), v), inst.g);
  return leq_tol(v_lower, v, tol) && leq_tol(v, inst.r, tol) &&
         leq_tol(u_lower, u, tol) && leq_tol(u, inst.h, tol);
}

DerivedMatrices derive_matrices(const ProblemInstance& inst,
                                const TropValue& mu) {
  TropMatrix d1 = oplus(conjugate_allow_zero(inst.b), conj_d(inst));
  TropMatrix c1 = otimes(inverse(mu), inst.c);
  TropMatrix p = otimes(inst.a, d1);
  TropMatrix q = otimes(c1, d1);
  TropMatrix r = otimes(d1, inst.a);
  TropMatrix s = otimes(d1, c1);
  return DerivedMatrices{std::move(d1), std::move(c1), std::move(p),
                         std::move(q),  std::move(r),  std::move(s)};
}

Verdict check_stage2_feasibility(const DerivedMatrices& dm,
                                 const ProblemInstance& inst) {
  const std::size_t m = inst.tasks();
  const std::size_t n = inst.workers();
  const TropMatrix h_conj = conjugate(inst.h);
  const TropMatrix r_conj = conjugate(inst.r);
  const TropMatrix due_lhs = oplus(otimes(h_conj, dm.d1_conj), r_conj);  // 1 x m
  const TropMatrix rel_lhs = oplus(otimes(r_conj, dm.c1), h_conj);       // 1 x n

  // Tr(Q) = Tr(S); evaluate on the smaller order.
  const TropMatrix& small = (m <= n) ? dm.q : dm.s;
  const TropValue tr = trace_function(small);
  if (!leq_tol(tr, kOne, kFeasibilityTolerance)) return make_verdict(tr);

  TropValue due_term = kZero;
  TropValue rel_term = kZero;
  if (m <= n) {
    // S* = I (+) D1^- Q* C1
    const TropMatrix q_star = kleene_star(dm.q);
    due_term = scalar(otimes(otimes(due_lhs, q_star), inst.q));
    rel_term = oplus(scalar(otimes(rel_lhs, inst.g)),
                     scalar(otimes(otimes(otimes(rel_lhs, dm.d1_conj), q_star),
                                   otimes(dm.c1, inst.g))));
  } else {
    // Q* = I (+) C1 S* D1^-
    const TropMatrix s_star = kleene_star(dm.s);
    rel_term = scalar(otimes(otimes(rel_lhs, s_star), inst.g));
    due_term = oplus(scalar(otimes(due_lhs, inst.q)),
                     scalar(otimes(otimes(otimes(due_lhs, dm.c1), s_star),
                                   otimes(dm.d1_conj, inst.q))));
  }
  return make_verdict(oplus(tr, oplus(due_term, rel_term)));
}

TropValue compute_eta(const DerivedMatrices& dm, const ProblemInstance& inst,
                      std::vector<TermFamily>& families) {
  const std::size_t m = inst.tasks();
  const std::size_t n = inst.workers();
  const std::size_t p = std::min(m, n);
  const TropMatrix h_conj = conjugate(inst.h);
  const TropMatrix r_conj = conjugate(inst.r);
  const TropMatrix due_lhs = oplus(otimes(h_conj, dm.d1_conj), r_conj);
  const TropMatrix rel_lhs = oplus(otimes(r_conj, dm.c1), h_conj);

  // Coefficient of eta^-k in each existence inequality, then the root 1/k
  // (1/(k+1) for the last family, which carries one extra eta^-1).
  const std::vector<TropValue> traces =
      (m <= n) ? weighted_trace_terms(dm.p, dm.q, p)
               : weighted_trace_terms(dm.r, dm.s, p);
  const std::vector<TropValue> release =
      weighted_form_terms(rel_lhs, dm.r, dm.s, inst.g, p);
  const std::vector<TropValue> due =
      weighted_form_terms(due_lhs, dm.p, dm.q, inst.q, p);
  const std::vector<TropValue> cross =
      weighted_form_terms(otimes(r_conj, inst.a), dm.r, dm.s, inst.g, p);

  families = {{"trace", join_rooted(traces, 1, 0)},
              {"release_window", join_rooted(release, 1, 0)},
              {"due_window", join_rooted(due, 1, 0)},
              {"deadline_release", join_rooted(cross, 0, 1)}};
  return join_families(families);
}

TropValue compute_eta(const DerivedMatrices& dm, const ProblemInstance& inst) {
  const Verdict v = check_stage2_feasibility(dm, inst);
  if (!v.feasible) {
    std::ostringstream os;
    os << "second stage infeasible: condition value " << v.value;
    throw StageTwoInfeasible(os.str());
  }
  std::vector<TermFamily> families;
  return compute_eta(dm, inst, families);
}

StageTwoResult solution_set(const DerivedMatrices& dm, const TropValue& eta,
                            const ProblemInstance& inst, const TropValue& mu) {
  const TropValue eta_inv = inverse(eta);
  auto star = [](const TropMatrix& a, const char* which) {
    try {
      return kleene_star(a);
    } catch (const StarDiverges& e) {
      throw InternalConsistency(std::string(which) +
                                " generator diverges at the computed optimum");
    }
  };
  TropMatrix x_gen = star(oplus(otimes(eta_inv, dm.r), dm.s), "x");
  TropMatrix y_gen = star(oplus(otimes(eta_inv, dm.p), dm.q), "y");

  const TropMatrix h_conj = conjugate(inst.h);
  const TropMatrix r_conj = conjugate(inst.r);
  const TropMatrix c_eta = oplus(otimes(eta_inv, inst.a), dm.c1);
  TropMatrix u_upper =
      conjugate(otimes(oplus(h_conj, otimes(r_conj, c_eta)), x_gen));
  TropMatrix v_upper =
      conjugate(otimes(oplus(otimes(h_conj, dm.d1_conj), r_conj), y_gen));
  if (!leq_tol(inst.g, u_upper, kFeasibilityTolerance) ||
      !leq_tol(inst.q, v_upper, kFeasibilityTolerance)) {
    throw InternalConsistency("parameter box is empty at the computed optimum");
  }
  return StageTwoResult{true,      mu,         eta,     std::move(x_gen),
                        std::move(y_gen),      inst.g,  std::move(u_upper),
                        inst.q,    std::move(v_upper), dm, inst.a};
}

ScheduleSolution materialize(const StageTwoResult& result, const TropMatrix& u,
                             const TropMatrix& v, double tol) {
  const auto in_box = [tol](const TropMatrix& w, const TropMatrix& lo,
                            const TropMatrix& hi) {
    return w.rows() == lo.rows() && w.cols() == 1 && is_regular(w) &&
           leq_tol(lo, w, tol) && leq_tol(w, hi, tol);
  };
  if (!in_box(u, result.u_lower, result.u_upper)) {
    throw ParameterOutOfBox("u lies outside [u_lower, u_upper]");
  }
  if (!in_box(v, result.v_lower, result.v_upper)) {
    throw ParameterOutOfBox("v lies outside [v_lower, v_upper]");
  }
  const DerivedMatrices& dm = result.derived;
  const TropMatrix c_eta =
      oplus(otimes(inverse(result.eta), result.a), dm.c1);
  TropMatrix x = otimes(result.x_generator, oplus(u, otimes(dm.d1_conj, v)));
  TropMatrix y = otimes(result.y_generator, oplus(otimes(c_eta, u), v));
  const TropValue obj = max_lateness(result.a, x, y);
  return ScheduleSolution{std::move(x), std::move(y), obj};
}

std::vector<ScheduleSolution> extreme_points(const StageTwoResult& result) {
  if (!is_regular(result.u_lower) || !is_regular(result.v_lower)) {
    throw InvalidInstance("extreme points need regular lower bounds g and q");
  }
  std::vector<ScheduleSolution> points;
  auto add = [&](const TropMatrix& u, const TropMatrix& v) {
    ScheduleSolution s = materialize(result, u, v);
    for (const auto& p : points) {
      if (approx_equal(p.x, s.x, 1e-9) && approx_equal(p.y, s.y, 1e-9)) return;
    }
    points.push_back(std::move(s));
  };
  add(result.u_lower, result.v_lower);
  for (std::size_t j = 0; j < result.u_lower.rows(); ++j) {
    TropMatrix u = result.u_lower;
    u[j] = result.u_upper[j];
    add(u, result.v_lower);
  }
  for (std::size_t i = 0; i < result.v_lower.rows(); ++i) {
    TropMatrix v = result.v_lower;
    v[i] = result.v_upper[i];
    add(result.u_lower, v);
  }
  return points;
}

SolveReport solve(const ProblemInstance& inst) {
  validate(inst);
  SolveReport report;
  if (is_zero(inst.d)) {
    report.notes.push_back(
        "D has no finite entries: first-stage due-date-start constraints are "
        "vacuous");
  }
  report.stage1 = solve_stage1(inst);
  if (report.stage1.verdict.marginal) {
    report.notes.push_back("stage-1 condition value is marginal");
  }
  if (!report.stage1.verdict.feasible) return report;

  const DerivedMatrices dm = derive_matrices(inst, report.stage1.mu);
  if (!is_row_regular(dm.d1_conj) || !is_column_regular(dm.d1_conj)) {
    report.notes.push_back(
        "B^- (+) D^- has an all-zero row or column; the affected forms join "
        "as the zero element");
  }
  StageTwoSummary s2;
  s2.verdict = check_stage2_feasibility(dm, inst);
  if (s2.verdict.marginal) {
    report.notes.push_back("stage-2 condition value is marginal");
  }
  if (s2.verdict.feasible) {
    s2.eta = compute_eta(dm, inst, s2.families);
    s2.dominant_family = dominant(s2.families);
    if (s2.eta.is_zero()) {
      throw InvalidInstance(
          "second-stage objective is unbounded below (eta is the zero "
          "element)");
    }
  }
  report.stage2 = s2;
  if (!s2.verdict.feasible) return report;

  report.solution = solution_set(dm, s2.eta, inst, report.stage1.mu);
  if (is_regular(inst.g) && is_regular(inst.q)) {
    report.extreme = extreme_points(*report.solution);
  } else {
    report.notes.push_back(
        "g or q has zero-element entries; extreme points not enumerated");
  }
  return report;
}

TropValue max_lateness(const TropMatrix& lags, const TropMatrix& x,
                       const TropMatrix& y) {
  return scalar(otimes(otimes(conjugate(y), lags), x));
}

double two_stage_slack(const ProblemInstance& inst, const TropValue& mu,
                       const TropMatrix& x, const TropMatrix& y) {
  if (!is_regular(x) || !is_regular(y)) {
    return -std::numeric_limits<double>::infinity();
  }
  double slack = std::numeric_limits<double>::infinity();
  auto need = [&slack](double lhs, double rhs) {
    slack = std::min(slack, rhs - lhs);
  };
  const double mu_v = mu.value();
  for (std::size_t i = 0; i < inst.tasks(); ++i) {
    const double yi = y[i].value();
    for (std::size_t j = 0; j < inst.workers(); ++j) {
      const double xj = x[j].value();
      if (inst.b(i, j).is_finite()) need(yi - inst.b(i, j).value(), xj);
      if (inst.d(i, j).is_finite()) need(yi - inst.d(i, j).value(), xj);
      if (inst.c(i, j).is_finite()) need(inst.c(i, j).value() + xj - mu_v, yi);
    }
    if (inst.q[i].is_finite()) need(inst.q[i].value(), yi);
    need(yi, inst.r[i].value());
  }
  for (std::size_t j = 0; j < inst.workers(); ++j) {
    const double xj = x[j].value();
    if (inst.g[j].is_finite()) need(inst.g[j].value(), xj);
    need(xj, inst.h[j].value());
  }
  return slack;
}

}  // namespace maxplus::sched
