#include "maxplus/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace maxplus::oracle {

Dense to_dense(const TropMatrix& a) {
  Dense out(a.rows(), std::vector<double>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j).to_double();
  return out;
}

TropMatrix from_dense(const Dense& a) {
  TropMatrix out(a.size(), a.at(0).size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out(i, j) = std::isfinite(a[i][j]) ? TropValue(a[i][j]) : kZero;
  return out;
}

Dense naive_identity(std::size_t n) {
  Dense out(n, std::vector<double>(n, kNegInf));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 0.0;
  return out;
}

Dense naive_sum(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      out[i][j] = std::max(a[i][j], b[i][j]);
  return out;
}

Dense naive_product(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b.size(), l = b[0].size();
  Dense out(n, std::vector<double>(l, kNegInf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < m; ++k)
        out[i][j] = std::max(out[i][j], a[i][k] + b[k][j]);
  return out;
}

Dense naive_power(const Dense& a, std::size_t k) {
  Dense out = naive_identity(a.size());
  for (std::size_t i = 0; i < k; ++i) out = naive_product(out, a);
  return out;
}

double naive_trace(const Dense& a) {
  double t = kNegInf;
  for (std::size_t i = 0; i < a.size(); ++i) t = std::max(t, a[i][i]);
  return t;
}

double naive_trace_function(const Dense& a) {
  double t = kNegInf;
  Dense pw = a;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    t = std::max(t, naive_trace(pw));
    pw = naive_product(pw, a);
  }
  return t;
}

TropMatrix naive_star(const TropMatrix& a, std::size_t terms,
                      double tolerance) {
  if (!a.is_square()) throw NotSquare("naive_star: not square");
  const Dense d = to_dense(a);
  const double tr = naive_trace_function(d);
  if (tr > tolerance) throw StarDiverges(TropValue(tr));
  if (terms == 0) terms = d.size();
  Dense sum = naive_identity(d.size());
  Dense pw = sum;
  for (std::size_t k = 1; k < terms; ++k) {
    pw = naive_product(pw, d);
    sum = naive_sum(sum, pw);
  }
  return from_dense(sum);
}

TropMatrix naive_binomial(const TropMatrix& a, const TropMatrix& b,
                          std::size_t p) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch("naive_binomial: operands must be square of equal order");
  }
  const Dense s = naive_sum(to_dense(a), to_dense(b));
  Dense acc(s.size(), std::vector<double>(s.size(), kNegInf));
  Dense pw = naive_identity(s.size());
  for (std::size_t k = 1; k <= p; ++k) {
    pw = naive_product(pw, s);
    acc = naive_sum(acc, pw);
  }
  return from_dense(acc);
}

TropMatrix composition_cell(const TropMatrix& a, const TropMatrix& b,
                            std::size_t k, std::size_t l) {
  const Dense da = to_dense(a), db = to_dense(b);
  const std::size_t n = da.size();
  Dense acc(n, std::vector<double>(n, kNegInf));
  std::vector<std::size_t> parts(k + 1, 0);
  // Walk every (i0, ..., ik) with sum <= l.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                           std::size_t left) {
    if (pos == parts.size()) {
      Dense word = naive_power(db, parts[0]);
      for (std::size_t t = 1; t <= k; ++t) {
        word = naive_product(word, da);
        word = naive_product(word, naive_power(db, parts[t]));
      }
      acc = naive_sum(acc, word);
      return;
    }
    for (std::size_t i = 0; i <= left; ++i) {
      parts[pos] = i;
      rec(pos + 1, left - i);
    }
  };
  rec(0, l);
  return from_dense(acc);
}

TropValue brute_force_cycle_mean(const TropMatrix& a) {
  if (!a.is_square()) throw NotSquare("brute_force_cycle_mean: not square");
  const Dense d = to_dense(a);
  const std::size_t n = d.size();
  double best = kNegInf;
  std::vector<bool> on_path(n, false);
  // Cycles are rooted at their smallest vertex so each is seen once per
  // rotation-free ordering.
  std::function<void(std::size_t, std::size_t, double, std::size_t)> dfs =
      [&](std::size_t root, std::size_t v, double w, std::size_t len) {
        for (std::size_t u = root; u < n; ++u) {
          if (!std::isfinite(d[v][u])) continue;
          if (u == root) {
            best = std::max(best, (w + d[v][u]) / static_cast<double>(len));
          } else if (!on_path[u]) {
            on_path[u] = true;
            dfs(root, u, w + d[v][u], len + 1);
            on_path[u] = false;
          }
        }
      };
  for (std::size_t root = 0; root < n; ++root) {
    on_path[root] = true;
    dfs(root, root, 0.0, 1);
    on_path[root] = false;
  }
  return std::isfinite(best) ? TropValue(best) : kZero;
}

namespace {

std::vector<double> finite_column(const TropMatrix& v, const char* name) {
  std::vector<double> out(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    if (v[i].is_zero()) {
      throw InvalidInstance(std::string("grid search needs regular ") + name);
    }
    out[i] = v[i].value();
  }
  return out;
}

// Values for one coordinate in a round: the whole range at `step` in the
// first round, a window around the incumbent later. Endpoints are always
// included when they fall inside the searched range.
std::vector<double> axis(double lo, double hi, double centre, double step,
                         int window, bool full) {
  double from = lo, to = hi;
  if (!full) {
    from = std::max(lo, centre - window * step);
    to = std::min(hi, centre + window * step);
  }
  const double base = full ? lo : centre;
  std::vector<double> out;
  if (from == to) return {from};
  const auto k0 = static_cast<long long>(std::ceil((from - base) / step - 1e-12));
  const auto k1 = static_cast<long long>(std::floor((to - base) / step + 1e-12));
  out.push_back(from);
  for (long long k = k0; k <= k1; ++k) {
    const double x = base + static_cast<double>(k) * step;
    if (x > from && x < to) out.push_back(x);
  }
  out.push_back(to);
  return out;
}

// Objective and eliminated secondary vector at a primary point; returns
// false when the point is infeasible.
using Evaluator =
    std::function<bool(const std::vector<double>&, double step, double& obj,
                       std::vector<double>& secondary)>;

GridResult refine(const GridSpec& spec, const Evaluator& eval) {
  const std::size_t dim = spec.lower.size();
  if (spec.upper.size() != dim) {
    throw DimensionMismatch("GridSpec: lower and upper differ in length");
  }
  for (std::size_t j = 0; j < dim; ++j) {
    if (spec.lower[j] > spec.upper[j]) {
      throw InvalidInstance("GridSpec: empty box in coordinate " +
                            std::to_string(j));
    }
  }
  GridResult res;
  double step = spec.initial_step;
  std::vector<double> centre = spec.lower;
  for (int round = 0; round <= spec.refinement_rounds; ++round) {
    std::vector<std::vector<double>> axes(dim);
    double count = 1.0;
    bool trivial = true;
    for (std::size_t j = 0; j < dim; ++j) {
      const double span = round == 0 ? spec.upper[j] - spec.lower[j]
                                     : 2.0 * spec.window * step;
      count *= std::floor(span / step) + 2.0;
    }
    if (static_cast<double>(res.evaluations) + count > spec.max_evaluations) {
      throw GridTooLarge("grid search would exceed " +
                         std::to_string(spec.max_evaluations) + " evaluations");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      axes[j] = axis(spec.lower[j], spec.upper[j], centre[j], step,
                     spec.window, round == 0);
      trivial = trivial && axes[j].size() == 1;
    }
    if (round > 0 && trivial) break;

    bool found = false;
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> best_point, best_secondary;
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> point(dim), secondary;
    // Odometer over the product grid, fixed order for deterministic ties.
    while (true) {
      for (std::size_t j = 0; j < dim; ++j) point[j] = axes[j][idx[j]];
      double obj = 0.0;
      ++res.evaluations;
      if (eval(point, step, obj, secondary) && (!found || obj < best)) {
        found = true;
        best = obj;
        best_point = point;
        best_secondary = secondary;
      }
      std::size_t j = 0;
      while (j < dim && ++idx[j] == axes[j].size()) idx[j++] = 0;
      if (j == dim) break;
    }
    res.final_step = step;
    if (!found) {
      res.found = false;
      res.best = kZero;
      break;
    }
    res.found = true;
    res.best = TropValue(best);
    res.primary = best_point;
    res.secondary = best_secondary;
    res.history.push_back(best);
    centre = best_point;
    step /= 2.0;
  }
  return res;
}

}  // namespace

GridSpec default_spec(const sched::ProblemInstance& inst) {
  GridSpec spec;
  spec.lower = finite_column(inst.g, "g");
  spec.upper = finite_column(inst.h, "h");
  return spec;
}

GridResult grid_search_stage1(const sched::ProblemInstance& inst,
                              const GridSpec& spec) {
  const Dense c = to_dense(inst.c), d = to_dense(inst.d);
  const std::vector<double> q = finite_column(inst.q, "q");
  const std::vector<double> r = finite_column(inst.r, "r");
  const std::size_t m = c.size(), n = c[0].size();
  constexpr double slack = 1e-9;
  Evaluator eval = [&](const std::vector<double>& u, double, double& obj,
                       std::vector<double>& v) {
    v.assign(m, 0.0);
    obj = kNegInf;
    for (std::size_t i = 0; i < m; ++i) {
      double hi = r[i], reach = kNegInf;
      for (std::size_t j = 0; j < n; ++j) {
        // A zero-element lag imposes no upper bound on v.
        if (std::isfinite(d[i][j])) hi = std::min(hi, u[j] + d[i][j]);
        reach = std::max(reach, c[i][j] + u[j]);
      }
      if (hi < q[i] - slack) return false;
      v[i] = hi;
      obj = std::max(obj, reach - hi);
    }
    return true;
  };
  return refine(spec, eval);
}

GridResult grid_search_stage1(const sched::ProblemInstance& inst) {
  return grid_search_stage1(inst, default_spec(inst));
}

GridResult grid_search_stage2(const sched::ProblemInstance& inst,
                              const TropValue& mu, const GridSpec& spec) {
  const Dense a = to_dense(inst.a), b = to_dense(inst.b), c = to_dense(inst.c),
              d = to_dense(inst.d);
  const std::vector<double> q = finite_column(inst.q, "q");
  const std::vector<double> r = finite_column(inst.r, "r");
  const double mu_v = mu.value();
  const std::size_t m = a.size(), n = a[0].size();
  Evaluator eval = [&](const std::vector<double>& x, double step, double& obj,
                       std::vector<double>& y) {
    y.assign(m, 0.0);
    obj = kNegInf;
    for (std::size_t i = 0; i < m; ++i) {
      double hi = r[i], lo = q[i], reach = kNegInf;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::isfinite(d[i][j])) hi = std::min(hi, x[j] + d[i][j]);
        if (std::isfinite(b[i][j])) hi = std::min(hi, x[j] + b[i][j]);
        lo = std::max(lo, c[i][j] + x[j] - mu_v);
        reach = std::max(reach, a[i][j] + x[j]);
      }
      if (lo > hi + step) return false;
      y[i] = hi;
      obj = std::max(obj, reach - hi);
    }
    return true;
  };
  return refine(spec, eval);
}

GridResult grid_search_stage2(const sched::ProblemInstance& inst,
                              const TropValue& mu) {
  return grid_search_stage2(inst, mu, default_spec(inst));
}

}  // namespace maxplus::oracle
