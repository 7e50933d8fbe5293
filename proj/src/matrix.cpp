#include "maxplus/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

namespace maxplus {

namespace {

std::string shape(const TropMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const TropMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw NotSquare(std::string(op) + ": matrix is " + shape(a));
  }
}

// c := c (+) a (x) b, the inner kernel shared by every product.
inline void accumulate(TropValue& c, const TropValue& a, const TropValue& b) {
  if (a.is_zero() || b.is_zero()) return;
  const double s = a.value() + b.value();
  if (c.is_zero() || c.value() < s) c = TropValue(s);
}

}  // namespace

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, TropValue fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
}

TropMatrix::TropMatrix(
    std::initializer_list<std::initializer_list<TropValue>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = kOne;
  return id;
}

TropMatrix TropMatrix::column(std::span<const TropValue> entries) {
  TropMatrix v(entries.size(), 1);
  std::copy(entries.begin(), entries.end(), v.data_.begin());
  return v;
}

TropMatrix TropMatrix::row(std::span<const TropValue> entries) {
  TropMatrix v(1, entries.size());
  std::copy(entries.begin(), entries.end(), v.data_.begin());
  return v;
}

StarDiverges::StarDiverges(TropValue trace_value)
    : Error([&] {
        std::ostringstream os;
        os << "Kleene star diverges: Tr(A) = " << trace_value << " > 0";
        return os.str();
      }()),
      trace_value_(trace_value) {}

TropMatrix oplus(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("oplus: " + shape(a) + " vs " + shape(b));
  }
  TropMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = oplus(a[k], b[k]);
  return c;
}

TropMatrix otimes(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("otimes: " + shape(a) + " times " + shape(b));
  }
  TropMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const TropValue& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        accumulate(c(i, j), aik, b(k, j));
      }
    }
  }
  return c;
}

TropMatrix otimes(const TropValue& x, const TropMatrix& a) {
  TropMatrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = otimes(x, a[k]);
  return c;
}

TropMatrix conjugate_allow_zero(const TropMatrix& a) {
  TropMatrix c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero()) c(j, i) = inverse(a(i, j));
    }
  }
  return c;
}

TropMatrix conjugate(const TropMatrix& a) {
  if (is_zero(a)) throw ZeroMatrix();
  return conjugate_allow_zero(a);
}

TropMatrix power(const TropMatrix& a, std::size_t k) {
  require_square(a, "power");
  TropMatrix result = TropMatrix::identity(a.rows());
  TropMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = otimes(result, base);
    k >>= 1U;
    if (k > 0) base = otimes(base, base);
  }
  return result;
}

TropValue trace(const TropMatrix& a) {
  require_square(a, "trace");
  TropValue t = kZero;
  for (std::size_t i = 0; i < a.rows(); ++i) t = oplus(t, a(i, i));
  return t;
}

TropValue trace_function(const TropMatrix& a) {
  require_square(a, "trace_function");
  TropValue t = trace(a);
  TropMatrix p = a;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    p = otimes(p, a);
    t = oplus(t, trace(p));
  }
  return t;
}

TropMatrix kleene_star(const TropMatrix& a, double tolerance) {
  require_square(a, "kleene_star");
  const std::size_t n = a.rows();
  // Closure of path weights of length >= 1; diag(m) holds the heaviest
  // closed walk through each node, so a positive diagonal means divergence.
  TropMatrix m = a;
  auto diverged = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, i).is_finite() && m(i, i).value() > tolerance) return true;
    }
    return false;
  };
  if (diverged()) throw StarDiverges(trace_function(a));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const TropValue mik = m(i, k);
      if (mik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) accumulate(m(i, j), mik, m(k, j));
    }
    if (diverged()) throw StarDiverges(trace_function(a));
  }
  for (std::size_t i = 0; i < n; ++i) m(i, i) = oplus(m(i, i), kOne);
  return m;
}

TropValue spectral_radius(const TropMatrix& a) {
  require_square(a, "spectral_radius");
  const std::size_t n = a.rows();
  // walk[k][v]: heaviest walk of exactly k arcs ending at v, starting
  // anywhere. Equivalent to Karp's recursion from a source joined to all
  // nodes by zero-weight arcs, so every node is reachable.
  std::vector<std::vector<TropValue>> walk(n + 1,
                                           std::vector<TropValue>(n, kZero));
  std::fill(walk[0].begin(), walk[0].end(), kOne);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      const TropValue wu = walk[k - 1][u];
      if (wu.is_zero()) continue;
      for (std::size_t v = 0; v < n; ++v) accumulate(walk[k][v], wu, a(u, v));
    }
  }
  TropValue best = kZero;
  for (std::size_t v = 0; v < n; ++v) {
    if (walk[n][v].is_zero()) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (walk[k][v].is_zero()) continue;
      const double mean = (walk[n][v].value() - walk[k][v].value()) /
                          static_cast<double>(n - k);
      worst = std::min(worst, mean);
    }
    best = oplus(best, TropValue(worst));
  }
  return best;
}

TropValue spectral_radius_by_traces(const TropMatrix& a) {
  require_square(a, "spectral_radius_by_traces");
  TropValue rho = trace(a);
  TropMatrix p = a;
  for (std::size_t k = 2; k <= a.rows(); ++k) {
    p = otimes(p, a);
    rho = oplus(rho, root(trace(p), static_cast<std::int64_t>(k)));
  }
  return rho;
}

bool is_zero(const TropMatrix& a) {
  return std::all_of(a.entries().begin(), a.entries().end(),
                     [](const TropValue& x) { return x.is_zero(); });
}

bool is_regular(const TropMatrix& v) {
  if (v.cols() != 1) throw NotAVector("is_regular: matrix is " + shape(v));
  return std::none_of(v.entries().begin(), v.entries().end(),
                      [](const TropValue& x) { return x.is_zero(); });
}

bool is_column_regular(const TropMatrix& a) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < a.rows() && !any; ++i) any = a(i, j).is_finite();
    if (!any) return false;
  }
  return true;
}

bool is_row_regular(const TropMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < a.cols() && !any; ++j) any = a(i, j).is_finite();
    if (!any) return false;
  }
  return true;
}

bool approx_equal(const TropMatrix& a, const TropMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!approx_equal(a[k], b[k], tol)) return false;
  }
  return true;
}

bool leq_tol(const TropMatrix& a, const TropMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("leq_tol: " + shape(a) + " vs " + shape(b));
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!leq_tol(a[k], b[k], tol)) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const TropMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      os << (j ? ", " : "") << a(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace maxplus
