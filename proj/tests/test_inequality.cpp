#include <gtest/gtest.h>

#include <cmath>

#include "maxplus/inequality.hpp"
#include "support.hpp"

using namespace maxplus;

TEST(Inequality, UpperBound) {
  EXPECT_EQ(solve_upper_bound(TropMatrix::identity(2), TropMatrix::column({3, 5})),
            TropMatrix::column({3, 5}));
  EXPECT_EQ(solve_upper_bound(TropMatrix{{1, 0}, {2, 4}}, TropMatrix::column({5, 5})),
            TropMatrix::column({3, 1}));
  EXPECT_THROW(solve_upper_bound(TropMatrix::identity(2), TropMatrix::column({3, kZero})),
               NotRegularVector);
  EXPECT_THROW(solve_upper_bound(TropMatrix{{1, kZero}}, TropMatrix::column({3})),
               NotColumnRegular);
}

TEST(Inequality, UpperBoundIsGreatestOnGrid) {
  // Every grid point of A x <= d lies below x_max, and x_max itself solves.
  const TropMatrix a{{1, 0}, {2, 4}};
  const TropMatrix d = TropMatrix::column({5, 5});
  const TropMatrix xmax = solve_upper_bound(a, d);
  EXPECT_TRUE(leq_tol(otimes(a, xmax), d, 0.0));
  for (double x0 = -3; x0 <= 8; x0 += 0.5)
    for (double x1 = -3; x1 <= 8; x1 += 0.5) {
      const TropMatrix x = TropMatrix::column({x0, x1});
      if (leq_tol(otimes(a, x), d, 0.0)) EXPECT_TRUE(leq_tol(x, xmax, 0.0));
    }
}

TEST(Inequality, DoubleInequality) {
  BoxSolutionSet s = solve_double_inequality(TropMatrix(1, 1), TropMatrix::column({1}),
                                             TropMatrix::column({5}));
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.delta, TropValue(-4));
  EXPECT_EQ(*s.generator, TropMatrix::identity(1));
  EXPECT_EQ(*s.upper, TropMatrix::column({5}));

  s = solve_double_inequality(TropMatrix{{-1}}, TropMatrix::column({0}),
                              TropMatrix::column({3}));
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.delta, TropValue(-1));
  EXPECT_EQ(*s.lower, TropMatrix::column({0}));
  EXPECT_EQ(*s.upper, TropMatrix::column({3}));

  s = solve_double_inequality(TropMatrix{{1}}, TropMatrix::column({0}),
                              TropMatrix::column({3}));
  EXPECT_FALSE(s.feasible);
  EXPECT_EQ(s.delta, TropValue(1));
}

TEST(Inequality, SolutionSetIsCompleteOnGrid) {
  // Grid points solving A x (+) b <= x <= d coincide with {A* w}.
  testing_support::Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = testing_support::uniform_int(rng, 1, 2);
    const TropMatrix a = testing_support::normalize_cycles(
        testing_support::random_matrix(rng, n, n, -3, 2, 0.3));
    const TropMatrix b = testing_support::random_matrix(rng, n, 1, -2, 2);
    const TropMatrix d = testing_support::random_matrix(rng, n, 1, -1, 4);
    const BoxSolutionSet s = solve_double_inequality(a, b, d);
    bool any = false;
    const double lo = -4, hi = 6, step = 0.5;
    std::vector<double> x(n, lo);
    while (true) {
      TropMatrix xv(n, 1);
      for (std::size_t i = 0; i < n; ++i) xv[i] = x[i];
      if (leq_tol(oplus(otimes(a, xv), b), xv, 1e-12) && leq_tol(xv, d, 1e-12)) {
        any = true;
        ASSERT_TRUE(s.feasible);
        // x is its own parameter: A* x = x and b <= x <= upper.
        EXPECT_TRUE(approx_equal(otimes(*s.generator, xv), xv, 1e-9));
        EXPECT_TRUE(leq_tol(xv, *s.upper, 1e-9));
      }
      std::size_t i = 0;
      while (i < n && (x[i] += step) > hi) x[i++] = lo;
      if (i == n) break;
    }
    if (s.feasible) {
      // Both corners of the box map to solutions.
      for (const TropMatrix* w : {&*s.lower, &*s.upper}) {
        const TropMatrix xv = otimes(*s.generator, *w);
        EXPECT_TRUE(leq_tol(oplus(otimes(a, xv), b), xv, 1e-9));
        EXPECT_TRUE(leq_tol(xv, d, 1e-9));
      }
    } else {
      EXPECT_FALSE(any);
    }
  }
}
