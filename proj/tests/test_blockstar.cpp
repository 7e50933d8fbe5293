#include <gtest/gtest.h>

#include "maxplus/blockstar.hpp"
#include "maxplus/oracle.hpp"
#include "support.hpp"

using namespace maxplus;

TEST(BlockStar, Assemble) {
  EXPECT_EQ(assemble(SkewBlock(TropMatrix{{-2}}, TropMatrix{{1}})),
            (TropMatrix{{kZero, -2}, {1, kZero}}));
  EXPECT_EQ(assemble(SkewBlock(TropMatrix(1, 2), TropMatrix(2, 1))),
            TropMatrix::zeros(3, 3));
  const TropMatrix big =
      assemble(SkewBlock(TropMatrix{{1}, {2}}, TropMatrix{{3, 4}}));
  EXPECT_EQ(big, (TropMatrix{{kZero, kZero, 1},
                             {kZero, kZero, 2},
                             {3, 4, kZero}}));
  EXPECT_THROW(SkewBlock(TropMatrix(2, 1), TropMatrix(2, 1)), DimensionMismatch);
}

TEST(BlockStar, Trace) {
  EXPECT_EQ(skew_trace(SkewBlock(TropMatrix{{-2}}, TropMatrix{{1}})),
            TropValue(-1));
  EXPECT_EQ(skew_trace(SkewBlock(TropMatrix{{-2}}, TropMatrix(1, 1))), kZero);
  const SkewBlock thin(TropMatrix{{1}, {-3}}, TropMatrix{{-2, 0}});
  EXPECT_EQ(skew_trace(thin), trace(otimes(thin.lower, thin.upper)));
}

TEST(BlockStar, Star) {
  EXPECT_EQ(skew_star(SkewBlock(TropMatrix{{-2}}, TropMatrix{{1}})),
            (TropMatrix{{0, -2}, {1, 0}}));
  EXPECT_EQ(skew_star(SkewBlock(TropMatrix(2, 1), TropMatrix(1, 2))),
            TropMatrix::identity(3));
  EXPECT_NO_THROW(skew_star(SkewBlock(TropMatrix{{-2}}, TropMatrix{{2}})));
  EXPECT_THROW(skew_star(SkewBlock(TropMatrix{{-2}}, TropMatrix{{3}})),
               StarDiverges);
}

TEST(BlockStar, MatchesAssembledMatrix) {
  testing_support::Rng rng(5);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (int t = 0; t < 5; ++t) {
        const TropMatrix b = testing_support::random_matrix(rng, n, m, -5, 5, 0.3);
        const TropMatrix c = testing_support::random_matrix(rng, m, n, -5, 5, 0.3);
        const TropMatrix full = testing_support::normalize_cycles(
            assemble(SkewBlock(b, c)));
        // Pull the normalized blocks back out.
        TropMatrix bn(n, m), cn(m, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j) bn(i, j) = full(i, n + j);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < n; ++j) cn(i, j) = full(n + i, j);
        const SkewBlock sb(bn, cn);
        EXPECT_TRUE(approx_equal(skew_trace(sb), trace_function(full), 1e-9));
        EXPECT_TRUE(approx_equal(skew_star(sb), oracle::naive_star(full), 1e-9));
      }
}
