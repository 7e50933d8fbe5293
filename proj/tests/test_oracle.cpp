#include <gtest/gtest.h>

#include "maxplus/oracle.hpp"
#include "support.hpp"

using namespace maxplus;
using testing_support::worked_instance;

TEST(Oracle, NaiveStar) {
  EXPECT_EQ(oracle::naive_star(TropMatrix{{-1, -3}, {0, -2}}),
            (TropMatrix{{0, -3}, {0, 0}}));
  EXPECT_EQ(oracle::naive_star(TropMatrix::zeros(2, 2)), TropMatrix::identity(2));
  EXPECT_THROW(oracle::naive_star(TropMatrix{{1}}), StarDiverges);
}

TEST(Oracle, NaiveBinomial) {
  const TropMatrix a{{1, kZero}, {0, -2}}, b{{-1, 3}, {kZero, 0}};
  EXPECT_EQ(oracle::naive_binomial(a, b, 1), oplus(a, b));
  EXPECT_EQ(oracle::naive_binomial(a, TropMatrix::zeros(2, 2), 2),
            oplus(a, otimes(a, a)));
  EXPECT_THROW(oracle::naive_binomial(a, TropMatrix(3, 3), 2), DimensionMismatch);
}

TEST(Oracle, CycleMean) {
  EXPECT_EQ(oracle::brute_force_cycle_mean(TropMatrix{{-1, -3}, {0, -2}}),
            TropValue(-1));
  EXPECT_EQ(oracle::brute_force_cycle_mean(TropMatrix{{kZero, 1}, {kZero, kZero}}),
            kZero);
  // Three-cycle 0 -> 1 -> 2 -> 0 of weight 4 beats the two-cycle of weight 1.
  const TropMatrix a{{kZero, 1, kZero}, {0, kZero, 1}, {2, kZero, kZero}};
  EXPECT_NEAR(oracle::brute_force_cycle_mean(a).value(), 4.0 / 3.0, 1e-12);
}

TEST(Oracle, Compositions) {
  const TropMatrix a{{3}}, b{{-1}};
  // i0 + i1 <= 1: A, BA, AB.
  EXPECT_EQ(oracle::composition_cell(a, b, 1, 1), (TropMatrix{{3}}));
  EXPECT_EQ(oracle::composition_cell(a, TropMatrix{{1}}, 0, 2), (TropMatrix{{2}}));
}

TEST(Oracle, WorkedStageOne) {
  const oracle::GridResult g = oracle::grid_search_stage1(worked_instance());
  ASSERT_TRUE(g.found);
  EXPECT_NEAR(g.best.value(), -1.0, 1e-6);
  EXPECT_GE(g.primary[0], 3.0 - 1e-9);
  EXPECT_LE(g.primary[0], 6.0 + 1e-9);
}

TEST(Oracle, WorkedStageTwo) {
  const oracle::GridResult g =
      oracle::grid_search_stage2(worked_instance(), TropValue(-1));
  ASSERT_TRUE(g.found);
  EXPECT_NEAR(g.best.value(), 2.0, 1e-6);
}

TEST(Oracle, InfeasibleNotFound) {
  sched::ProblemInstance inst = worked_instance();
  inst.h = TropMatrix::column({1});
  EXPECT_FALSE(oracle::grid_search_stage1(inst).found);
  inst = worked_instance();
  inst.b = TropMatrix{{1}};
  EXPECT_FALSE(oracle::grid_search_stage2(inst, TropValue(-1)).found);
}

TEST(Oracle, SingletonBox) {
  sched::ProblemInstance inst = worked_instance();
  inst.g = inst.h = TropMatrix::column({4});
  const oracle::GridResult g = oracle::grid_search_stage1(inst);
  EXPECT_TRUE(g.found);
  EXPECT_EQ(g.evaluations, 1u);
}

TEST(Oracle, BestNeverIncreases) {
  testing_support::Rng rng(4);
  for (int t = 0; t < 10; ++t) {
    const auto inst = testing_support::random_feasible_instance(rng, 3, 3);
    const oracle::GridResult g = oracle::grid_search_stage1(inst);
    ASSERT_TRUE(g.found);
    for (std::size_t k = 1; k < g.history.size(); ++k) {
      EXPECT_LE(g.history[k], g.history[k - 1]);
    }
  }
}

TEST(Oracle, GridTooLarge) {
  sched::ProblemInstance inst = worked_instance();
  oracle::GridSpec spec = oracle::default_spec(inst);
  spec.upper = {1e9};
  EXPECT_THROW(oracle::grid_search_stage1(inst, spec), GridTooLarge);
}

TEST(Oracle, NeedsRegularBounds) {
  sched::ProblemInstance inst = worked_instance();
  inst.g = TropMatrix::column({kZero});
  EXPECT_THROW(oracle::grid_search_stage1(inst), InvalidInstance);
}

TEST(Oracle, VerdictsMatchSolverAtBothStages) {
  testing_support::Rng rng(30);
  int s2_feasible = 0, s2_infeasible = 0;
  for (int t = 0; t < 150; ++t) {
    const auto inst = testing_support::random_instance(
        rng, testing_support::uniform_int(rng, 1, 3),
        testing_support::uniform_int(rng, 1, 3));
    const sched::SolveReport rep = sched::solve(inst);
    const auto g1 = oracle::grid_search_stage1(inst);
    ASSERT_EQ(g1.found, rep.stage1.verdict.feasible);
    if (!g1.found) continue;
    EXPECT_NEAR(g1.best.value(), rep.stage1.mu.value(), 1e-4);
    const auto g2 = oracle::grid_search_stage2(inst, rep.stage1.mu);
    EXPECT_EQ(g2.found, rep.feasible());
    if (rep.feasible()) {
      ++s2_feasible;
      EXPECT_NEAR(g2.best.value(), rep.stage2->eta.value(), 1e-4);
    } else {
      ++s2_infeasible;
    }
  }
  EXPECT_GT(s2_feasible, 0);
  EXPECT_GT(s2_infeasible, 0);
}

TEST(Oracle, NonDyadicOptimaAreApproached) {
  // Optimal faces with mu or eta in thirds contain no grid point; the
  // stage-two search must still land within tolerance.
  testing_support::Rng rng(31);
  int seen = 0;
  for (int t = 0; t < 3000 && seen < 8; ++t) {
    const auto inst = testing_support::random_feasible_instance(rng, 3, 3);
    const sched::SolveReport rep = sched::solve(inst);
    const double mu = rep.stage1.mu.value(), eta = rep.stage2->eta.value();
    const auto dyadic = [](double v) { return std::abs(v * 1024 - std::round(v * 1024)) < 1e-9; };
    if (dyadic(mu) && dyadic(eta)) continue;
    ++seen;
    EXPECT_NEAR(oracle::grid_search_stage1(inst).best.value(), mu, 1e-4);
    const auto g2 = oracle::grid_search_stage2(inst, rep.stage1.mu);
    ASSERT_TRUE(g2.found);
    EXPECT_NEAR(g2.best.value(), eta, 1e-4);
  }
  EXPECT_GT(seen, 0);
}
