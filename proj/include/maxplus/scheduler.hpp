#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/matrix.hpp"

namespace maxplus::sched {

/// A condition value v passes iff v <= 1 + kFeasibilityTolerance.
inline constexpr double kFeasibilityTolerance = 1e-9;

/// Condition values with |v| <= kMarginalBand are flagged as marginal.
inline constexpr double kMarginalBand = 1e-7;

/// Two projects sharing m tasks and n workers.
///
/// The first-stage project has start-finish lags C and due-date-start lags
/// D; the second-stage project has A and B. All four are m x n. Workers
/// start within [g, h], task due dates lie within [q, r].
struct ProblemInstance {
  TropMatrix a;  // second-stage start-finish lags
  TropMatrix b;  // second-stage due-date-start lags
  TropMatrix c;  // first-stage start-finish lags
  TropMatrix d;  // first-stage due-date-start lags
  TropMatrix g;  // worker release times (n)
  TropMatrix h;  // worker release deadlines (n)
  TropMatrix q;  // earliest task due dates (m)
  TropMatrix r;  // task deadlines (m)

  std::size_t tasks() const { return a.rows(); }
  std::size_t workers() const { return a.cols(); }
};

/// Shapes, regular h and r, nonzero A and C. Throws InvalidInstance.
void validate_structure(const ProblemInstance& inst);

/// validate_structure plus nonempty boxes g <= h and q <= r.
void validate(const ProblemInstance& inst);

/// Outcome of an existence condition "value <= 1".
struct Verdict {
  bool feasible = false;
  TropValue value = kZero;
  bool marginal = false;
};

/// One family of terms in a closed-form optimum, kept for diagnostics.
struct TermFamily {
  std::string name;
  TropValue value = kZero;
};

struct StageOneResult {
  Verdict verdict;
  TropValue mu = kZero;  // zero element unless verdict.feasible
  std::vector<TermFamily> families;
  std::string dominant_family;
};

/// Matrices of the second stage, with D1^- = B^- (+) D^- and C1 = mu^-1 C.
struct DerivedMatrices {
  TropMatrix d1_conj;  // n x m
  TropMatrix c1;       // m x n
  TropMatrix p;        // A D1^-,  m x m
  TropMatrix q;        // C1 D1^-, m x m
  TropMatrix r;        // D1^- A,  n x n
  TropMatrix s;        // D1^- C1, n x n
};

/// Complete description of the optimal second-stage schedules:
/// x = X (u (+) D1^- v), y = Y ((eta^-1 A (+) C1) u (+) v) for
/// u_lower <= u <= u_upper and v_lower <= v <= v_upper.
struct StageTwoResult {
  bool feasible = false;
  TropValue mu = kZero;
  TropValue eta = kZero;
  TropMatrix x_generator;  // (eta^-1 R (+) S)*, n x n
  TropMatrix y_generator;  // (eta^-1 P (+) Q)*, m x m
  TropMatrix u_lower;
  TropMatrix u_upper;
  TropMatrix v_lower;
  TropMatrix v_upper;
  DerivedMatrices derived;
  TropMatrix a;  // second-stage start-finish lags, for objective evaluation
};

/// Worker start times x and task due dates y with their maximum lateness.
struct ScheduleSolution {
  TropMatrix x;
  TropMatrix y;
  TropValue objective = kZero;
};

// Stage one.

/// h^- g (+) (h^- D^- (+) r^-) q <= 1. Checks structure only, so an empty
/// box shows up as an infeasible verdict rather than an exception.
Verdict check_stage1_feasibility(const ProblemInstance& inst);

/// Minimum first-stage maximum lateness. Throws StageOneInfeasible.
TropValue compute_mu(const ProblemInstance& inst);

/// Verdict, mu and its per-family breakdown in one pass.
StageOneResult solve_stage1(const ProblemInstance& inst);

/// mu^-1 C u (+) q <= v <= r and D^- v (+) g <= u <= h, within tol.
bool stage1_solution_check(const ProblemInstance& inst, const TropValue& mu,
                           const TropMatrix& u, const TropMatrix& v,
                           double tol = kFeasibilityTolerance);

// Stage two.

DerivedMatrices derive_matrices(const ProblemInstance& inst,
                                const TropValue& mu);

/// Tr(Q) (+) (h^- D1^- (+) r^-) Q* q (+) (r^- C1 (+) h^-) S* g <= 1,
/// with the star of the larger of Q, S obtained from the smaller one.
Verdict check_stage2_feasibility(const DerivedMatrices& dm,
                                 const ProblemInstance& inst);

/// Minimum second-stage maximum lateness over the first-stage optimal set.
/// Throws StageTwoInfeasible.
TropValue compute_eta(const DerivedMatrices& dm, const ProblemInstance& inst);

/// Same value with its per-family breakdown. Does not check feasibility.
TropValue compute_eta(const DerivedMatrices& dm, const ProblemInstance& inst,
                      std::vector<TermFamily>& families);

/// Generators and parameter box. Throws InternalConsistency if a generator
/// diverges or the box is empty, which would mean eta is wrong.
StageTwoResult solution_set(const DerivedMatrices& dm, const TropValue& eta,
                            const ProblemInstance& inst, const TropValue& mu);

/// The schedule for parameters (u, v). Throws ParameterOutOfBox.
ScheduleSolution materialize(const StageTwoResult& result, const TropMatrix& u,
                             const TropMatrix& v,
                             double tol = kFeasibilityTolerance);

/// Schedules for the lower corner of the box and for each single coordinate
/// raised to its upper bound, deduplicated. At most m + n + 1 points.
/// Requires regular g and q.
std::vector<ScheduleSolution> extreme_points(const StageTwoResult& result);

// Whole pipeline.

struct StageTwoSummary {
  Verdict verdict;
  TropValue eta = kZero;
  std::vector<TermFamily> families;
  std::string dominant_family;
};

struct SolveReport {
  StageOneResult stage1;
  std::optional<StageTwoSummary> stage2;      // present if stage one feasible
  std::optional<StageTwoResult> solution;     // present if stage two feasible
  std::vector<ScheduleSolution> extreme;      // empty unless g, q regular
  std::vector<std::string> notes;

  bool feasible() const { return solution.has_value(); }
};

/// Runs both stages in order, stopping at the first failed existence
/// condition. Throws InvalidInstance for malformed input.
SolveReport solve(const ProblemInstance& inst);

// Objective and constraint helpers.

/// y^- L x: the maximum lateness of schedule (x, y) under lag matrix L.
TropValue max_lateness(const TropMatrix& lags, const TropMatrix& x,
                       const TropMatrix& y);

/// Smallest slack over every constraint of the second-stage problem with
/// the first-stage optimality constraints mu^-1 C x (+) q <= y <= r,
/// D^- y (+) g <= x <= h and B^- y <= x. Negative means violated.
double two_stage_slack(const ProblemInstance& inst, const TropValue& mu,
                       const TropMatrix& x, const TropMatrix& y);

}  // namespace maxplus::sched
