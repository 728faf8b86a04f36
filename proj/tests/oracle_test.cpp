#include "helpers.hpp"

namespace tropt {
namespace {

using testing::col;
using testing::fin;
using testing::kSeed;
using testing::random_matrix;
using testing::random_matrix_with_cycle;
using testing::random_regular_column;
using testing::Rng;

TEST(GridMinimize, WindowExample) {
  const Problem<MaxPlus> problem = testing::window_example_instance();
  const GridMinimum<MaxPlus> gm = grid_minimize(
      problem, GridSpec::uniform(3, Rational(-2), Rational(4), Rational(1, 2)));
  EXPECT_EQ(gm.minimum, fin(3));
  EXPECT_EQ(gm.feasible_points, 13u * 13u * 13u);
  for (const Matrix<MaxPlus>& x : gm.argmins) {
    EXPECT_EQ(evaluate_objective(problem, x), fin(3));
  }
}

TEST(GridMinimize, ConstrainedExample) {
  const Problem<MaxPlus> problem = testing::constrained_example_instance();
  const GridMinimum<MaxPlus> gm = grid_minimize(
      problem, GridSpec::uniform(3, Rational(0), Rational(8), Rational(1, 2)));
  EXPECT_EQ(gm.minimum, fin(4));
  EXPECT_LT(gm.feasible_points, 17u * 17u * 17u);  // the constraints bite
  EXPECT_GT(gm.feasible_points, 0u);
}

TEST(GridMinimize, FlatObjectiveKeepsEveryPoint) {
  const Problem<MaxPlus> problem =
      RayleighInstance<MaxPlus>{Matrix<MaxPlus>::identity(2)};
  const GridMinimum<MaxPlus> gm = grid_minimize(
      problem, GridSpec::uniform(2, Rational(-1), Rational(1), Rational(1)));
  EXPECT_EQ(gm.minimum, Scalar<MaxPlus>::one());
  EXPECT_EQ(gm.argmins.size(), 9u);
}

TEST(GridMinimize, EmptyFeasibleGrid) {
  ConstrainedInstance<MaxPlus> inst = testing::constrained_example_instance();
  inst.g = col({100, 100, 100});
  const Problem<MaxPlus> problem = inst;
  try {
    grid_minimize(problem, GridSpec::uniform(3, Rational(0), Rational(2), Rational(1)));
    FAIL() << "expected EmptyGrid";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.code(), "EmptyGrid");
  }
}

TEST(GridSpec, Validation) {
  EXPECT_THROW(GridSpec::uniform(2, Rational(1), Rational(0), Rational(1)), ValueError);
  EXPECT_THROW(GridSpec::uniform(2, Rational(0), Rational(1), Rational(0)), ValueError);
  const Problem<MaxPlus> problem = testing::window_example_instance();
  EXPECT_THROW(
      grid_minimize(problem, GridSpec::uniform(2, Rational(0), Rational(1), Rational(1))),
      DimensionError);
}

TEST(VerifySolutionSet, PassesOnWorkedExamples) {
  {
    const Problem<MaxPlus> problem = testing::window_example_instance();
    const VerificationReport<MaxPlus> report = verify_solution_set(
        problem, solve(problem),
        GridSpec::uniform(3, Rational(-2), Rational(4), Rational(1, 2)));
    EXPECT_TRUE(report.pass) << (report.issues.empty() ? "" : report.issues[0].detail);
    EXPECT_EQ(report.grid_minimum, report.closed_form);
  }
  {
    const Problem<MaxPlus> problem = testing::constrained_example_instance();
    const VerificationReport<MaxPlus> report = verify_solution_set(
        problem, solve(problem),
        GridSpec::uniform(3, Rational(0), Rational(8), Rational(1, 2)));
    EXPECT_TRUE(report.pass) << (report.issues.empty() ? "" : report.issues[0].detail);
  }
}

TEST(VerifySolutionSet, CorruptedOptimumFailsWithWitness) {
  const Problem<MaxPlus> problem = testing::window_example_instance();
  const OptimizationOutcome<MaxPlus> genuine = solve(problem);

  const OptimizationOutcome<MaxPlus> low{otimes(genuine.optimum, fin(-1)),
                                         genuine.solutions};
  const VerificationReport<MaxPlus> low_report = verify_solution_set(
      problem, low, GridSpec::uniform(3, Rational(-2), Rational(4), Rational(1, 2)));
  EXPECT_FALSE(low_report.pass);
  EXPECT_FALSE(low_report.issues.empty());

  const OptimizationOutcome<MaxPlus> high{otimes(genuine.optimum, fin(1)),
                                          genuine.solutions};
  const VerificationReport<MaxPlus> high_report = verify_solution_set(
      problem, high, GridSpec::uniform(3, Rational(-2), Rational(4), Rational(1, 2)));
  EXPECT_FALSE(high_report.pass);
}

TEST(OracleAgreement, RandomInstancesNeverBeatTheClosedForm) {
  Rng rng(kSeed + 40);
  for (int iter = 0; iter < 100; ++iter) {
    const UnconstrainedInstance<MaxPlus> inst{
        random_matrix_with_cycle(rng, 3, -5, 5), random_matrix(rng, 3, 1, -5, 5, 20),
        random_regular_column(rng, 3, -5, 5), testing::random_scalar(rng, -5, 5, 50)};
    const Problem<MaxPlus> problem = inst;
    const OptimizationOutcome<MaxPlus> outcome = solve(problem);
    const Matrix<MaxPlus> x = canonical_solution(outcome);

    // Box of radius 3 around the canonical solution, step 1/2. The canonical
    // solution is itself a grid point, so the grid minimum must not only
    // stay at or above the closed form but reach it.
    std::vector<GridInterval> intervals;
    for (Index i = 0; i < 3; ++i) {
      const Rational center = x.at(i).value();
      intervals.push_back({center - 3, center + 3});
    }
    const GridMinimum<MaxPlus> gm =
        grid_minimize(problem, GridSpec(intervals, Rational(1, 2)));

    EXPECT_GE(gm.minimum, outcome.optimum);
    EXPECT_EQ(gm.minimum, outcome.optimum);
    for (const Matrix<MaxPlus>& argmin : gm.argmins) {
      EXPECT_TRUE(membership(problem, outcome, argmin));
    }
  }
}

}  // namespace
}  // namespace tropt
