#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropt/optimizer.hpp"

namespace tropt {

// Project scheduling under temporal constraints, modelled over max-plus so
// that times and durations stay exact rationals.
//
// Two project flavors are supported:
//
//   window       activities carry start-finish lags, late start times and
//                early finish times; initiation and completion times are
//                adjusted into the [late start, early finish] window and the
//                maximum adjusted flow time is minimized.
//
//   constrained  activities carry start-finish lags, start-start lags, early
//                start and early finish times; initiation times must respect
//                the start-start/early-start constraints and the maximum
//                flow time is minimized.
enum class ProjectFlavor { window, constrained };

struct Project {
  std::vector<std::string> activities;
  Matrix<MaxPlus> start_finish;  // lag from initiation of j to completion of i
  Matrix<MaxPlus> start_start;   // lag between initiations (constrained flavor)
  Matrix<MaxPlus> late_start;    // latest acceptable initiation (window flavor)
  Matrix<MaxPlus> early_finish;  // earliest acceptable completion
  Matrix<MaxPlus> early_start;   // earliest acceptable initiation (constrained flavor)
  ProjectFlavor flavor;

  Index size() const { return activities.size(); }

  // Unspecified lags and times are the max-plus zero.
  static Project window(std::vector<std::string> names, Matrix<MaxPlus> start_finish,
                        Matrix<MaxPlus> late_start, Matrix<MaxPlus> early_finish) {
    const Index n = names.size();
    check_shapes(n, start_finish, late_start, early_finish);
    Project prj{std::move(names),   std::move(start_finish), Matrix<MaxPlus>(n, n),
                std::move(late_start), std::move(early_finish), Matrix<MaxPlus>(n, 1),
                ProjectFlavor::window};
    return prj;
  }

  static Project constrained(std::vector<std::string> names,
                             Matrix<MaxPlus> start_finish, Matrix<MaxPlus> start_start,
                             Matrix<MaxPlus> early_start, Matrix<MaxPlus> early_finish) {
    const Index n = names.size();
    check_shapes(n, start_finish, early_start, early_finish);
    if (!start_start.is_square() || start_start.rows() != n) {
      throw DimensionError("start-start lags must form an n x n matrix");
    }
    Project prj{std::move(names),    std::move(start_finish), std::move(start_start),
                Matrix<MaxPlus>(n, 1), std::move(early_finish), std::move(early_start),
                ProjectFlavor::constrained};
    return prj;
  }

 private:
  static void check_shapes(Index n, const Matrix<MaxPlus>& lags,
                           const Matrix<MaxPlus>& v1, const Matrix<MaxPlus>& v2) {
    if (n == 0) throw DimensionError("a project needs at least one activity");
    if (!lags.is_square() || lags.rows() != n) {
      throw DimensionError("start-finish lags must form an n x n matrix");
    }
    if (!v1.is_column() || v1.rows() != n || !v2.is_column() || v2.rows() != n) {
      throw DimensionError("per-activity times must be columns of length n");
    }
  }
};

struct Schedule {
  Matrix<MaxPlus> initiation;                      // x
  Matrix<MaxPlus> completion;                      // y
  std::optional<Matrix<MaxPlus>> adjusted_start;   // s, window flavor only
  std::optional<Matrix<MaxPlus>> adjusted_finish;  // t, window flavor only
  Scalar<MaxPlus> max_flow_time;
};

// Window flavor reduction. The maximum adjusted flow time equals
//   x^- A x (+) (q^- A) x (+) x^- p (+) q^- p,
// so the extended unconstrained problem applies with the q-slot replaced by
// the vector whose conjugate is q^- A and the constant c = q^- p.
inline UnconstrainedInstance<MaxPlus> build_flowtime_instance(const Project& project) {
  if (project.flavor != ProjectFlavor::window) {
    throw SolverError("WrongFlavor", "the flow-time reduction needs a window project");
  }
  if (!is_regular(project.late_start)) {
    throw SolverError("NonRegularQ", "every activity needs a late start time");
  }
  const Matrix<MaxPlus> q_conj = conjugate_transpose(project.late_start);
  const Matrix<MaxPlus> qa = multiply(q_conj, project.start_finish);
  if (!is_regular(qa)) {
    throw SolverError("NonColumnRegular",
                      "an activity without incoming start-finish lags leaves the "
                      "reduced instance irregular");
  }
  return UnconstrainedInstance<MaxPlus>{
      project.start_finish, project.early_finish, conjugate_transpose(qa),
      as_scalar(multiply(q_conj, project.early_finish))};
}

// Constrained flavor reduction: minimize x^- (A x (+) p) subject to
// B x (+) g <= x.
inline ConstrainedInstance<MaxPlus> build_constrained_instance(const Project& project) {
  if (project.flavor != ProjectFlavor::constrained) {
    throw SolverError("WrongFlavor", "the constrained reduction needs a constrained project");
  }
  return ConstrainedInstance<MaxPlus>{project.start_finish, project.start_start,
                                      project.early_finish, project.early_start};
}

struct ProjectSolution {
  OptimizationOutcome<MaxPlus> outcome;
  Schedule schedule;
};

// Solves the reduced instance and maps the canonical (earliest) optimizer
// back to initiation, completion and adjusted times.
inline ProjectSolution solve_project(const Project& project) {
  if (project.flavor == ProjectFlavor::window) {
    OptimizationOutcome<MaxPlus> outcome =
        minimize_extended(build_flowtime_instance(project));
    Matrix<MaxPlus> x = canonical_solution(outcome);
    Matrix<MaxPlus> y = multiply(project.start_finish, x);
    Matrix<MaxPlus> t = add(y, project.early_finish);
    Matrix<MaxPlus> s = conjugate_transpose(
        add(conjugate_transpose(x), conjugate_transpose(project.late_start)));
    Schedule schedule{std::move(x), std::move(y), std::move(s), std::move(t),
                      outcome.optimum};
    return {std::move(outcome), std::move(schedule)};
  }
  OptimizationOutcome<MaxPlus> outcome =
      minimize_constrained(build_constrained_instance(project));
  Matrix<MaxPlus> x = canonical_solution(outcome);
  Matrix<MaxPlus> y = add(multiply(project.start_finish, x), project.early_finish);
  Schedule schedule{std::move(x), std::move(y), std::nullopt, std::nullopt,
                    outcome.optimum};
  return {std::move(outcome), std::move(schedule)};
}

struct ActivityInterval {
  Scalar<MaxPlus> lower;
  std::optional<Scalar<MaxPlus>> upper;  // absent when unbounded above
};

struct SolutionFamily {
  std::vector<ActivityInterval> intervals;
};

// Componentwise projection of the solution family onto per-activity
// initiation intervals: [G l, G h] when the parameter box is bounded, the
// lower representative alone otherwise.
inline SolutionFamily describe_solution_family(const OptimizationOutcome<MaxPlus>& outcome) {
  const GeneratedSet<MaxPlus>& set = outcome.solutions;
  const Matrix<MaxPlus> lo = set.generate(set.lower());
  std::optional<Matrix<MaxPlus>> hi;
  if (set.upper()) hi = set.generate(*set.upper());
  SolutionFamily family;
  family.intervals.reserve(lo.rows());
  for (Index i = 0; i < lo.rows(); ++i) {
    ActivityInterval interval{lo.at(i), std::nullopt};
    if (hi) interval.upper = hi->at(i);
    family.intervals.push_back(std::move(interval));
  }
  return family;
}

}  // namespace tropt
