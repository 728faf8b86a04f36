#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tropt/optimizer.hpp"

namespace tropt {

// Brute-force verification of closed-form optima on small instances: a
// finite grid of candidate vectors is enumerated, infeasible points are
// skipped, and the best feasible objective value is compared against the
// solver output. The grid lives over exact rationals, so in the exact
// semifields the oracle verdict is exact as well.

struct GridInterval {
  Rational lo;
  Rational hi;
};

struct GridSpec {
  std::vector<GridInterval> intervals;  // one closed interval per coordinate
  Rational step;

  GridSpec(std::vector<GridInterval> iv, Rational step_size)
      : intervals(std::move(iv)), step(std::move(step_size)) {
    if (intervals.empty()) throw DimensionError("grid needs at least one coordinate");
    if (step <= 0) throw ValueError("InvalidValue", "grid step must be positive");
    for (const GridInterval& interval : intervals) {
      if (interval.lo > interval.hi) {
        throw ValueError("InvalidValue", "grid interval has lo > hi");
      }
    }
  }

  static GridSpec uniform(Index n, Rational lo, Rational hi, Rational step_size) {
    return GridSpec(std::vector<GridInterval>(n, GridInterval{std::move(lo), std::move(hi)}),
                    std::move(step_size));
  }
};

template <class SF>
struct GridMinimum {
  Scalar<SF> minimum;
  std::vector<Matrix<SF>> argmins;  // in lexicographic enumeration order
  std::size_t feasible_points = 0;
};

// Exact minimum of the objective over the feasible grid points, with every
// attaining point.
template <class SF>
GridMinimum<SF> grid_minimize(const Problem<SF>& problem, const GridSpec& grid) {
  const Index n = dimension(problem);
  if (grid.intervals.size() != n) {
    throw DimensionError("grid dimension must match the instance dimension");
  }

  std::vector<std::vector<Scalar<SF>>> axis_values(n);
  for (Index i = 0; i < n; ++i) {
    for (Rational v = grid.intervals[i].lo; v <= grid.intervals[i].hi; v += grid.step) {
      axis_values[i].push_back(Scalar<SF>(SF::from_rational(v)));
    }
  }

  GridMinimum<SF> result;
  Matrix<SF> x(n, 1);
  std::vector<Index> cursor(n, 0);
  while (true) {
    for (Index i = 0; i < n; ++i) x.at(i) = axis_values[i][cursor[i]];
    if (feasible(problem, x)) {
      ++result.feasible_points;
      const Scalar<SF> value = evaluate_objective(problem, x);
      if (result.argmins.empty() || value < result.minimum) {
        result.minimum = value;
        result.argmins.clear();
        result.argmins.push_back(x);
      } else if (value == result.minimum) {
        result.argmins.push_back(x);
      }
    }
    Index i = n;
    while (i > 0) {
      --i;
      if (++cursor[i] < axis_values[i].size()) break;
      cursor[i] = 0;
      if (i == 0) {
        if (result.feasible_points == 0) {
          throw SolverError("EmptyGrid", "no feasible point on the grid");
        }
        return result;
      }
    }
  }
}

struct VerificationIssue {
  std::string check;
  std::string detail;
};

template <class SF>
struct VerificationReport {
  bool pass = false;
  Scalar<SF> grid_minimum;
  Scalar<SF> closed_form;
  std::size_t feasible_points = 0;
  std::size_t argmin_count = 0;
  std::vector<VerificationIssue> issues;
};

namespace detail {

template <class SF>
std::string render_point(const Matrix<SF>& x) {
  std::string out = "(";
  for (Index i = 0; i < x.rows(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(x.at(i));
  }
  return out + ")";
}

}  // namespace detail

// Checks, against the grid:
//   (a) no feasible grid point beats the closed-form optimum,
//   (b) every grid argmin is a member of the solution set,
//   (c) deterministically sampled members of the set are feasible and
//       attain the optimum.
// The report carries a counterexample for every failed check.
template <class SF>
VerificationReport<SF> verify_solution_set(const Problem<SF>& problem,
                                           const OptimizationOutcome<SF>& outcome,
                                           const GridSpec& grid,
                                           std::size_t samples = 10) {
  const GridMinimum<SF> gm = grid_minimize(problem, grid);
  VerificationReport<SF> report;
  report.grid_minimum = gm.minimum;
  report.closed_form = outcome.optimum;
  report.feasible_points = gm.feasible_points;
  report.argmin_count = gm.argmins.size();

  if (gm.minimum < outcome.optimum && !approx_equal(gm.minimum, outcome.optimum)) {
    report.issues.push_back(
        {"grid-beats-optimum",
         "grid point " + detail::render_point(gm.argmins.front()) + " attains " +
             to_string(gm.minimum) + " below the closed-form optimum " +
             to_string(outcome.optimum)});
  }
  for (const Matrix<SF>& x : gm.argmins) {
    if (!membership(problem, outcome, x)) {
      report.issues.push_back({"argmin-membership",
                               "grid argmin " + detail::render_point(x) +
                                   " is not a member of the solution set"});
    }
  }

  // Deterministic parameter samples: the canonical parameter, the upper
  // bound when present, and box points stepped away from the lower bound.
  const GeneratedSet<SF>& set = outcome.solutions;
  std::vector<Matrix<SF>> params{set.canonical_parameter()};
  if (set.upper()) params.push_back(*set.upper());
  for (std::size_t s = 1; s <= samples; ++s) {
    Matrix<SF> u = set.canonical_parameter();
    for (Index i = 0; i < u.rows(); ++i) {
      // Staggered upward offsets; flip below-identity offsets so the move
      // goes up in the semifield order of every instance.
      Scalar<SF> offset(SF::from_rational(Rational(1) + Rational((s + i) % 4, 2)));
      if (offset < Scalar<SF>::one()) offset = inverse(offset);
      Scalar<SF> candidate = otimes(u.at(i), offset);
      if (set.upper() && candidate > set.upper()->at(i)) {
        candidate = set.upper()->at(i);
      }
      u.at(i) = candidate;
    }
    params.push_back(std::move(u));
  }

  for (const Matrix<SF>& u : params) {
    if (!set.contains_parameter(u)) continue;
    const Matrix<SF> x = set.generate(u);
    if (!is_regular(x)) {
      report.issues.push_back({"member-regularity",
                               "set member " + detail::render_point(x) + " is not regular"});
      continue;
    }
    if (!feasible(problem, x)) {
      report.issues.push_back({"member-feasibility",
                               "set member " + detail::render_point(x) +
                                   " violates the constraints"});
      continue;
    }
    const Scalar<SF> value = evaluate_objective(problem, x);
    if (!approx_equal(value, outcome.optimum)) {
      report.issues.push_back(
          {"member-objective", "set member " + detail::render_point(x) + " attains " +
                                   to_string(value) + " instead of the optimum " +
                                   to_string(outcome.optimum)});
    }
  }

  report.pass = report.issues.empty();
  return report;
}

}  // namespace tropt
