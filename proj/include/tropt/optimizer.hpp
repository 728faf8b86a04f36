#pragma once

#include <cstddef>
#include <utility>
#include <variant>

#include "tropt/inequalities.hpp"

namespace tropt {

// The four optimization problems solved in closed form. Members are named
// after the keys of the problem JSON schema; comments state each role.

// minimize x^- A x over regular x.
template <class SF>
struct RayleighInstance {
  Matrix<SF> a;  // n x n objective matrix
};

// minimize x^- A x (+) x^- p (+) q^- x (+) c over regular x.
template <class SF>
struct UnconstrainedInstance {
  Matrix<SF> a;                       // n x n objective matrix
  Matrix<SF> p;                       // column pushing x up (entries may be zero)
  Matrix<SF> q;                       // regular column pushing x down
  Scalar<SF> c = Scalar<SF>::zero();  // constant floor of the objective
};

// minimize x^- A x (+) x^- p subject to B x (+) g <= x.
template <class SF>
struct ConstrainedInstance {
  Matrix<SF> a;  // n x n objective matrix
  Matrix<SF> b;  // n x n constraint matrix, needs Tr(B) <= 1
  Matrix<SF> p;  // column in the objective
  Matrix<SF> g;  // column lower bound in the constraint
};

// minimize x^- A x subject to B x (+) g <= x and C x <= h.
template <class SF>
struct DoublyConstrainedInstance {
  Matrix<SF> a;  // n x n objective matrix
  Matrix<SF> b;  // n x n constraint matrix, needs Tr(B) <= 1
  Matrix<SF> c;  // m x n column-regular constraint matrix
  Matrix<SF> g;  // column lower bound (entries may be zero)
  Matrix<SF> h;  // regular column of length m
};

template <class SF>
using Problem = std::variant<RayleighInstance<SF>, UnconstrainedInstance<SF>,
                             ConstrainedInstance<SF>, DoublyConstrainedInstance<SF>>;

enum class ProblemKind { rayleigh, extended, constrained, doubly_constrained };

template <class SF>
ProblemKind kind(const Problem<SF>& problem) {
  return static_cast<ProblemKind>(problem.index());
}

template <class SF>
Index dimension(const Problem<SF>& problem) {
  return std::visit([](const auto& inst) { return inst.a.rows(); }, problem);
}

// Optimum value together with the complete family of regular optimizers.
template <class SF>
struct OptimizationOutcome {
  Scalar<SF> optimum;
  GeneratedSet<SF> solutions;
};

// Mixed-trace enumerations grow exponentially in the order; reject larger
// instances instead of running forever.
inline constexpr Index kMaxEnumerationOrder = 12;

namespace detail {

template <class SF>
Scalar<SF> checked_spectral_radius(const Matrix<SF>& a) {
  const Scalar<SF> lambda = spectral_radius(a);
  if (lambda.is_zero()) {
    throw SolverError("ZeroSpectralRadius",
                      "the objective matrix has zero spectral radius");
  }
  return lambda;
}

inline void check_enumeration_order(Index n, Index max_order) {
  if (n > max_order) {
    throw SolverError("EnumerationLimit",
                      "mixed-trace enumeration is limited to order " +
                          std::to_string(max_order));
  }
}

template <class SF>
std::vector<Matrix<SF>> powers_up_to(const Matrix<SF>& b, Index max_exp) {
  std::vector<Matrix<SF>> pows;
  pows.reserve(max_exp + 1);
  pows.push_back(Matrix<SF>::identity(b.rows()));
  for (Index i = 1; i <= max_exp; ++i) pows.push_back(multiply(pows.back(), b));
  return pows;
}

// Folds tr^(1/k)(prefix A B^{i1} ... A B^{ik} suffix) into `acc` over all
// exponent tuples with min_total <= i1+...+ik <= budget.
template <class SF>
void fold_mixed_traces(const Matrix<SF>& a, const std::vector<Matrix<SF>>& b_pow,
                       Index k, Index budget, Index min_total,
                       const Matrix<SF>& prefix, const Matrix<SF>& suffix,
                       Scalar<SF>& acc) {
  auto dfs = [&](auto&& self, Index level, Index total,
                 const Matrix<SF>& prod) -> void {
    if (level == k) {
      if (total >= min_total) {
        acc = oplus(acc, trace_root(trace(multiply(prod, suffix)), k));
      }
      return;
    }
    const Matrix<SF> pa = multiply(prod, a);
    for (Index i = 0; total + i <= budget; ++i) {
      self(self, level + 1, total + i, i == 0 ? pa : multiply(pa, b_pow[i]));
    }
  };
  dfs(dfs, 0, 0, prefix);
}

}  // namespace detail

// minimize x^- A x. The minimum is the spectral radius and the optimizers
// are x = (lambda^-1 A)* u over arbitrary u.
template <class SF>
OptimizationOutcome<SF> minimize_rayleigh(const RayleighInstance<SF>& inst) {
  const Scalar<SF> lambda = detail::checked_spectral_radius(inst.a);
  Matrix<SF> gen = kleene_star(scalar_multiply(inverse(lambda), inst.a));
  return {lambda, GeneratedSet<SF>(std::move(gen), Matrix<SF>(inst.a.rows(), 1),
                                   std::nullopt)};
}

// minimize x^- A x (+) x^- p (+) q^- x (+) c. The minimum is
//   mu = lambda (+) (+)_{m=1..n} (q^- A^{m-1} p)^{1/(m+1)} (+) c
// and the optimizers are x = (mu^-1 A)* u over
//   mu^-1 p <= u <= mu (q^- (mu^-1 A)*)^-.
template <class SF>
OptimizationOutcome<SF> minimize_extended(const UnconstrainedInstance<SF>& inst) {
  const Index n = inst.a.rows();
  if (!inst.a.is_square() || !inst.p.is_column() || inst.p.rows() != n ||
      !inst.q.is_column() || inst.q.rows() != n) {
    throw DimensionError("instance vectors must be columns of length rows(A)");
  }
  if (!is_regular(inst.q)) {
    throw SolverError("NonRegularQ", "q must be a regular vector");
  }
  const Scalar<SF> lambda = detail::checked_spectral_radius(inst.a);

  Scalar<SF> mu = oplus(lambda, inst.c);
  Matrix<SF> qrow = conjugate_transpose(inst.q);  // advances through q^- A^{m-1}
  for (Index m = 1; m <= n; ++m) {
    if (m > 1) qrow = multiply(qrow, inst.a);
    const Scalar<SF> term = as_scalar(multiply(qrow, inst.p));
    if (!term.is_zero()) {
      mu = oplus(mu, power(term, Rational(1, static_cast<long>(m) + 1)));
    }
  }

  const Scalar<SF> mu_inv = inverse(mu);
  Matrix<SF> gen = kleene_star(scalar_multiply(mu_inv, inst.a));
  Matrix<SF> lower = scalar_multiply(mu_inv, inst.p);
  Matrix<SF> upper = scalar_multiply(
      mu, conjugate_transpose(multiply(conjugate_transpose(inst.q), gen)));
  return {mu, GeneratedSet<SF>(std::move(gen), std::move(lower), std::move(upper))};
}

// minimize x^- A x (+) x^- p subject to B x (+) g <= x. The minimum is
//   theta = lambda (+) (+)_{k=1..n-1} (+)_{1 <= i1+...+ik <= n-k}
//           tr^(1/k)(A B^{i1} ... A B^{ik})
// and the optimizers are x = (theta^-1 A (+) B)* u over u >= theta^-1 p (+) g.
template <class SF>
OptimizationOutcome<SF> minimize_constrained(const ConstrainedInstance<SF>& inst,
                                             Index max_order = kMaxEnumerationOrder) {
  const Index n = inst.a.rows();
  if (!inst.a.is_square() || !inst.b.is_square() || inst.b.rows() != n ||
      !inst.p.is_column() || inst.p.rows() != n || !inst.g.is_column() ||
      inst.g.rows() != n) {
    throw DimensionError("constrained instance shapes do not conform");
  }
  detail::check_enumeration_order(n, max_order);
  const Scalar<SF> lambda = detail::checked_spectral_radius(inst.a);
  const Scalar<SF> tr_b = tr_cumulative(inst.b);
  if (tr_b > Scalar<SF>::one()) {
    throw SolverError("InfeasibleConstraints",
                      "B x (+) g <= x has no regular solution: Tr(B) = " +
                          to_string(tr_b) + " exceeds the identity");
  }

  Scalar<SF> theta = lambda;
  if (n >= 2) {
    const auto b_pow = detail::powers_up_to(inst.b, n - 2 + 1);
    const Matrix<SF> eye = Matrix<SF>::identity(n);
    for (Index k = 1; k + 1 <= n; ++k) {
      detail::fold_mixed_traces(inst.a, b_pow, k, n - k, 1, eye, eye, theta);
    }
  }

  Matrix<SF> gen = kleene_star(add(scalar_multiply(inverse(theta), inst.a), inst.b));
  Matrix<SF> lower = add(scalar_multiply(inverse(theta), inst.p), inst.g);
  return {theta, GeneratedSet<SF>(std::move(gen), std::move(lower), std::nullopt)};
}

// minimize x^- A x subject to B x (+) g <= x and C x <= h. The minimum is
//   theta = (+)_{k=1..n} (+)_{0 <= i0+i1+...+ik <= n-k}
//           tr^(1/k)(B^{i0} (A B^{i1} ... A B^{ik}) (I (+) g h^- C))
// and the optimizers are x = (theta^-1 A (+) B)* u over
//   g <= u <= (h^- C (theta^-1 A (+) B)*)^-.
template <class SF>
OptimizationOutcome<SF> minimize_doubly_constrained(
    const DoublyConstrainedInstance<SF>& inst,
    Index max_order = kMaxEnumerationOrder) {
  const Index n = inst.a.rows();
  if (!inst.a.is_square() || !inst.b.is_square() || inst.b.rows() != n ||
      inst.c.cols() != n || !inst.g.is_column() || inst.g.rows() != n ||
      !inst.h.is_column() || inst.h.rows() != inst.c.rows()) {
    throw DimensionError("doubly constrained instance shapes do not conform");
  }
  detail::check_enumeration_order(n, max_order);
  detail::checked_spectral_radius(inst.a);
  const Scalar<SF> tr_b = tr_cumulative(inst.b);
  if (tr_b > Scalar<SF>::one()) {
    throw SolverError("InfeasibleConstraints",
                      "B x (+) g <= x has no regular solution: Tr(B) = " +
                          to_string(tr_b) + " exceeds the identity");
  }
  if (!is_column_regular(inst.c)) {
    throw SolverError("NonColumnRegular", "C must be column-regular");
  }
  if (!is_regular(inst.h)) {
    throw SolverError("NonRegularVector", "h must be a regular vector");
  }
  const Matrix<SF> h_conj = conjugate_transpose(inst.h);
  const Scalar<SF> gap = as_scalar(
      multiply(multiply(h_conj, inst.c), multiply(kleene_star(inst.b), inst.g)));
  if (gap > Scalar<SF>::one()) {
    throw SolverError("IncompatibleBounds",
                      "h^- C B* g = " + to_string(gap) +
                          " exceeds the identity; the constraints admit no regular x");
  }

  const auto b_pow = detail::powers_up_to(inst.b, n >= 1 ? n - 1 : 0);
  const Matrix<SF> closing =
      add(Matrix<SF>::identity(n), multiply(multiply(inst.g, h_conj), inst.c));

  // The leading exponent i0 shares the total budget n - k with i1..ik.
  Scalar<SF> theta;
  for (Index k = 1; k <= n; ++k) {
    for (Index i0 = 0; i0 <= n - k; ++i0) {
      detail::fold_mixed_traces(inst.a, b_pow, k, n - k - i0, 0, b_pow[i0],
                                closing, theta);
    }
  }
  if (theta.is_zero()) {
    // Unreachable: theta dominates the spectral radius, which was checked.
    throw InternalError("ZeroOptimum", "mixed-trace sum vanished unexpectedly");
  }

  Matrix<SF> gen = kleene_star(add(scalar_multiply(inverse(theta), inst.a), inst.b));
  Matrix<SF> upper = conjugate_transpose(multiply(multiply(h_conj, inst.c), gen));
  return {theta, GeneratedSet<SF>(std::move(gen), inst.g, std::move(upper))};
}

// Dispatches on the problem kind.
template <class SF>
OptimizationOutcome<SF> solve(const Problem<SF>& problem,
                              Index max_order = kMaxEnumerationOrder) {
  return std::visit(
      [max_order](const auto& inst) -> OptimizationOutcome<SF> {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, RayleighInstance<SF>>) {
          return minimize_rayleigh(inst);
        } else if constexpr (std::is_same_v<T, UnconstrainedInstance<SF>>) {
          return minimize_extended(inst);
        } else if constexpr (std::is_same_v<T, ConstrainedInstance<SF>>) {
          return minimize_constrained(inst, max_order);
        } else {
          return minimize_doubly_constrained(inst, max_order);
        }
      },
      problem);
}

// Objective value at a regular vector x, regardless of feasibility.
template <class SF>
Scalar<SF> evaluate_objective(const Problem<SF>& problem, const Matrix<SF>& x) {
  if (!x.is_column() || x.rows() != dimension(problem)) {
    throw DimensionError("x must be a column of the instance dimension");
  }
  if (!is_regular(x)) {
    throw ValueError("NonRegularVector", "the objective is evaluated at regular x only");
  }
  const Matrix<SF> xc = conjugate_transpose(x);
  return std::visit(
      [&](const auto& inst) -> Scalar<SF> {
        using T = std::decay_t<decltype(inst)>;
        const Scalar<SF> rayleigh = as_scalar(multiply(xc, multiply(inst.a, x)));
        if constexpr (std::is_same_v<T, RayleighInstance<SF>>) {
          return rayleigh;
        } else if constexpr (std::is_same_v<T, UnconstrainedInstance<SF>>) {
          return oplus(oplus(rayleigh, as_scalar(multiply(xc, inst.p))),
                       oplus(as_scalar(multiply(conjugate_transpose(inst.q), x)),
                             inst.c));
        } else if constexpr (std::is_same_v<T, ConstrainedInstance<SF>>) {
          return oplus(rayleigh, as_scalar(multiply(xc, inst.p)));
        } else {
          return rayleigh;
        }
      },
      problem);
}

// Constraint satisfaction at x (vacuously true for the unconstrained kinds).
template <class SF>
bool feasible(const Problem<SF>& problem, const Matrix<SF>& x) {
  if (!x.is_column() || x.rows() != dimension(problem)) return false;
  return std::visit(
      [&](const auto& inst) -> bool {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, ConstrainedInstance<SF>>) {
          return leq(add(multiply(inst.b, x), inst.g), x);
        } else if constexpr (std::is_same_v<T, DoublyConstrainedInstance<SF>>) {
          return leq(add(multiply(inst.b, x), inst.g), x) &&
                 leq(multiply(inst.c, x), inst.h);
        } else {
          return true;
        }
      },
      problem);
}

// True iff x is a regular, feasible vector attaining the optimum. Malformed
// x yields false rather than an error.
template <class SF>
bool membership(const Problem<SF>& problem, const OptimizationOutcome<SF>& outcome,
                const Matrix<SF>& x) {
  if (!x.is_column() || x.rows() != dimension(problem)) return false;
  if (!is_regular(x)) return false;
  if (!feasible(problem, x)) return false;
  return approx_equal(evaluate_objective(problem, x), outcome.optimum);
}

// Distinguished optimizer: the set member generated by the canonical
// parameter.
template <class SF>
Matrix<SF> canonical_solution(const OptimizationOutcome<SF>& outcome) {
  return outcome.solutions.canonical();
}

}  // namespace tropt
