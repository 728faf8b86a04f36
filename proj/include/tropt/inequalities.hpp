#pragma once

#include <optional>
#include <utility>

#include "tropt/matrix.hpp"

namespace tropt {

// Solution of A x <= d for column-regular A: the box {x : x <= bound}.
template <class SF>
struct BoxBound {
  Matrix<SF> bound;
};

// Parametric solution family {x = G u : lower <= u <= upper}, the shape in
// which every solver below (and every optimizer) reports its complete
// solution set. A missing upper bound leaves u unbounded above; zero entries
// of the lower bound leave the corresponding components unconstrained below.
template <class SF>
class GeneratedSet {
 public:
  GeneratedSet(Matrix<SF> generator, Matrix<SF> lower,
               std::optional<Matrix<SF>> upper)
      : generator_(std::move(generator)),
        lower_(std::move(lower)),
        upper_(std::move(upper)) {
    if (!generator_.is_square() || !lower_.is_column() ||
        lower_.rows() != generator_.rows()) {
      throw DimensionError("generated set requires an n x n generator and length-n bounds");
    }
    if (upper_) {
      if (!upper_->is_column() || upper_->rows() != generator_.rows()) {
        throw DimensionError("generated set requires an n x n generator and length-n bounds");
      }
      if (!is_regular(*upper_)) {
        throw ValueError("NonRegularVector", "upper bound of a generated set must be regular");
      }
      if (!leq(lower_, *upper_)) {
        // The theorems guarantee a nonempty box; in the floating-point
        // semifields this can only be a tolerance failure.
        throw InternalError("EmptyBox",
                            "generated set has lower bound above its upper bound");
      }
    }
  }

  const Matrix<SF>& generator() const noexcept { return generator_; }
  const Matrix<SF>& lower() const noexcept { return lower_; }
  const std::optional<Matrix<SF>>& upper() const noexcept { return upper_; }
  Index dimension() const noexcept { return generator_.rows(); }

  // The member G u for a parameter vector u.
  Matrix<SF> generate(const Matrix<SF>& u) const { return multiply(generator_, u); }

  bool contains_parameter(const Matrix<SF>& u) const {
    if (!u.is_column() || u.rows() != dimension()) return false;
    if (!leq(lower_, u)) return false;
    return !upper_ || leq(u, *upper_);
  }

  // Distinguished parameter: the lower bound with unconstrained components
  // filled by the identity, the only distinguished finite scalar.
  Matrix<SF> canonical_parameter() const {
    Matrix<SF> u = lower_;
    for (Index i = 0; i < u.rows(); ++i) {
      if (u.at(i).is_zero()) u.at(i) = Scalar<SF>::one();
    }
    return u;
  }

  Matrix<SF> canonical() const { return generate(canonical_parameter()); }

 private:
  Matrix<SF> generator_;
  Matrix<SF> lower_;
  std::optional<Matrix<SF>> upper_;
};

// All solutions of A x <= d: x <= (d^- A)^-. Requires a column-regular A
// (otherwise some component would be unbounded) and a regular d.
template <class SF>
BoxBound<SF> solve_upper_bounded(const Matrix<SF>& a, const Matrix<SF>& d) {
  if (!d.is_column() || d.rows() != a.rows()) {
    throw DimensionError("right-hand side must be a column of length rows(A)");
  }
  if (!is_column_regular(a)) {
    throw SolverError("NonColumnRegular",
                      "A x <= d is solvable in box form only for column-regular A");
  }
  if (!is_regular(d)) {
    throw SolverError("NonRegularVector", "right-hand side d must be regular");
  }
  return BoxBound<SF>{conjugate_transpose(multiply(conjugate_transpose(d), a))};
}

// All solutions of A x <= x: x = A* u with unrestricted u, provided
// Tr(A) <= 1; otherwise no solution exists and the offending trace value is
// reported.
template <class SF>
GeneratedSet<SF> solve_subinvariant(const Matrix<SF>& a) {
  const Scalar<SF> tr = tr_cumulative(a);
  if (tr > Scalar<SF>::one()) {
    throw SolverError("NoSolutionCertificate",
                      "A x <= x has no solution: Tr(A) = " + to_string(tr) +
                          " exceeds the identity");
  }
  return GeneratedSet<SF>(kleene_star(a), Matrix<SF>(a.rows(), 1), std::nullopt);
}

// All regular solutions of A x (+) b <= x: x = A* u over regular u >= b,
// provided Tr(A) <= 1; otherwise there is no regular solution.
template <class SF>
GeneratedSet<SF> solve_affine_subinvariant(const Matrix<SF>& a,
                                           const Matrix<SF>& b) {
  if (!b.is_column() || b.rows() != a.rows()) {
    throw DimensionError("offset must be a column of length rows(A)");
  }
  const Scalar<SF> tr = tr_cumulative(a);
  if (tr > Scalar<SF>::one()) {
    throw SolverError("NoRegularSolution",
                      "A x (+) b <= x has no regular solution: Tr(A) = " +
                          to_string(tr) + " exceeds the identity");
  }
  return GeneratedSet<SF>(kleene_star(a), b, std::nullopt);
}

}  // namespace tropt
