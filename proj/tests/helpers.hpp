#pragma once

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include <tropt/tropt.hpp>

namespace tropt::testing {

// ---------------------------------------------------------------------------
// Builders. `Z` marks the semifield zero in matrix literals.

struct ZeroMarker {};
inline constexpr ZeroMarker Z{};

struct Cell {
  bool zero;
  Rational value;
  Cell(ZeroMarker) : zero(true) {}            // NOLINT(google-explicit-constructor)
  Cell(long v) : zero(false), value(v) {}     // NOLINT(google-explicit-constructor)
  Cell(Rational v) : zero(false), value(std::move(v)) {}  // NOLINT
};

template <class SF = MaxPlus>
Scalar<SF> fin(const Rational& v) {
  return Scalar<SF>(SF::from_rational(v));
}

template <class SF = MaxPlus>
Scalar<SF> cell(const Cell& c) {
  return c.zero ? Scalar<SF>::zero() : fin<SF>(c.value);
}

template <class SF = MaxPlus>
Matrix<SF> mat(const std::vector<std::vector<Cell>>& rows) {
  std::vector<std::vector<Scalar<SF>>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Scalar<SF>> r;
    r.reserve(row.size());
    for (const Cell& c : row) r.push_back(cell<SF>(c));
    out.push_back(std::move(r));
  }
  return Matrix<SF>::from_rows(out);
}

template <class SF = MaxPlus>
Matrix<SF> col(const std::vector<Cell>& entries) {
  std::vector<Scalar<SF>> out;
  out.reserve(entries.size());
  for (const Cell& c : entries) out.push_back(cell<SF>(c));
  return Matrix<SF>::column(std::move(out));
}

template <class SF>
bool approx_matrix_equal(const Matrix<SF>& a, const Matrix<SF>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!approx_equal(a(i, j), b(i, j))) return false;
  return true;
}

template <class SF>
std::string dump(const Matrix<SF>& m) {
  std::string out;
  for (Index i = 0; i < m.rows(); ++i) {
    out += i == 0 ? "[" : " ";
    for (Index j = 0; j < m.cols(); ++j) {
      out += to_string(m(i, j));
      if (j + 1 < m.cols()) out += " ";
    }
    out += i + 1 == m.rows() ? "]" : "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// The two worked examples used across the suites (max-plus, n = 3).
//
// Window example: start-finish lags A, late starts q, early finishes p. The
// flow-time reduction has optimum 3, generator box bounds (0,0,0)..(1,0,2)
// and canonical initiation (1,0,0).
inline Matrix<MaxPlus> window_example_a() {
  return mat({{2, 4, Z}, {2, 2, 1}, {0, -1, 1}});
}
inline Matrix<MaxPlus> window_example_q() { return col({1, 1, 1}); }
inline Matrix<MaxPlus> window_example_p() { return col({3, 3, 3}); }

// The reduced unconstrained instance of the window example: the q-slot holds
// the vector whose conjugate is q^- A = (1, 3, 0), and c = q^- p = 2.
inline UnconstrainedInstance<MaxPlus> window_example_instance() {
  return {window_example_a(), window_example_p(), col({-1, -3, 0}),
          fin(Rational(2))};
}

inline Project window_example_project() {
  return Project::window({"a1", "a2", "a3"}, window_example_a(),
                         window_example_q(), window_example_p());
}

// Constrained example: start-finish lags A, start-start lags B, early
// finishes p, early starts g. The constrained problem has optimum 4, lower
// bound (2,2,3) and canonical initiation (4,5,3).
inline Matrix<MaxPlus> constrained_example_a() {
  return mat({{4, 0, Z}, {2, 3, 1}, {1, 1, 3}});
}
inline Matrix<MaxPlus> constrained_example_b() {
  return mat({{Z, -2, 1}, {0, Z, 2}, {-1, Z, Z}});
}
inline Matrix<MaxPlus> constrained_example_p() { return col({6, 6, 6}); }
inline Matrix<MaxPlus> constrained_example_g() { return col({1, 2, 3}); }

inline ConstrainedInstance<MaxPlus> constrained_example_instance() {
  return {constrained_example_a(), constrained_example_b(),
          constrained_example_p(), constrained_example_g()};
}

inline Project constrained_example_project() {
  return Project::constrained({"a1", "a2", "a3"}, constrained_example_a(),
                              constrained_example_b(), constrained_example_g(),
                              constrained_example_p());
}

// ---------------------------------------------------------------------------
// Random data. All suites share one seeded engine type so runs are
// reproducible.

using Rng = std::mt19937;
inline constexpr Rng::result_type kSeed = 20240915;

// Integer-valued scalar in [lo, hi], zero with probability zero_percent/100.
template <class SF = MaxPlus>
Scalar<SF> random_scalar(Rng& rng, long lo, long hi, int zero_percent = 0) {
  if (zero_percent > 0 &&
      std::uniform_int_distribution<int>(0, 99)(rng) < zero_percent) {
    return Scalar<SF>::zero();
  }
  return fin<SF>(Rational(std::uniform_int_distribution<long>(lo, hi)(rng)));
}

template <class SF = MaxPlus>
Matrix<SF> random_matrix(Rng& rng, Index rows, Index cols, long lo, long hi,
                         int zero_percent = 0) {
  Matrix<SF> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = random_scalar<SF>(rng, lo, hi, zero_percent);
  return m;
}

template <class SF = MaxPlus>
Matrix<SF> random_regular_column(Rng& rng, Index n, long lo, long hi) {
  return random_matrix<SF>(rng, n, 1, lo, hi, 0);
}

// Random square matrix with nonzero spectral radius (some diagonal entry is
// kept finite so a cycle always exists).
template <class SF = MaxPlus>
Matrix<SF> random_matrix_with_cycle(Rng& rng, Index n, long lo, long hi,
                                    int zero_percent = 20) {
  Matrix<SF> m = random_matrix<SF>(rng, n, n, lo, hi, zero_percent);
  const Index i = std::uniform_int_distribution<Index>(0, n - 1)(rng);
  if (m(i, i).is_zero()) {
    m(i, i) = fin<SF>(Rational(std::uniform_int_distribution<long>(lo, hi)(rng)));
  }
  return m;
}

}  // namespace tropt::testing
