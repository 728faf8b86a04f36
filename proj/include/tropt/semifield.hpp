#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <sstream>
#include <string>
#include <utility>

#include "tropt/errors.hpp"

namespace tropt {

// Exact rational number; the carrier of the additive semifields and the
// exponent type of every power operation.
using Rational = boost::multiprecision::cpp_rational;

enum class SemifieldId { max_plus, min_plus, max_times, min_times };

// A semifield trait bundles the carrier value type with the operations that
// differ between instances:
//
//   value_type      carrier of finite elements (the zero element lives in
//                   Scalar, not here)
//   one()           multiplicative identity
//   mul(a, b)       a (x) b on finite values
//   inv(a)          multiplicative inverse
//   pow(a, e)       rational power a^e
//   less(a, b)      strict order induced by a (+) b = b (reversed relative
//                   to the natural order for the min instances)
//   valid(a)        carrier membership test
//   from_rational   embedding of exact rationals, used by grids and parsers
//
// The additive instances (max_plus, min_plus) compute on exact rationals so
// that every identity asserted by the solvers holds with equality; the
// multiplicative instances (max_times, min_times) need real roots and
// therefore compute on doubles with a per-instance relative tolerance.

struct MaxPlus {
  using value_type = Rational;
  static constexpr SemifieldId id = SemifieldId::max_plus;
  static constexpr bool exact = true;
  static constexpr const char* name = "max-plus";

  static value_type one() { return value_type(0); }
  static value_type mul(const value_type& a, const value_type& b) { return a + b; }
  static value_type inv(const value_type& a) { return -a; }
  static value_type pow(const value_type& a, const Rational& e) { return a * e; }
  static bool less(const value_type& a, const value_type& b) { return a < b; }
  static bool valid(const value_type&) { return true; }
  static value_type from_rational(const Rational& r) { return r; }
};

struct MinPlus {
  using value_type = Rational;
  static constexpr SemifieldId id = SemifieldId::min_plus;
  static constexpr bool exact = true;
  static constexpr const char* name = "min-plus";

  static value_type one() { return value_type(0); }
  static value_type mul(const value_type& a, const value_type& b) { return a + b; }
  static value_type inv(const value_type& a) { return -a; }
  static value_type pow(const value_type& a, const Rational& e) { return a * e; }
  static bool less(const value_type& a, const value_type& b) { return a > b; }
  static bool valid(const value_type&) { return true; }
  static value_type from_rational(const Rational& r) { return r; }
};

struct MaxTimes {
  using value_type = double;
  static constexpr SemifieldId id = SemifieldId::max_times;
  static constexpr bool exact = false;
  static constexpr const char* name = "max-times";

  static value_type one() { return 1.0; }
  static value_type mul(value_type a, value_type b) { return a * b; }
  static value_type inv(value_type a) { return 1.0 / a; }
  static value_type pow(value_type a, const Rational& e) {
    return std::pow(a, e.convert_to<double>());
  }
  static bool less(value_type a, value_type b) { return a < b; }
  static bool valid(value_type a) { return std::isfinite(a) && a > 0.0; }
  static value_type from_rational(const Rational& r) { return r.convert_to<double>(); }

  // Relative tolerance used by approximate equality; adjustable process-wide.
  static double& tolerance() {
    static double tol = 1e-9;
    return tol;
  }
};

struct MinTimes {
  using value_type = double;
  static constexpr SemifieldId id = SemifieldId::min_times;
  static constexpr bool exact = false;
  static constexpr const char* name = "min-times";

  static value_type one() { return 1.0; }
  static value_type mul(value_type a, value_type b) { return a * b; }
  static value_type inv(value_type a) { return 1.0 / a; }
  static value_type pow(value_type a, const Rational& e) {
    return std::pow(a, e.convert_to<double>());
  }
  static bool less(value_type a, value_type b) { return a > b; }
  static bool valid(value_type a) { return std::isfinite(a) && a > 0.0; }
  static value_type from_rational(const Rational& r) { return r.convert_to<double>(); }

  static double& tolerance() {
    static double tol = 1e-9;
    return tol;
  }
};

// One element of an idempotent semifield: the zero (bottom) element or a
// finite carrier value. The zero element is an explicit state, never a
// sentinel value, so exact rational arithmetic is never contaminated by
// infinities.
template <class SF>
class Scalar {
 public:
  using semifield = SF;
  using value_type = typename SF::value_type;

  // Default-constructed scalars are the semifield zero.
  constexpr Scalar() = default;

  explicit Scalar(value_type v) : finite_(true), value_(std::move(v)) {
    if (!SF::valid(value_)) {
      throw ValueError("InvalidValue",
                       std::string(SF::name) + ": value outside the semifield carrier");
    }
  }

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(SF::one()); }

  bool is_zero() const noexcept { return !finite_; }

  const value_type& value() const {
    if (!finite_) {
      throw ValueError("ZeroValue", "the zero element has no finite value");
    }
    return value_;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

 private:
  bool finite_ = false;
  value_type value_{};
};

// a (+) b. Idempotent, commutative, associative; zero is neutral.
template <class SF>
Scalar<SF> oplus(const Scalar<SF>& a, const Scalar<SF>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return SF::less(a.value(), b.value()) ? b : a;
}

// a (x) b. Zero is absorbing.
template <class SF>
Scalar<SF> otimes(const Scalar<SF>& a, const Scalar<SF>& b) {
  if (a.is_zero() || b.is_zero()) return Scalar<SF>::zero();
  return Scalar<SF>(SF::mul(a.value(), b.value()));
}

template <class SF>
Scalar<SF> inverse(const Scalar<SF>& a) {
  if (a.is_zero()) {
    throw ValueError("InvertZero", "the zero element has no multiplicative inverse");
  }
  return Scalar<SF>(SF::inv(a.value()));
}

// a^e for an exact rational exponent. The zero element supports only
// exponents >= 1 (where the power stays zero); anything smaller is
// undefined and rejected.
template <class SF>
Scalar<SF> power(const Scalar<SF>& a, const Rational& exponent) {
  if (a.is_zero()) {
    if (exponent >= 1) return Scalar<SF>::zero();
    throw ValueError("ZeroPower",
                     "exponent below one applied to the zero element");
  }
  if (exponent == 0) return Scalar<SF>::one();
  return Scalar<SF>(SF::pow(a.value(), exponent));
}

// Total order induced by idempotent addition: a <= b iff a (+) b = b.
// The zero element is least.
template <class SF>
std::strong_ordering compare(const Scalar<SF>& a, const Scalar<SF>& b) {
  if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
  if (a.is_zero()) return std::strong_ordering::less;
  if (b.is_zero()) return std::strong_ordering::greater;
  if (SF::less(a.value(), b.value())) return std::strong_ordering::less;
  if (SF::less(b.value(), a.value())) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <class SF>
Scalar<SF> operator+(const Scalar<SF>& a, const Scalar<SF>& b) {
  return oplus(a, b);
}

template <class SF>
Scalar<SF> operator*(const Scalar<SF>& a, const Scalar<SF>& b) {
  return otimes(a, b);
}

template <class SF>
bool operator<(const Scalar<SF>& a, const Scalar<SF>& b) {
  return compare(a, b) == std::strong_ordering::less;
}

template <class SF>
bool operator<=(const Scalar<SF>& a, const Scalar<SF>& b) {
  return compare(a, b) != std::strong_ordering::greater;
}

template <class SF>
bool operator>(const Scalar<SF>& a, const Scalar<SF>& b) {
  return compare(a, b) == std::strong_ordering::greater;
}

template <class SF>
bool operator>=(const Scalar<SF>& a, const Scalar<SF>& b) {
  return compare(a, b) != std::strong_ordering::less;
}

// Exact equality in the exact semifields; relative-tolerance equality in the
// floating-point ones.
template <class SF>
bool approx_equal(const Scalar<SF>& a, const Scalar<SF>& b) {
  if constexpr (SF::exact) {
    return a == b;
  } else {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    const double x = a.value();
    const double y = b.value();
    return x == y ||
           std::abs(x - y) <= SF::tolerance() * std::max(std::abs(x), std::abs(y));
  }
}

template <class SF>
std::string to_string(const Scalar<SF>& a) {
  if (a.is_zero()) return "zero";
  if constexpr (SF::exact) {
    return a.value().str();
  } else {
    std::ostringstream out;
    out.precision(15);
    out << a.value();
    return out.str();
  }
}

}  // namespace tropt
