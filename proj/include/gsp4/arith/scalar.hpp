#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <type_traits>

#include "gsp4/arith/rational.hpp"
#include "gsp4/arith/surd.hpp"

namespace gsp4 {

using Complex = std::complex<double>;

/// Default relative tolerance for the floating backend.
inline constexpr double kDefaultTolerance = 1e-9;

/// Tolerance from GSP4_PRECISION if set and parseable, else the default.
inline double default_tolerance() {
  if (const char* env = std::getenv("GSP4_PRECISION")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0 && std::isfinite(v)) return v;
  }
  return kDefaultTolerance;
}

/// Per-backend operations. Three backends exist:
///   Rational  exact, integral powers of p only
///   Surd      exact, half-integral powers of p as well
///   Complex   double precision, every comparison takes an explicit tolerance
/// Operations are templates over the scalar; there are no implicit conversions
/// between backends, so a mixed call does not compile.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool half_powers = false;
  static Rational from_rational(const Rational& q) { return q; }
  static Rational pow_p(std::uint64_t p, long long e) { return rpow(p, e); }
  static Rational half_pow_p(std::uint64_t p, long long twice_e) {
    if (twice_e % 2 != 0) fail(ErrorCode::NotExact, "half-integral power of p requested on the rational backend");
    return rpow(p, twice_e / 2);
  }
  static bool is_zero(const Rational& x, double = 0) { return x == 0; }
  static bool equal(const Rational& a, const Rational& b, double = 0) { return a == b; }
  static Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
  static double real_key(const Rational& x) { return to_double(x); }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Surd> {
  static constexpr bool exact = true;
  static constexpr bool half_powers = true;
  static Surd from_rational(const Rational& q) { return Surd(q); }
  static Surd pow_p(std::uint64_t p, long long e) { return Surd(rpow(p, e)); }
  static Surd half_pow_p(std::uint64_t p, long long twice_e) { return Surd::half_power(p, twice_e); }
  static bool is_zero(const Surd& x, double = 0) { return x.is_zero(); }
  static bool equal(const Surd& a, const Surd& b, double = 0) { return a == b; }
  static Complex to_complex(const Surd& x) { return {x.to_double(), 0.0}; }
  static double real_key(const Surd& x) { return x.to_double(); }
  static std::string str(const Surd& x) { return x.str(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr bool half_powers = true;
  static Complex from_rational(const Rational& q) { return {to_double(q), 0.0}; }
  static Complex pow_p(std::uint64_t p, long long e) { return {std::pow(static_cast<double>(p), static_cast<double>(e)), 0.0}; }
  static Complex half_pow_p(std::uint64_t p, long long twice_e) {
    return {std::pow(static_cast<double>(p), static_cast<double>(twice_e) / 2.0), 0.0};
  }
  /// |x| <= tol.
  static bool is_zero(const Complex& x, double tol) { return std::abs(x) <= tol; }
  /// |a - b| <= tol * max(1, |a|, |b|): relative for large values, absolute near zero.
  static bool equal(const Complex& a, const Complex& b, double tol) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
  }
  static Complex to_complex(const Complex& x) { return x; }
  static double real_key(const Complex& x) { return x.real(); }
  static std::string str(const Complex& x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.15g%+.15gi", x.real(), x.imag());
    return buf;
  }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::exact; };

template <class T>
concept ExactScalar = Scalar<T> && ScalarTraits<T>::exact;

template <class T>
concept HalfPowerScalar = Scalar<T> && ScalarTraits<T>::half_powers;

template <Scalar T>
bool scalar_equal(const T& a, const T& b, double tol = default_tolerance()) {
  return ScalarTraits<T>::equal(a, b, tol);
}

template <Scalar T>
std::string scalar_str(const T& x) {
  return ScalarTraits<T>::str(x);
}

/// 15 significant digits, the CLI's float format.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace gsp4
