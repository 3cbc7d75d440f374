#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "gsp4/arith/scalar.hpp"

namespace gsp4 {

/// Classical Satake parameters (alpha0, alpha1, alpha2) of a weight-k eigenform at a good
/// prime p, subject to alpha0^2 alpha1 alpha2 = p^(2k-3).
template <Scalar T>
struct ClassicalSatake {
  std::uint64_t p = 2;
  int k = 3;
  T alpha0{1}, alpha1{1}, alpha2{1};
};

/// Normalized pair: alpha = p^(3/2-k) alpha0, beta = alpha * alpha1.
template <Scalar T>
struct NormalizedSatake {
  std::uint64_t p = 2;
  T alpha{1}, beta{1};
};

/// Unordered multiset of N local parameters. Order is irrelevant to every operation here.
template <Scalar T, std::size_t N>
struct ParamMultiset {
  std::array<T, N> values;

  static constexpr std::size_t size() { return N; }
  const T& operator[](std::size_t i) const { return values[i]; }

  T product() const {
    T r(1);
    for (const auto& v : values) r *= v;
    return r;
  }
  T sum() const {
    T r(0);
    for (const auto& v : values) r += v;
    return r;
  }
  /// sum_i g_i^r
  T power_sum(unsigned r) const {
    T s(0);
    for (const auto& v : values) {
      T t(1);
      for (unsigned i = 0; i < r; ++i) t *= v;
      s += t;
    }
    return s;
  }
};

/// {alpha, 1/alpha, beta, 1/beta}; the product is 1.
template <Scalar T>
using SpinMultiset = ParamMultiset<T, 4>;

/// {1, alpha1, alpha2, 1/alpha1, 1/alpha2}; contains 1 and is closed under inversion.
template <Scalar T>
using StdMultiset = ParamMultiset<T, 5>;

template <Scalar T>
void check_constraint(const ClassicalSatake<T>& c, double tol = default_tolerance()) {
  using Tr = ScalarTraits<T>;
  if (!is_prime(c.p)) fail(ErrorCode::DomainError, std::to_string(c.p) + " is not prime");
  if (c.k <= 2) fail(ErrorCode::WeightTooSmall, "weight must exceed 2");
  if (Tr::is_zero(c.alpha1, tol) || Tr::is_zero(c.alpha2, tol))
    fail(ErrorCode::ConstraintViolated, "alpha1 and alpha2 must be nonzero");
  T lhs = c.alpha0 * c.alpha0 * c.alpha1 * c.alpha2;
  T rhs = Tr::pow_p(c.p, 2LL * c.k - 3);
  if (!Tr::equal(lhs, rhs, tol))
    fail(ErrorCode::ConstraintViolated, "alpha0^2 alpha1 alpha2 = " + Tr::str(lhs) + " != p^(2k-3) at p = " +
                                            std::to_string(c.p));
}

template <HalfPowerScalar T>
NormalizedSatake<T> normalize(const ClassicalSatake<T>& c, double tol = default_tolerance()) {
  check_constraint(c, tol);
  T alpha = ScalarTraits<T>::half_pow_p(c.p, 3 - 2LL * c.k) * c.alpha0;
  T beta = alpha * c.alpha1;
  return {c.p, alpha, beta};
}

/// Inverse of normalize: alpha0 = p^(k-3/2) alpha, alpha1 = beta/alpha, alpha2 = 1/(alpha beta).
template <HalfPowerScalar T>
ClassicalSatake<T> denormalize(const NormalizedSatake<T>& n, int k) {
  if (k <= 2) fail(ErrorCode::WeightTooSmall, "weight must exceed 2");
  ClassicalSatake<T> c;
  c.p = n.p;
  c.k = k;
  c.alpha0 = ScalarTraits<T>::half_pow_p(n.p, 2LL * k - 3) * n.alpha;
  c.alpha1 = n.beta / n.alpha;
  c.alpha2 = T(1) / (n.alpha * n.beta);
  return c;
}

template <Scalar T>
SpinMultiset<T> spin_multiset(const NormalizedSatake<T>& n) {
  return {{n.alpha, T(1) / n.alpha, n.beta, T(1) / n.beta}};
}

template <Scalar T>
StdMultiset<T> std_multiset(const ClassicalSatake<T>& c) {
  return {{T(1), c.alpha1, c.alpha2, T(1) / c.alpha1, T(1) / c.alpha2}};
}

/// Traces A = alpha + 1/alpha, B = beta + 1/beta of a normalized pair.
template <Scalar T>
std::pair<T, T> spin_traces(const NormalizedSatake<T>& n) {
  return {n.alpha + T(1) / n.alpha, n.beta + T(1) / n.beta};
}

/// lambda(p) = p^(k-3/2) (A + B),  lambda(p^2) = p^(2k-3) (A^2 + AB + B^2 - 2 - 1/p).
template <HalfPowerScalar T>
std::pair<T, T> eigenvalues_from_normalized(const NormalizedSatake<T>& n, int k) {
  auto [a, b] = spin_traces(n);
  T lp = ScalarTraits<T>::half_pow_p(n.p, 2LL * k - 3) * (a + b);
  T inner = a * a + a * b + b * b - T(2) - ScalarTraits<T>::pow_p(n.p, -1);
  T lp2 = ScalarTraits<T>::pow_p(n.p, 2LL * k - 3) * inner;
  return {lp, lp2};
}

/// Eigenvalues straight from classical parameters; stays on the rational backend because
/// p^(k-3/2) alpha = alpha0 and friends involve only integral powers.
template <Scalar T>
std::pair<T, T> eigenvalues_from_classical(const ClassicalSatake<T>& c) {
  using Tr = ScalarTraits<T>;
  // p^(k-3/2) times alpha, 1/alpha, beta, 1/beta
  T g0 = c.alpha0;
  T g1 = c.alpha0 * c.alpha1 * c.alpha2;
  T g2 = c.alpha0 * c.alpha1;
  T g3 = c.alpha0 * c.alpha2;
  T lp = g0 + g1 + g2 + g3;
  // p^(2k-3) (A^2 + AB + B^2) = (g0+g1)^2 + (g0+g1)(g2+g3) + (g2+g3)^2
  T sa = g0 + g1;
  T sb = g2 + g3;
  T p2k3 = Tr::pow_p(c.p, 2LL * c.k - 3);
  T lp2 = sa * sa + sa * sb + sb * sb - p2k3 * (T(2) + Tr::pow_p(c.p, -1));
  return {lp, lp2};
}

namespace detail {

inline bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// Root of u^2 - A u + 1 = 0 with |u| >= 1, ties broken toward nonnegative imaginary part.
/// sqrt(d), with d inside the tolerance band around 0 (relative to scale^2) snapped to a double root.
inline Complex snapped_sqrt(const Complex& d, double scale, double tol) {
  if (std::abs(d) <= tol * std::max(1.0, scale * scale)) return 0.0;
  return std::sqrt(d);
}

inline Complex canonical_root(const Complex& a, double tol) {
  Complex disc = snapped_sqrt(a * a - 4.0, std::abs(a), tol);
  Complex u1 = (a + disc) / 2.0;
  Complex u2 = (a - disc) / 2.0;
  double m1 = std::abs(u1), m2 = std::abs(u2);
  if (std::abs(m1 - m2) > tol * std::max(1.0, std::max(m1, m2))) return m1 > m2 ? u1 : u2;
  // |u1| = |u2| = 1: conjugate pair on the unit circle, or a double root.
  if (std::abs(u1.imag()) <= tol && std::abs(u2.imag()) <= tol && std::abs(u1 - u2) > 10 * tol)
    fail(ErrorCode::NumericallyDegenerate, "cannot canonicalize Satake root for trace " + ScalarTraits<Complex>::str(a));
  return u1.imag() >= u2.imag() ? u1 : u2;
}

}  // namespace detail

/// Recovers a normalized Satake pair from lambda(p), lambda(p^2) on the floating backend.
/// With s = p^(3/2-k) lambda(p) and v = p^(3-2k) lambda(p^2), the traces {A, B} are the roots
/// of t^2 - s t + (s^2 - v - 2 - 1/p); alpha and beta are roots of u^2 - A u + 1 and
/// u^2 - B u + 1. Choices are canonicalized so that output is reproducible.
inline NormalizedSatake<Complex> from_eigenvalues(const Complex& lambda_p, const Complex& lambda_p2, std::uint64_t p,
                                                  int k, double tol = default_tolerance()) {
  if (!is_prime(p)) fail(ErrorCode::DomainError, std::to_string(p) + " is not prime");
  if (k <= 2) fail(ErrorCode::WeightTooSmall, "weight must exceed 2");
  const double pd = static_cast<double>(p);
  Complex s = lambda_p * std::pow(pd, 1.5 - k);
  Complex v = lambda_p2 * std::pow(pd, 3.0 - 2.0 * k);
  Complex c = s * s - v - 2.0 - 1.0 / pd;
  Complex disc = detail::snapped_sqrt(s * s - 4.0 * c, std::abs(s), tol);
  Complex t1 = (s + disc) / 2.0;
  Complex t2 = (s - disc) / 2.0;
  if (detail::lex_less(t2, t1)) std::swap(t1, t2);
  return {p, detail::canonical_root(t1, tol), detail::canonical_root(t2, tol)};
}

namespace detail {

template <std::size_t N>
std::array<Complex, N> sorted_with_tolerance(const ParamMultiset<Complex, N>& m, double tol) {
  std::array<Complex, N> v = m.values;
  std::sort(v.begin(), v.end(), [tol](const Complex& a, const Complex& b) {
    double scale = std::max({1.0, std::abs(a.real()), std::abs(b.real())});
    if (std::abs(a.real() - b.real()) > tol * scale) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return v;
}

}  // namespace detail

/// True iff some bijection matches the two multisets elementwise.
/// Exact backends: greedy matching under exact equality.
template <ExactScalar T, std::size_t N>
bool satake_equivalent(const ParamMultiset<T, N>& a, const ParamMultiset<T, N>& b, double = 0) {
  std::array<bool, N> used{};
  for (const auto& x : a.values) {
    bool found = false;
    for (std::size_t j = 0; j < N; ++j) {
      if (!used[j] && x == b.values[j]) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Floating backend: sort both by (real, imaginary) and compare pairwise with relative tolerance.
/// A mismatch next to a near-collision (two distinct elements within 10*tol) is reported as
/// NumericallyDegenerate rather than as a confident "false".
template <std::size_t N>
bool satake_equivalent(const ParamMultiset<Complex, N>& a, const ParamMultiset<Complex, N>& b,
                       double tol = default_tolerance()) {
  auto sa = detail::sorted_with_tolerance(a, tol);
  auto sb = detail::sorted_with_tolerance(b, tol);
  bool all = true;
  for (std::size_t i = 0; i < N; ++i) all = all && ScalarTraits<Complex>::equal(sa[i], sb[i], tol);
  if (all) return true;
  auto near_collision = [tol](const std::array<Complex, N>& v) {
    for (std::size_t i = 0; i + 1 < N; ++i) {
      double scale = std::max({1.0, std::abs(v[i]), std::abs(v[i + 1])});
      double d = std::abs(v[i] - v[i + 1]);
      if (d > tol * scale && d <= 10 * tol * scale) return true;
    }
    return false;
  };
  if (near_collision(sa) || near_collision(sb))
    fail(ErrorCode::NumericallyDegenerate, "multiset comparison is ambiguous at tolerance " + format_double(tol));
  return false;
}

/// Lifts an exact multiset to the floating backend.
template <ExactScalar T, std::size_t N>
ParamMultiset<Complex, N> to_complex(const ParamMultiset<T, N>& m) {
  ParamMultiset<Complex, N> out;
  for (std::size_t i = 0; i < N; ++i) out.values[i] = ScalarTraits<T>::to_complex(m.values[i]);
  return out;
}

/// {alpha, 1/alpha, beta, 1/beta} from the traces A, B. On the exact backend the roots
/// (A +- sqrt(A^2 - 4))/2 must be real, so |A|, |B| >= 2 is required there.
inline SpinMultiset<Surd> spin_multiset_from_traces(const Rational& a, const Rational& b) {
  auto roots = [](const Rational& t) {
    Rational d = t * t - 4;
    if (d < 0) fail(ErrorCode::DomainError, "trace " + t.str() + " has non-real Satake roots");
    Surd r = Surd::sqrt(d);
    Surd half(Rational(1, 2));
    return std::pair<Surd, Surd>{half * (Surd(t) + r), half * (Surd(t) - r)};
  };
  auto [a1, a2] = roots(a);
  auto [b1, b2] = roots(b);
  return {{a1, a2, b1, b2}};
}

inline SpinMultiset<Complex> spin_multiset_from_traces(const Complex& a, const Complex& b) {
  auto roots = [](const Complex& t) {
    Complex d = std::sqrt(t * t - 4.0);
    return std::pair<Complex, Complex>{(t + d) / 2.0, (t - d) / 2.0};
  };
  auto [a1, a2] = roots(a);
  auto [b1, b2] = roots(b);
  return {{a1, a2, b1, b2}};
}

}  // namespace gsp4
