#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsp4/arith/series.hpp"
#include "gsp4/satake.hpp"

namespace gsp4 {

/// Which variable the local factor is written in.
///   Arithmetic: X = p^-s for L(s, F, spin) (coefficients carry p^(2k-3) etc.)
///   Analytic:   X = p^-s for L(s, pi_F, rho) = L(s + k - 3/2, F, spin); unitary-normalized.
enum class Normalization { Arithmetic, Analytic };

inline const char* normalization_name(Normalization n) {
  return n == Normalization::Arithmetic ? "arithmetic" : "analytic";
}

/// Reciprocal of a local L-factor, i.e. the denominator polynomial in X = p^-s.
template <Scalar T>
struct LocalFactor {
  std::uint64_t p = 2;
  SeriesPoly<T> reciprocal;
  int degree = 0;
  Normalization normalization = Normalization::Analytic;

  /// The local L-factor itself, expanded to the given order.
  SeriesPoly<T> expand(std::size_t order) const { return series_invert(reciprocal.with_order(order)); }
};

/// prod_i (1 - g_i X) as an exact polynomial.
template <Scalar T>
SeriesPoly<T> product_of_linear(std::span<const T> params) {
  auto poly = SeriesPoly<T>::polynomial({T(1)});
  for (const auto& g : params) poly = poly * SeriesPoly<T>::polynomial({T(1), -g});
  return poly;
}

template <Scalar T>
LocalFactor<T> spin_reciprocal_satake(const SpinMultiset<T>& m, std::uint64_t p) {
  return {p, product_of_linear<T>(m.values), 4, Normalization::Analytic};
}

/// Reciprocal from the traces: (1 - A X + X^2)(1 - B X + X^2). Equal to spin_reciprocal_satake
/// of {alpha, 1/alpha, beta, 1/beta} but needs no square roots, so it stays exact when the
/// individual Satake roots are not real (e.g. unitary elliptic parameters).
template <Scalar T>
LocalFactor<T> spin_reciprocal_traces(const T& a, const T& b, std::uint64_t p) {
  auto fa = SeriesPoly<T>::polynomial({T(1), -a, T(1)});
  auto fb = SeriesPoly<T>::polynomial({T(1), -b, T(1)});
  return {p, fa * fb, 4, Normalization::Analytic};
}

/// 1 - l1 X + (l1^2 - l2 - p^(2k-4)) X^2 - l1 p^(2k-3) X^3 + p^(4k-6) X^4, with l1 = lambda(p),
/// l2 = lambda(p^2).
template <Scalar T>
LocalFactor<T> spin_reciprocal_eigen(const T& lambda_p, const T& lambda_p2, std::uint64_t p, int k) {
  using Tr = ScalarTraits<T>;
  if (k <= 2) fail(ErrorCode::WeightTooSmall, "weight must exceed 2");
  std::vector<T> c(5);
  c[0] = T(1);
  c[1] = -lambda_p;
  c[2] = lambda_p * lambda_p - lambda_p2 - Tr::pow_p(p, 2LL * k - 4);
  c[3] = -(lambda_p * Tr::pow_p(p, 2LL * k - 3));
  c[4] = Tr::pow_p(p, 4LL * k - 6);
  return {p, SeriesPoly<T>::polynomial(std::move(c)), 4, Normalization::Arithmetic};
}

/// Switch a spin factor between normalizations: X^r coefficient times p^(+-r(k-3/2)).
template <HalfPowerScalar T>
LocalFactor<T> renormalize(const LocalFactor<T>& f, int k, Normalization target) {
  if (f.normalization == target) return f;
  // analytic -> arithmetic multiplies by p^(r(k-3/2)), the reverse divides.
  long long sign = target == Normalization::Arithmetic ? 1 : -1;
  std::vector<T> c = f.reciprocal.coefficients();
  for (std::size_t r = 0; r < c.size(); ++r)
    c[r] = ScalarTraits<T>::half_pow_p(f.p, sign * static_cast<long long>(r) * (2LL * k - 3)) * c[r];
  auto poly = f.reciprocal.is_polynomial() ? SeriesPoly<T>::polynomial(std::move(c))
                                           : SeriesPoly<T>::truncated_series(std::move(c), f.reciprocal.order());
  return {f.p, std::move(poly), f.degree, target};
}

template <Scalar T>
LocalFactor<T> std_reciprocal(const StdMultiset<T>& m, std::uint64_t p) {
  return {p, product_of_linear<T>(m.values), 5, Normalization::Analytic};
}

/// Standard reciprocal read off an analytic spin reciprocal 1 + c1 X + c2 X^2 + ...: with spin
/// traces A, B one has AB = c2 - 2 and A^2 + B^2 = c1^2 - 2AB, and the standard parameters
/// {1, (ab)^+-1, (a/b)^+-1} have traces summing to AB with product A^2 + B^2 - 4. Exact whenever
/// the eigenvalues are, with no root extraction.
template <Scalar T>
LocalFactor<T> std_reciprocal_from_spin(const LocalFactor<T>& spin) {
  if (spin.normalization != Normalization::Analytic || spin.degree != 4)
    fail(ErrorCode::KindMismatch, "expected an analytic spin factor");
  const auto& c = spin.reciprocal;
  T s = c[2] - T(2);
  T prod = c[1] * c[1] - T(2) * s - T(4);
  auto quartic = SeriesPoly<T>::polynomial({T(1), -s, T(2) + prod, -s, T(1)});
  auto linear = SeriesPoly<T>::polynomial({T(1), T(-1)});
  return {spin.p, linear * quartic, 5, Normalization::Analytic};
}

/// prod_{i,j} (1 - a_i b_j X) over two multisets of the same size (4 or 5).
template <Scalar T>
LocalFactor<T> rankin_reciprocal(std::span<const T> a, std::span<const T> b, std::uint64_t p) {
  if (a.size() != b.size() || (a.size() != 4 && a.size() != 5))
    fail(ErrorCode::KindMismatch, "Rankin-Selberg factor needs two spin (4) or two standard (5) multisets, got " +
                                      std::to_string(a.size()) + " and " + std::to_string(b.size()));
  std::vector<T> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) prods.push_back(x * y);
  return {p, product_of_linear<T>(prods), static_cast<int>(prods.size()), Normalization::Analytic};
}

template <Scalar T, std::size_t N>
LocalFactor<T> rankin_reciprocal(const ParamMultiset<T, N>& a, const ParamMultiset<T, N>& b, std::uint64_t p) {
  return rankin_reciprocal<T>(std::span<const T>(a.values), std::span<const T>(b.values), p);
}

/// Local eigenvalue series sum_r lambda(p^r) X^r = (1 - p^(2k-4) X^2) / spin_reciprocal_eigen.
template <Scalar T>
SeriesPoly<T> eigen_series_local(const T& lambda_p, const T& lambda_p2, std::uint64_t p, int k, std::size_t order) {
  auto recip = spin_reciprocal_eigen(lambda_p, lambda_p2, p, k);
  auto num = SeriesPoly<T>::polynomial({T(1), T(0), -ScalarTraits<T>::pow_p(p, 2LL * k - 4)}).with_order(order);
  return num * recip.expand(order);
}

/// Normalized eigenvalue series sum_r lambda~(p^r) X^r = (1 - X^2/p) / spin_reciprocal_satake.
template <Scalar T>
SeriesPoly<T> normalized_eigen_series_local(const SpinMultiset<T>& m, std::uint64_t p, std::size_t order) {
  auto num = SeriesPoly<T>::polynomial({T(1), T(0), -ScalarTraits<T>::pow_p(p, -1)}).with_order(order);
  return num * spin_reciprocal_satake(m, p).expand(order);
}

/// Same series from the traces A, B.
template <Scalar T>
SeriesPoly<T> normalized_eigen_series_traces(const T& a, const T& b, std::uint64_t p, std::size_t order) {
  auto num = SeriesPoly<T>::polynomial({T(1), T(0), -ScalarTraits<T>::pow_p(p, -1)}).with_order(order);
  return num * spin_reciprocal_traces(a, b, p).expand(order);
}

}  // namespace gsp4
