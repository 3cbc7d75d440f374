#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gsp4/hecke.hpp"

namespace gsp4 {

/// Guard band for comparing an integer against a transcendental bound.
inline constexpr double kBoundGuard = 1e-12;

struct CoprimePrime {
  std::uint64_t p = 2;
  double bound = 2;     // 2 ln N + 2
  bool within = true;   // p <= bound (up to the guard band)
  bool borderline = false;
};

/// Least prime not dividing N, with the bound 2 ln N + 2 it is known to respect.
inline CoprimePrime smallest_coprime_prime(std::uint64_t level) {
  if (level == 0) fail(ErrorCode::DomainError, "level must be >= 1");
  CoprimePrime r;
  std::uint64_t p = 2;
  while (level % p == 0) {
    do ++p;
    while (!is_prime(p));
  }
  r.p = p;
  r.bound = 2.0 * std::log(static_cast<double>(level)) + 2.0;
  double pd = static_cast<double>(p);
  r.within = pd <= r.bound + kBoundGuard;
  r.borderline = std::abs(pd - r.bound) <= kBoundGuard;
  return r;
}

/// Least i in {1,2,3,4} with lambda_F(p^i) != lambda_G(p^i), compared exactly; nullopt if all agree.
inline std::optional<int> distinguishing_index(const EigenvalueSystem& f, const EigenvalueSystem& g, std::uint64_t p) {
  auto sf = eigen_series(f, p, 4);
  auto sg = eigen_series(g, p, 4);
  for (int i = 1; i <= 4; ++i)
    if (sf[i] != sg[i]) return i;
  return std::nullopt;
}

struct DistinguishReport {
  std::uint64_t level = 1;
  std::uint64_t p = 2;
  std::optional<int> index;
  std::optional<std::uint64_t> n;  // p^index
  double bound = 0;                // (2 ln N + 2)^4
  std::optional<bool> within_bound;
  bool borderline = false;
  /// (lambda_F(p^i), lambda_G(p^i)) for i = 1..4
  std::vector<std::pair<Rational, Rational>> values;
};

/// Picks the smallest prime coprime to N and searches p, p^2, p^3, p^4 for a disagreement.
inline DistinguishReport distinguish_level(const EigenvalueSystem& f, const EigenvalueSystem& g, std::uint64_t level) {
  if (level == 0 || level % f.level() != 0 || level % g.level() != 0)
    fail(ErrorCode::DomainError, "form levels " + std::to_string(f.level()) + ", " + std::to_string(g.level()) +
                                     " must divide N = " + std::to_string(level));
  DistinguishReport r;
  r.level = level;
  auto cp = smallest_coprime_prime(level);
  r.p = cp.p;
  r.bound = std::pow(cp.bound, 4);
  auto sf = eigen_series(f, r.p, 4);
  auto sg = eigen_series(g, r.p, 4);
  for (int i = 1; i <= 4; ++i) r.values.emplace_back(sf[i], sg[i]);
  r.index = distinguishing_index(f, g, r.p);
  if (r.index) {
    r.n = ipow(r.p, static_cast<unsigned>(*r.index));
    double nd = static_cast<double>(*r.n);
    r.within_bound = nd <= r.bound + kBoundGuard;
    r.borderline = std::abs(nd - r.bound) <= kBoundGuard;
  }
  return r;
}

// ---------------------------------------------------------------------------------------------
// Rankin-Selberg coefficients of -L'/L(s, pi_F x pi_G, rho4 x rho4)
// ---------------------------------------------------------------------------------------------

/// Eigenform known through its normalized spin parameters at good primes.
template <Scalar T>
struct SatakeForm {
  int k = 3;
  std::uint64_t level = 1;
  std::map<std::uint64_t, SpinMultiset<T>> params;

  bool is_good(std::uint64_t p) const { return std::gcd(p, level) == 1; }

  const SpinMultiset<T>& at(std::uint64_t p) const {
    if (!is_good(p)) fail(ErrorCode::BadPrime, "p = " + std::to_string(p) + " divides the level");
    auto it = params.find(p);
    if (it == params.end()) fail(ErrorCode::MissingPrime, "no Satake data at p = " + std::to_string(p));
    return it->second;
  }
};

/// Lambda(p^r) = log(p) * coefficient; the coefficient is exact on exact backends.
template <Scalar T>
struct RankinLambda {
  T coefficient;
  std::uint64_t p = 2;
  Complex value() const { return ScalarTraits<T>::to_complex(coefficient) * std::log(static_cast<double>(p)); }
};

/// Lambda_{FxG}(p^r) = log p * (sum_i g_i^r)(sum_j d_j^r).
template <Scalar T>
RankinLambda<T> rankin_lambda(const SpinMultiset<T>& a, const SpinMultiset<T>& b, std::uint64_t p, unsigned r) {
  if (r == 0) fail(ErrorCode::DomainError, "r must be >= 1");
  return {a.power_sum(r) * b.power_sum(r), p};
}

/// Lambda_{FxF}(p) = a_F(p)^2 log p.
template <Scalar T>
RankinLambda<T> lambda_ff_prime_identity(const SpinMultiset<T>& a, std::uint64_t p) {
  T s = a.sum();
  return {s * s, p};
}

/// Lambda_{FxG}(n) for n <= N; zero off prime powers and at primes dividing either level.
struct RankinCoefficients {
  std::uint64_t bound = 0;
  std::vector<double> lambda;  // index n, lambda[0] unused

  double operator[](std::uint64_t n) const { return lambda.at(n); }
};

template <Scalar T>
RankinCoefficients rankin_coefficients(const SatakeForm<T>& f, const SatakeForm<T>& g, std::uint64_t bound) {
  RankinCoefficients rc;
  rc.bound = bound;
  rc.lambda.assign(bound + 1, 0.0);
  for (std::uint64_t p : primes_up_to(bound)) {
    if (!f.is_good(p) || !g.is_good(p)) continue;
    const auto& a = f.at(p);
    const auto& b = g.at(p);
    unsigned r = 1;
    for (std::uint64_t q = p; q <= bound; q *= p, ++r) rc.lambda[q] = rankin_lambda(a, b, p, r).value().real();
  }
  return rc;
}

/// 2 sum_{n < x^2} Lambda(n) n^(-1/2) log(x^2 / n).
inline double weighted_prime_sum(const RankinCoefficients& rc, double x) {
  if (!(x > 1)) fail(ErrorCode::DomainError, "x must exceed 1");
  const double x2 = x * x;
  const double top = std::ceil(x2) - 1;  // largest integer n < x^2
  if (top > static_cast<double>(rc.bound))
    fail(ErrorCode::InsufficientTruncation, "coefficients known to " + std::to_string(rc.bound) + ", need n < " +
                                                format_double(x2));
  double s = 0;
  for (std::uint64_t n = 2; static_cast<double>(n) < x2; ++n) {
    if (rc.lambda[n] == 0.0) continue;
    double nd = static_cast<double>(n);
    s += rc.lambda[n] / std::sqrt(nd) * std::log(x2 / nd);
  }
  return 2 * s;
}

/// 8 (x - 2 + 1/x).
inline double explicit_main_term(double x) {
  if (!(x > 0)) fail(ErrorCode::DomainError, "x must be positive");
  return 8 * (x - 2 + 1 / x);
}

// ---------------------------------------------------------------------------------------------
// Recovering a coefficient disagreement from a Lambda disagreement
// ---------------------------------------------------------------------------------------------

/// a_F(n), n <= N: Dirichlet coefficients of the normalized spin L-function over good primes.
template <Scalar T>
DirichletSeries<T> spin_a_coefficients(const SatakeForm<T>& f, std::uint64_t bound) {
  std::map<std::uint64_t, SeriesPoly<T>> recips;
  for (std::uint64_t p : primes_up_to(bound))
    if (f.is_good(p)) recips.emplace(p, spin_reciprocal_satake(f.at(p), p).reciprocal);
  return euler_expand(recips, bound, MissingPrimePolicy::Trivial);
}

/// lambda~_F(n), n <= N: multiplicative with local series (1 - X^2/p) / spin reciprocal.
template <Scalar T>
DirichletSeries<T> normalized_lambda_coefficients(const SatakeForm<T>& f, std::uint64_t bound) {
  std::map<std::uint64_t, SeriesPoly<T>> local;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (!f.is_good(p)) continue;
    unsigned r = 0;
    for (std::uint64_t q = p; q <= bound; q *= p) ++r;
    local.emplace(p, normalized_eigen_series_local(f.at(p), p, r));
  }
  return DirichletSeries<T>::generate(bound, [&](std::uint64_t n) {
    T v(1);
    if (n == 1) return v;
    for (auto [p, e] : factorize(n)) {
      auto it = local.find(p);
      if (it == local.end()) return T(0);
      v *= it->second[e];
    }
    return v;
  });
}

template <Scalar T>
struct CoefficientDisagreement {
  std::uint64_t n = 1;
  T a_f, a_g;                  // a_F(n) != a_G(n)
  T lambda_f, lambda_g;        // normalized eigenvalues, also distinct
  bool second_case = false;    // n = p^r with p <= floor(sqrt(A))
};

/// Returned when a_F(n) = a_G(n) for all n <= A: the primes at which equal (a(p), a(p^2))
/// was upgraded to equality of Satake multisets, and the larger primes where a(p) agreed.
struct EquivalenceCertificate {
  std::uint64_t bound = 0;
  std::uint64_t sqrt_bound = 0;
  std::vector<std::uint64_t> satake_equivalent_primes;
  std::vector<std::uint64_t> large_primes_checked;
};

template <Scalar T>
using DisagreementResult = std::variant<CoefficientDisagreement<T>, EquivalenceCertificate>;

inline std::uint64_t isqrt(std::uint64_t a) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(a)));
  while (r * r > a) --r;
  while ((r + 1) * (r + 1) <= a) ++r;
  return r;
}

/// Least n <= A with a_F(n) != a_G(n), with the normalized-eigenvalue witness; or, if none, a
/// certificate that the Satake parameters agree at every prime <= floor(sqrt(A)).
template <Scalar T>
DisagreementResult<T> first_coefficient_disagreement(const SatakeForm<T>& f, const SatakeForm<T>& g, std::uint64_t bound,
                                                     double tol = default_tolerance()) {
  if (bound == 0) fail(ErrorCode::DomainError, "A must be >= 1");
  using Tr = ScalarTraits<T>;
  const std::uint64_t root = isqrt(bound);
  if (bound == 1) return EquivalenceCertificate{bound, root, {}, {}};
  auto af = spin_a_coefficients(f, bound);
  auto ag = spin_a_coefficients(g, bound);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (Tr::equal(af[n], ag[n], tol)) continue;
    auto lf = normalized_lambda_coefficients(f, bound);
    auto lg = normalized_lambda_coefficients(g, bound);
    auto pp = prime_power(n);
    bool second = pp.first != 0 && pp.first <= root;
    return CoefficientDisagreement<T>{n, af[n], ag[n], lf[n], lg[n], second};
  }
  EquivalenceCertificate cert{bound, root, {}, {}};
  for (std::uint64_t p : primes_up_to(bound)) {
    if (!f.is_good(p) || !g.is_good(p)) continue;
    if (p <= root) {
      if (!satake_equivalent(f.at(p), g.at(p), tol))
        fail(ErrorCode::InvariantError, "a(p), a(p^2) agree at p = " + std::to_string(p) + " but Satake multisets differ");
      cert.satake_equivalent_primes.push_back(p);
    } else {
      cert.large_primes_checked.push_back(p);
    }
  }
  return cert;
}

}  // namespace gsp4
