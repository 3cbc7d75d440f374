#pragma once

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "gsp4/hecke.hpp"

namespace gsp4 {

/// Level-one elliptic Hecke eigenform of weight w, known through lambda_f(1..N).
/// Stores both the raw eigenvalues and the unitary normalization a_f(n) = lambda_f(n) n^((1-w)/2).
class EllipticEigenform {
 public:
  EllipticEigenform(int weight, std::vector<Rational> raw)  // raw[0] = lambda_f(1)
      : weight_(weight) {
    if (weight_ < 12 || weight_ % 2 != 0)
      fail(ErrorCode::DomainError, "elliptic weight must be even and >= 12, got " + std::to_string(weight_));
    if (raw.empty()) fail(ErrorCode::DomainError, "no coefficients");
    raw_ = DirichletSeries<Rational>::from_values(raw);
    if (raw_[1] != 1) fail(ErrorCode::InvariantError, "lambda_f(1) must be 1");
    const std::uint64_t n_max = raw_.bound();
    for (std::uint64_t m = 2; m <= n_max; ++m)
      for (std::uint64_t n = m + 1; m * n <= n_max; ++n)
        if (std::gcd(m, n) == 1 && raw_[m * n] != raw_[m] * raw_[n])
          fail(ErrorCode::InvariantError, "lambda_f not multiplicative at " + std::to_string(m) + " * " + std::to_string(n));
    normalized_ = DirichletSeries<Surd>(n_max);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      Surd v(raw_[n]);
      for (auto [p, e] : factorize(n)) v *= Surd::half_power(p, static_cast<long long>(e) * (1 - weight_));
      normalized_[n] = v;
    }
  }

  int weight() const noexcept { return weight_; }
  std::uint64_t bound() const noexcept { return raw_.bound(); }
  const DirichletSeries<Rational>& raw() const noexcept { return raw_; }
  const DirichletSeries<Surd>& normalized() const noexcept { return normalized_; }

  const Rational& lambda(std::uint64_t n) const { return raw_[n]; }
  const Surd& a(std::uint64_t n) const { return normalized_[n]; }

 private:
  int weight_;
  DirichletSeries<Rational> raw_;
  DirichletSeries<Surd> normalized_;
};

/// Jacobi symbol (a/n) for odd n > 0.
inline int jacobi(long long a, long long n) {
  if (n <= 0 || n % 2 == 0) fail(ErrorCode::DomainError, "Jacobi symbol needs odd positive modulus");
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

/// Kronecker symbol (d/n) for n >= 1.
inline int kronecker(long long d, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::DomainError, "Kronecker symbol at n = 0");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (d % 2 == 0) return 0;
    long long r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(d, static_cast<long long>(n));
}

inline bool is_fundamental_discriminant(long long d) {
  if (d == 1) return true;
  if (d == 0) return false;
  long long m4 = ((d % 4) + 4) % 4;
  std::uint64_t mag = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (m4 == 1) return is_squarefree(mag);
  if (m4 != 0) return false;
  long long m = d / 4;
  long long mm4 = ((m % 4) + 4) % 4;
  if (mm4 != 2 && mm4 != 3) return false;
  return is_squarefree(mag / 4);
}

/// Primitive quadratic character n -> (d/n) for a fundamental discriminant d (d = 1 is trivial).
class QuadChar {
 public:
  explicit QuadChar(long long d) : d_(d) {
    if (!is_fundamental_discriminant(d))
      fail(ErrorCode::NonFundamentalDiscriminant, std::to_string(d) + " is not a fundamental discriminant");
  }
  long long discriminant() const noexcept { return d_; }
  std::uint64_t conductor() const noexcept { return static_cast<std::uint64_t>(d_ < 0 ? -d_ : d_); }
  int operator()(std::uint64_t n) const { return kronecker(d_, n); }

 private:
  long long d_;
};

/// Membership in the set of d with omega*d > 0 and d = v^2 mod 4M for some v coprime to 4M.
/// M is the caller's choice; nothing here picks one.
inline bool in_d_omega(long long d, int omega, std::uint64_t m) {
  if (omega != 1 && omega != -1) fail(ErrorCode::DomainError, "root number must be +-1");
  if (m == 0) fail(ErrorCode::DomainError, "M must be >= 1");
  if (static_cast<long long>(omega) * d <= 0) return false;
  const long long mod = 4 * static_cast<long long>(m);
  long long target = ((d % mod) + mod) % mod;
  for (long long v = 1; v < mod; ++v)
    if (std::gcd(v, mod) == 1 && (v * v) % mod == target) return true;
  return false;
}

inline void check_lift_weight(const EllipticEigenform& f, int k) {
  if (f.weight() != 2 * k - 2)
    fail(ErrorCode::WeightMismatch, "elliptic weight " + std::to_string(f.weight()) + " does not match 2k-2 = " +
                                        std::to_string(2 * k - 2));
}

/// lambda_{F_f}(p) = p^(k-1) + p^(k-2) + lambda_f(p).
inline Rational sk_eigenvalue(const EllipticEigenform& f, int k, std::uint64_t p) {
  check_lift_weight(f, k);
  if (!is_prime(p)) fail(ErrorCode::DomainError, std::to_string(p) + " is not prime");
  return rpow(p, k - 1) + rpow(p, k - 2) + f.lambda(p);
}

/// Analytic spin reciprocal of the lift at p: (1 - p^(1/2) X)(1 - p^(-1/2) X)(1 - a_f(p) X + X^2),
/// i.e. traces A = p^(1/2) + p^(-1/2) and B = a_f(p).
inline LocalFactor<Surd> sk_local_factor(const EllipticEigenform& f, std::uint64_t p) {
  Surd a = Surd::half_power(p, 1) + Surd::half_power(p, -1);
  return spin_reciprocal_traces(a, f.a(p), p);
}

/// Lift traces {A, B} at p.
inline std::pair<Surd, Surd> sk_traces(const EllipticEigenform& f, std::uint64_t p) {
  return {Surd::half_power(p, 1) + Surd::half_power(p, -1), f.a(p)};
}

inline void check_bound(const EllipticEigenform& f, std::uint64_t bound) {
  if (bound == 0 || bound > f.bound())
    fail(ErrorCode::InsufficientTruncation, "requested N = " + std::to_string(bound) + " but the form is known to n <= " +
                                                std::to_string(f.bound()));
}

/// a-coefficients of L(s, pi_{F_f}, rho_4) = zeta(s+1/2) zeta(s-1/2) L(s, pi_f) up to N.
inline DirichletSeries<Surd> sk_spin_coefficients(const EllipticEigenform& f, std::uint64_t bound) {
  check_bound(f, bound);
  auto shift_minus = DirichletSeries<Surd>::generate(bound, [](std::uint64_t n) { return Surd::root(Rational(1, n), n); });
  auto shift_plus = DirichletSeries<Surd>::generate(bound, [](std::uint64_t n) { return Surd::root(Rational(1), n); });
  auto af = DirichletSeries<Surd>::generate(bound, [&](std::uint64_t n) { return f.a(n); });
  return dirichlet_convolve(dirichlet_convolve(shift_minus, shift_plus), af);
}

/// Coefficients of L(s+1/2, chi) L(s-1/2, chi) L(s, pi_f x chi) up to N.
inline DirichletSeries<Surd> sk_twisted_coefficients(const EllipticEigenform& f, const QuadChar& chi,
                                                     std::uint64_t bound) {
  check_bound(f, bound);
  auto shift_minus = DirichletSeries<Surd>::generate(bound, [&](std::uint64_t n) {
    return Surd::root(Rational(chi(n), static_cast<long long>(n)), n);
  });
  auto shift_plus = DirichletSeries<Surd>::generate(bound, [&](std::uint64_t n) { return Surd::root(Rational(chi(n)), n); });
  auto af = DirichletSeries<Surd>::generate(bound, [&](std::uint64_t n) {
    Surd v = f.a(n);
    v *= Rational(chi(n));
    return v;
  });
  return dirichlet_convolve(dirichlet_convolve(shift_minus, shift_plus), af);
}

/// lambda(p), lambda(p^2) of the lift at every prime <= max_prime, read off the arithmetic
/// spin factor of the lift.
inline EigenvalueSystem sk_lift_system(const EllipticEigenform& f, int k, std::uint64_t max_prime) {
  check_lift_weight(f, k);
  check_bound(f, max_prime);
  std::map<std::uint64_t, EigenvalueSystem::PrimeData> data;
  for (std::uint64_t p : primes_up_to(max_prime)) {
    auto arith = renormalize(sk_local_factor(f, p), k, Normalization::Arithmetic);
    auto num = SeriesPoly<Surd>::polynomial({Surd(1), Surd(0), -Surd(rpow(p, 2LL * k - 4))}).with_order(2);
    auto series = num * arith.expand(2);
    data[p] = {series[1].rational(), series[2].rational(), {}};
  }
  return EigenvalueSystem(k, 1, std::move(data));
}

/// dim S_w(SL2(Z)): 0 for w < 12 or w = 14, else floor(w/12) - [w = 2 mod 12].
inline long long dim_cusp_forms_level1(long long w) {
  if (w < 0 || w % 2 != 0) return 0;
  if (w < 12 || w == 14) return 0;
  return w / 12 - (w % 12 == 2 ? 1 : 0);
}

/// Dimension of the Saito-Kurokawa subspace in weight k: dim S_{2k-2}(SL2(Z)).
inline long long dim_sk(int k) {
  if (k % 2 != 0) fail(ErrorCode::OddWeight, "Saito-Kurokawa lifts exist only in even weight, got " + std::to_string(k));
  if (k < 4) fail(ErrorCode::DomainError, "weight must be >= 4");
  return dim_cusp_forms_level1(2LL * k - 2);
}

/// Tr T(2) on the lift space = dim_sk(k) (2^(k-1) + 2^(k-2)) + Tr T_{2k-2}(2).
inline Rational sk_trace_relation(int k, const Rational& trace_elliptic_2) {
  long long m = dim_sk(k);
  return Rational(m) * (rpow(2, k - 1) + rpow(2, k - 2)) + trace_elliptic_2;
}

}  // namespace gsp4
