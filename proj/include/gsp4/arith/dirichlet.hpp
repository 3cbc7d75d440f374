#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/arith/primes.hpp"
#include "gsp4/arith/series.hpp"

namespace gsp4 {

/// Coefficients a(1..N) of a Dirichlet series sum a(n) n^(-s). Indexing starts at 1.
template <Scalar T>
class DirichletSeries {
 public:
  DirichletSeries() = default;

  /// All-zero series truncated at N.
  explicit DirichletSeries(std::uint64_t bound) : coeffs_(bound + 1, T(0)) {
    if (bound == 0) fail(ErrorCode::DomainError, "Dirichlet series bound must be >= 1");
  }

  /// Series from a(1), ..., a(N).
  static DirichletSeries from_values(const std::vector<T>& values) {
    DirichletSeries d(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) d.coeffs_[i + 1] = values[i];
    return d;
  }

  template <class F>
  static DirichletSeries generate(std::uint64_t bound, F&& f) {
    DirichletSeries d(bound);
    for (std::uint64_t n = 1; n <= bound; ++n) d.coeffs_[n] = f(n);
    return d;
  }

  static DirichletSeries delta(std::uint64_t bound) {
    DirichletSeries d(bound);
    d.coeffs_[1] = T(1);
    return d;
  }

  std::uint64_t bound() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  const T& operator[](std::uint64_t n) const {
    check_index(n);
    return coeffs_[n];
  }
  T& operator[](std::uint64_t n) {
    check_index(n);
    return coeffs_[n];
  }

  bool equals(const DirichletSeries& o, double tol = default_tolerance()) const {
    if (bound() != o.bound()) return false;
    for (std::uint64_t n = 1; n <= bound(); ++n)
      if (!ScalarTraits<T>::equal(coeffs_[n], o.coeffs_[n], tol)) return false;
    return true;
  }

 private:
  void check_index(std::uint64_t n) const {
    if (n == 0) fail(ErrorCode::DomainError, "Dirichlet coefficients are indexed from n = 1");
    if (n > bound()) fail(ErrorCode::TruncationMismatch, "n = " + std::to_string(n) + " beyond bound " + std::to_string(bound()));
  }

  std::vector<T> coeffs_;
};

/// c(n) = sum_{d | n} a(d) b(n/d) for n <= N.
template <Scalar T>
DirichletSeries<T> dirichlet_convolve(const DirichletSeries<T>& a, const DirichletSeries<T>& b) {
  if (a.bound() != b.bound())
    fail(ErrorCode::TruncationMismatch,
         "Dirichlet bounds differ: " + std::to_string(a.bound()) + " vs " + std::to_string(b.bound()));
  const std::uint64_t n_max = a.bound();
  DirichletSeries<T> c(n_max);
  for (std::uint64_t d = 1; d <= n_max; ++d) {
    if (ScalarTraits<T>::is_zero(a[d], 0.0)) continue;
    for (std::uint64_t m = 1; d * m <= n_max; ++m) c[d * m] += a[d] * b[m];
  }
  return c;
}

/// Pointwise product, e.g. twisting by a character.
template <Scalar T>
DirichletSeries<T> pointwise(const DirichletSeries<T>& a, const DirichletSeries<T>& b) {
  if (a.bound() != b.bound()) fail(ErrorCode::TruncationMismatch, "Dirichlet bounds differ");
  DirichletSeries<T> c(a.bound());
  for (std::uint64_t n = 1; n <= a.bound(); ++n) c[n] = a[n] * b[n];
  return c;
}

/// What euler_expand does with a prime <= N that has no supplied factor.
enum class MissingPrimePolicy {
  Error,    ///< raise MissingPrime
  Trivial,  ///< treat the local factor as 1 (coefficients at its multiples vanish)
};

/// Dirichlet coefficients of prod_p R_p(p^-s)^(-1) up to N, where R_p are the supplied
/// reciprocal local factors. The result is multiplicative by construction.
template <Scalar T>
DirichletSeries<T> euler_expand(const std::map<std::uint64_t, SeriesPoly<T>>& reciprocals, std::uint64_t bound,
                                MissingPrimePolicy policy = MissingPrimePolicy::Error) {
  // Local expansions 1/R_p to order floor(log_p N).
  std::map<std::uint64_t, SeriesPoly<T>> local;
  for (std::uint64_t p : primes_up_to(bound)) {
    unsigned r = 0;
    for (std::uint64_t q = p; q <= bound; q *= p) ++r;
    auto it = reciprocals.find(p);
    if (it == reciprocals.end()) {
      if (policy == MissingPrimePolicy::Error)
        fail(ErrorCode::MissingPrime, "no local factor supplied at p = " + std::to_string(p));
      continue;
    }
    local.emplace(p, series_invert(it->second.with_order(r)));
  }
  DirichletSeries<T> out(bound);
  out[1] = T(1);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    T v(1);
    for (auto [p, e] : factorize(n)) {
      auto it = local.find(p);
      if (it == local.end()) {
        v = T(0);
        break;
      }
      v *= it->second[e];
    }
    out[n] = v;
  }
  return out;
}

}  // namespace gsp4
