#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "gsp4/error.hpp"

namespace gsp4 {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Primes <= n (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

/// (prime, exponent) pairs in increasing prime order. factorize(1) is empty.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::DomainError, "factorize(0)");
  std::vector<std::pair<std::uint64_t, unsigned>> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1u);
  return f;
}

/// If n = p^r for a prime p and r >= 1, returns {p, r}; otherwise {0, 0}.
inline std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n) {
  if (n < 2) return {0, 0};
  auto f = factorize(n);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

inline bool is_squarefree(std::uint64_t n) {
  for (auto [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

/// Writes n = s^2 * m with m squarefree; returns {s, m}.
inline std::pair<std::uint64_t, std::uint64_t> square_split(std::uint64_t n) {
  std::uint64_t s = 1, m = 1;
  for (auto [p, e] : factorize(n)) {
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) m *= p;
  }
  return {s, m};
}

/// Integer power with overflow check.
inline std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) fail(ErrorCode::DomainError, "integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

}  // namespace gsp4
