#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "gsp4/arith/dirichlet.hpp"
#include "gsp4/euler.hpp"

namespace gsp4 {

/// Hecke eigenvalues lambda(p), lambda(p^2) of a weight-k eigenform at good primes.
/// Immutable once constructed; every stored prime is coprime to the level.
class EigenvalueSystem {
 public:
  struct PrimeData {
    Rational lambda_p;
    Rational lambda_p2;
    /// Optional tabulated lambda(p^r), r >= 3, kept only to be cross-checked.
    std::map<unsigned, Rational> tabulated;
  };

  EigenvalueSystem(int k, std::uint64_t level, std::map<std::uint64_t, PrimeData> data)
      : k_(k), level_(level), data_(std::move(data)) {
    if (k_ <= 2) fail(ErrorCode::WeightTooSmall, "weight " + std::to_string(k_) + " must exceed 2");
    if (level_ == 0) fail(ErrorCode::DomainError, "level must be >= 1");
    for (const auto& [p, d] : data_) {
      if (!is_prime(p)) fail(ErrorCode::InvariantError, std::to_string(p) + " is not prime");
      if (std::gcd(p, level_) != 1)
        fail(ErrorCode::InvariantError, "prime " + std::to_string(p) + " divides level " + std::to_string(level_));
    }
  }

  int weight() const noexcept { return k_; }
  std::uint64_t level() const noexcept { return level_; }
  const std::map<std::uint64_t, PrimeData>& data() const noexcept { return data_; }
  bool has_prime(std::uint64_t p) const { return data_.count(p) != 0; }

  const PrimeData& at(std::uint64_t p) const {
    if (std::gcd(p, level_) != 1)
      fail(ErrorCode::BadPrime, "p = " + std::to_string(p) + " divides level " + std::to_string(level_));
    auto it = data_.find(p);
    if (it == data_.end()) fail(ErrorCode::UnknownPrime, "no eigenvalue data at p = " + std::to_string(p));
    return it->second;
  }

 private:
  int k_;
  std::uint64_t level_;
  std::map<std::uint64_t, PrimeData> data_;
};

/// lambda(p^3) = 2 l1 l2 - l1^3 + l1 (p^(2k-3) + p^(2k-4)).
inline Rational lambda_p3(const EigenvalueSystem& sys, std::uint64_t p) {
  const auto& d = sys.at(p);
  const int k = sys.weight();
  const Rational& l1 = d.lambda_p;
  const Rational& l2 = d.lambda_p2;
  return 2 * l1 * l2 - l1 * l1 * l1 + l1 * (rpow(p, 2LL * k - 3) + rpow(p, 2LL * k - 4));
}

/// lambda(p^4) = -l1^4 + l1^2 l2 + l2^2 + l1^2 p^(2k-4) + l2 p^(2k-4) + 2 l1^2 p^(2k-3) - p^(4k-6).
inline Rational lambda_p4(const EigenvalueSystem& sys, std::uint64_t p) {
  const auto& d = sys.at(p);
  const int k = sys.weight();
  const Rational& l1 = d.lambda_p;
  const Rational& l2 = d.lambda_p2;
  Rational l1sq = l1 * l1;
  Rational p2k4 = rpow(p, 2LL * k - 4);
  return -l1sq * l1sq + l1sq * l2 + l2 * l2 + l1sq * p2k4 + l2 * p2k4 + 2 * l1sq * rpow(p, 2LL * k - 3) -
         rpow(p, 4LL * k - 6);
}

/// sum_{r <= order} lambda(p^r) X^r by series expansion.
inline SeriesPoly<Rational> eigen_series(const EigenvalueSystem& sys, std::uint64_t p, std::size_t order) {
  const auto& d = sys.at(p);
  return eigen_series_local(d.lambda_p, d.lambda_p2, p, sys.weight(), order);
}

/// lambda(p^r) as coefficient r of the local eigenvalue series.
inline Rational lambda_prime_power(const EigenvalueSystem& sys, std::uint64_t p, unsigned r) {
  return eigen_series(sys, p, r)[r];
}

/// lambda(p^r) by the recursion route: stored values for r <= 2, the closed forms for r = 3, 4,
/// then the linear recurrence  sum_{i=0..4} c_i lambda(p^(r-i)) = 0  for r >= 5, where c_i are
/// the coefficients of the arithmetic spin reciprocal. With use_tabulated, stored lambda(p^3),
/// lambda(p^4) seed the recurrence in place of the closed forms.
inline std::vector<Rational> lambda_prime_powers_recursive(const EigenvalueSystem& sys, std::uint64_t p,
                                                           unsigned max_power, bool use_tabulated = false) {
  const auto& d = sys.at(p);
  auto seed = [&](unsigned r, Rational closed) {
    if (use_tabulated) {
      auto it = d.tabulated.find(r);
      if (it != d.tabulated.end()) return it->second;
    }
    return closed;
  };
  std::vector<Rational> v;
  v.push_back(1);
  if (max_power >= 1) v.push_back(d.lambda_p);
  if (max_power >= 2) v.push_back(d.lambda_p2);
  if (max_power >= 3) v.push_back(seed(3, lambda_p3(sys, p)));
  if (max_power >= 4) v.push_back(seed(4, lambda_p4(sys, p)));
  if (max_power >= 5) {
    auto c = spin_reciprocal_eigen(d.lambda_p, d.lambda_p2, p, sys.weight()).reciprocal;
    for (unsigned r = 5; r <= max_power; ++r) {
      Rational acc = 0;
      for (unsigned i = 1; i <= 4; ++i) acc += c[i] * v[r - i];
      v.push_back(-acc);
    }
  }
  return v;
}

/// lambda(n) = prod_p lambda(p^v_p(n)).
inline Rational lambda_n(const EigenvalueSystem& sys, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::DomainError, "n must be >= 1");
  if (std::gcd(n, sys.level()) != 1)
    fail(ErrorCode::BadPrime, "gcd(" + std::to_string(n) + ", " + std::to_string(sys.level()) + ") > 1");
  Rational v = 1;
  for (auto [p, e] : factorize(n)) v *= lambda_prime_power(sys, p, e);
  return v;
}

/// lambda~(n) = n^(3/2-k) lambda(n), exact with half-integral powers.
inline Surd normalized_lambda_n(const EigenvalueSystem& sys, std::uint64_t n) {
  Surd v(lambda_n(sys, n));
  for (auto [p, e] : factorize(n)) v *= Surd::half_power(p, static_cast<long long>(e) * (3 - 2LL * sys.weight()));
  return v;
}

/// Analytic spin reciprocal at p built from the stored eigenvalues.
inline LocalFactor<Surd> analytic_spin_factor(const EigenvalueSystem& sys, std::uint64_t p) {
  const auto& d = sys.at(p);
  auto arith = spin_reciprocal_eigen(Surd(d.lambda_p), Surd(d.lambda_p2), p, sys.weight());
  return renormalize(arith, sys.weight(), Normalization::Analytic);
}

/// a_F(n): coefficients of the normalized spin L-function, restricted to good primes.
inline DirichletSeries<Surd> a_coefficients(const EigenvalueSystem& sys, std::uint64_t bound) {
  std::map<std::uint64_t, SeriesPoly<Surd>> recips;
  for (std::uint64_t p : primes_up_to(bound)) {
    if (std::gcd(p, sys.level()) != 1) continue;
    if (!sys.has_prime(p)) fail(ErrorCode::MissingPrime, "no eigenvalue data at p = " + std::to_string(p));
    recips.emplace(p, analytic_spin_factor(sys, p).reciprocal);
  }
  return euler_expand(recips, bound, MissingPrimePolicy::Trivial);
}

enum class Lemma14Status { HoldsPaperBound, HoldsWeakBound, Violates };

inline const char* lemma14_name(Lemma14Status s) {
  switch (s) {
    case Lemma14Status::HoldsPaperBound: return "holds_paper_bound";
    case Lemma14Status::HoldsWeakBound: return "holds_weak_bound";
    case Lemma14Status::Violates: return "violates";
  }
  return "?";
}

/// |lambda(p^2)| against the candidate bounds for an eigenform with lambda(p) = 0.
///   stated:     p^(2k-2) + 2 p^(2k-4)
///   weak:       p^(2k-2) + p^(2k-3) + p^(2k-4)   (what 1 <= |alpha| < sqrt(p) gives directly)
///   transposed: 2 p^(2k-2) + p^(2k-4)            (the form used inside the weight argument)
struct Lemma14Report {
  Lemma14Status status;
  Rational abs_lambda_p2;
  Rational stated_bound, weak_bound, transposed_bound;
  bool within_stated, within_weak, within_transposed;
};

inline Lemma14Report lemma14_check(const Rational& lambda_p2, std::uint64_t p, int k) {
  Lemma14Report r;
  r.abs_lambda_p2 = lambda_p2 < 0 ? Rational(-lambda_p2) : lambda_p2;
  r.stated_bound = rpow(p, 2LL * k - 2) + 2 * rpow(p, 2LL * k - 4);
  r.weak_bound = rpow(p, 2LL * k - 2) + rpow(p, 2LL * k - 3) + rpow(p, 2LL * k - 4);
  r.transposed_bound = 2 * rpow(p, 2LL * k - 2) + rpow(p, 2LL * k - 4);
  r.within_stated = r.abs_lambda_p2 < r.stated_bound;
  r.within_weak = r.abs_lambda_p2 < r.weak_bound;
  r.within_transposed = r.abs_lambda_p2 < r.transposed_bound;
  r.status = r.within_stated ? Lemma14Status::HoldsPaperBound
                             : (r.within_weak ? Lemma14Status::HoldsWeakBound : Lemma14Status::Violates);
  return r;
}

}  // namespace gsp4
