#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/arith/primes.hpp"
#include "gsp4/arith/rational.hpp"

namespace gsp4 {

/// Exact real element of a multiquadratic field: a finite sum  q_1 sqrt(m_1) + ... + q_r sqrt(m_r)
/// with rational q_i and distinct squarefree radicands m_i >= 1.
///
/// The square roots of distinct squarefree integers are linearly independent over Q, so the
/// sorted term list with no zero coefficients is a canonical form and equality is structural.
/// This is what keeps half-integral powers of p (normalized Satake parameters, n^(1/2) in
/// Dirichlet series) exact.
class Surd {
 public:
  using Term = std::pair<std::uint64_t, Rational>;

  Surd() = default;
  Surd(long long v) : Surd(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& q) {                 // NOLINT(google-explicit-constructor)
    if (q != 0) terms_.emplace_back(1, q);
  }

  /// q * sqrt(m) for any m >= 1 (reduced to squarefree form).
  static Surd root(const Rational& q, std::uint64_t m) {
    if (m == 0) return Surd();
    auto [s, sf] = square_split(m);
    Surd r;
    Rational c = q * Rational(Integer(s));
    if (c != 0) r.terms_.emplace_back(sf, c);
    return r;
  }

  /// sqrt(q) for a rational q >= 0.
  static Surd sqrt(const Rational& q) {
    if (q < 0) fail(ErrorCode::DomainError, "square root of a negative rational is not real");
    if (q == 0) return Surd();
    const Integer& n = boost::multiprecision::numerator(q);
    const Integer& d = boost::multiprecision::denominator(q);
    Integer nd = n * d;
    if (nd > Integer(UINT64_MAX)) fail(ErrorCode::DomainError, "radicand too large for exact square root");
    return root(Rational(Integer(1), d), nd.convert_to<std::uint64_t>());
  }

  /// p^(e/2) for an integer e, exact.
  static Surd half_power(std::uint64_t p, long long twice_exponent) {
    long long q = twice_exponent >= 0 ? twice_exponent / 2 : -((-twice_exponent + 1) / 2);
    bool odd = (twice_exponent - 2 * q) != 0;
    Rational c = rpow(p, q);
    return odd ? root(c, p) : Surd(c);
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1); }

  Rational rational() const {
    if (!is_rational()) fail(ErrorCode::NotExact, "surd " + str() + " is not rational");
    return terms_.empty() ? Rational(0) : terms_[0].second;
  }

  double to_double() const {
    double v = 0;
    for (const auto& [m, q] : terms_) v += gsp4::to_double(q) * std::sqrt(static_cast<double>(m));
    return v;
  }

  Surd operator-() const {
    Surd r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  Surd& operator+=(const Surd& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Rational c = a->second + b->second;
        if (c != 0) out.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  Surd& operator-=(const Surd& o) { return *this += -o; }

  Surd& operator*=(const Surd& o) {
    Surd acc;
    for (const auto& [m1, q1] : terms_) {
      for (const auto& [m2, q2] : o.terms_) {
        std::uint64_t g = std::gcd(m1, m2);
        Surd t;
        t.terms_.emplace_back((m1 / g) * (m2 / g), q1 * q2 * Rational(Integer(g)));
        acc += t;
      }
    }
    terms_ = std::move(acc.terms_);
    return *this;
  }

  Surd& operator*=(const Rational& q) {
    if (q == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= q;
    return *this;
  }

  /// Multiplicative inverse. Rationalizes one prime at a time:
  /// 1/(a + b sqrt(q)) = (a - b sqrt(q)) / (a^2 - q b^2), where a, b do not involve sqrt(q).
  Surd inverse() const {
    if (is_zero()) fail(ErrorCode::DomainError, "inverse of zero");
    if (terms_.size() == 1) {
      const auto& [m, q] = terms_[0];
      // 1/(q sqrt(m)) = sqrt(m) / (q m)
      return root(Rational(1) / (q * Rational(Integer(m))), m);
    }
    std::uint64_t split = 0;
    for (const auto& [m, q] : terms_) {
      if (m > 1) {
        split = factorize(m).front().first;
        break;
      }
    }
    Surd a, b;
    for (const auto& [m, q] : terms_) {
      Surd t;
      if (m % split == 0) {
        t.terms_.emplace_back(m / split, q);
        b += t;
      } else {
        t.terms_.emplace_back(m, q);
        a += t;
      }
    }
    Surd conj = a - b * root(Rational(1), split);
    Surd norm = a * a - b * b * Surd(Rational(Integer(split)));
    return conj * norm.inverse();
  }

  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  /// Human-readable form, e.g. "3/2 + 5*sqrt(2) - 1/3*sqrt(6)". Zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, q] : terms_) {
      Rational c = q;
      if (!first) {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (m == 1) {
        os << c.str();
      } else {
        if (c == -1) os << "-";
        else if (c != 1) os << c.str() << "*";
        os << "sqrt(" << m << ")";
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

 private:
  std::vector<Term> terms_;
};

inline std::string to_string(const Surd& s) { return s.str(); }

}  // namespace gsp4
