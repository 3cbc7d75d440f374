#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "gsp4/error.hpp"

namespace gsp4 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
/// Exact rational. GMP keeps it canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) fail(ErrorCode::DomainError, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// p^e for any integer e, exact.
inline Rational rpow(std::uint64_t p, long long e) {
  Integer base(p);
  Integer mag = boost::multiprecision::pow(base, static_cast<unsigned>(e < 0 ? -e : e));
  if (e >= 0) return Rational(mag);
  return Rational(Integer(1), mag);
}

inline Rational rpow(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// Strict rational grammar: optional sign, digits, optionally '/' and digits.
/// No whitespace. Fractions not in lowest terms (e.g. "2/4") are rejected so that
/// serialized data round-trips bit-exactly.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&](std::size_t pos, const char* why) -> Rational {
    fail(ErrorCode::ParseError, "rational '" + std::string(s) + "' at position " + std::to_string(pos) + ": " + why);
  };
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) return bad(i, "expected digit");
  std::string num(s.substr(0, i));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (i == s.size()) return Rational(Integer(num));
  if (s[i] != '/') return bad(i, "unexpected character");
  ++i;
  std::size_t den_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == den_start) return bad(i, "expected digit in denominator");
  if (i != s.size()) return bad(i, "trailing characters");
  Integer n(num);
  Integer d(std::string(s.substr(den_start)));
  if (d == 0) return bad(den_start, "zero denominator");
  Rational q(n, d);
  if (boost::multiprecision::numerator(q) != n || boost::multiprecision::denominator(q) != d)
    return bad(den_start, "not in lowest terms");
  return q;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace gsp4
