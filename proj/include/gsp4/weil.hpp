#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "gsp4/arith/scalar.hpp"

namespace gsp4 {

// ---------------------------------------------------------------------------------------------
// Representations of the real Weil group W_R = C^x u j C^x.
//
//   phi(+, t):  r e^{i theta} -> r^{2t},  j -> 1
//   phi(-, t):  r e^{i theta} -> r^{2t},  j -> -1
//   phi(l, t):  r e^{i theta} -> diag(r^{2t} e^{i l theta}, r^{2t} e^{-i l theta}),  l >= 1
// ---------------------------------------------------------------------------------------------

enum class WeilKind { Plus, Minus, TwoDim };

struct WeilIrrep {
  WeilKind kind = WeilKind::Plus;
  int ell = 0;  // two-dimensional only, >= 1
  Rational t = 0;

  static WeilIrrep plus(Rational t = 0) { return {WeilKind::Plus, 0, std::move(t)}; }
  static WeilIrrep minus(Rational t = 0) { return {WeilKind::Minus, 0, std::move(t)}; }
  static WeilIrrep two_dim(int ell, Rational t = 0) {
    if (ell < 1) fail(ErrorCode::DomainError, "two-dimensional Weil representation needs l >= 1, got " + std::to_string(ell));
    return {WeilKind::TwoDim, ell, std::move(t)};
  }

  int dimension() const noexcept { return kind == WeilKind::TwoDim ? 2 : 1; }

  std::string str() const {
    std::string inner;
    switch (kind) {
      case WeilKind::Plus: inner = "+"; break;
      case WeilKind::Minus: inner = "-"; break;
      case WeilKind::TwoDim: inner = std::to_string(ell); break;
    }
    if (t != 0) inner += "," + t.str();
    return "phi(" + inner + ")";
  }

  friend bool operator==(const WeilIrrep& a, const WeilIrrep& b) {
    return a.kind == b.kind && a.ell == b.ell && a.t == b.t;
  }
};

/// Canonical order: two-dimensional by descending l, then phi(+), then phi(-); ties by t.
inline bool canonical_less(const WeilIrrep& a, const WeilIrrep& b) {
  auto rank = [](const WeilIrrep& x) { return x.kind == WeilKind::TwoDim ? 0 : (x.kind == WeilKind::Plus ? 1 : 2); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.ell != b.ell) return a.ell > b.ell;
  return a.t < b.t;
}

/// Direct sum of irreducibles, kept in canonical order so equality is multiset equality.
class WeilRepSum {
 public:
  WeilRepSum() = default;
  WeilRepSum(std::initializer_list<WeilIrrep> parts) : parts_(parts) { canonicalize(); }
  explicit WeilRepSum(std::vector<WeilIrrep> parts) : parts_(std::move(parts)) { canonicalize(); }

  const std::vector<WeilIrrep>& parts() const noexcept { return parts_; }

  int dimension() const {
    int d = 0;
    for (const auto& x : parts_) d += x.dimension();
    return d;
  }

  WeilRepSum operator+(const WeilRepSum& o) const {
    std::vector<WeilIrrep> v = parts_;
    v.insert(v.end(), o.parts_.begin(), o.parts_.end());
    return WeilRepSum(std::move(v));
  }

  friend bool operator==(const WeilRepSum& a, const WeilRepSum& b) { return a.parts_ == b.parts_; }

  std::string str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? " + " : "") + parts_[i].str();
    return s;
  }

 private:
  void canonicalize() { std::stable_sort(parts_.begin(), parts_.end(), canonical_less); }
  std::vector<WeilIrrep> parts_;
};

/// Tensor product of two irreducibles.
inline WeilRepSum tensor(const WeilIrrep& a, const WeilIrrep& b) {
  Rational t = a.t + b.t;
  const bool a1 = a.kind != WeilKind::TwoDim;
  const bool b1 = b.kind != WeilKind::TwoDim;
  if (a1 && b1) return {a.kind == b.kind ? WeilIrrep::plus(t) : WeilIrrep::minus(t)};
  if (a1) return {WeilIrrep::two_dim(b.ell, t)};
  if (b1) return {WeilIrrep::two_dim(a.ell, t)};
  if (a.ell != b.ell) return {WeilIrrep::two_dim(a.ell + b.ell, t), WeilIrrep::two_dim(std::abs(a.ell - b.ell), t)};
  return {WeilIrrep::two_dim(a.ell + b.ell, t), WeilIrrep::plus(t), WeilIrrep::minus(t)};
}

/// Tensor product distributed over both direct sums.
inline WeilRepSum tensor(const WeilRepSum& a, const WeilRepSum& b) {
  std::vector<WeilIrrep> out;
  for (const auto& x : a.parts())
    for (const auto& y : b.parts()) {
      auto t = tensor(x, y);
      out.insert(out.end(), t.parts().begin(), t.parts().end());
    }
  return WeilRepSum(std::move(out));
}

// ---------------------------------------------------------------------------------------------
// Gamma factors
// ---------------------------------------------------------------------------------------------

enum class GammaKind { R, C };

/// Gamma_R(s + shift) or Gamma_C(s + shift).
struct GammaAtom {
  GammaKind kind = GammaKind::R;
  Rational shift = 0;

  static GammaAtom R(Rational s) { return {GammaKind::R, std::move(s)}; }
  static GammaAtom C(Rational s) { return {GammaKind::C, std::move(s)}; }

  int degree() const noexcept { return kind == GammaKind::C ? 2 : 1; }

  std::string str() const {
    std::string arg = "s";
    if (shift > 0) arg += "+" + shift.str();
    if (shift < 0) arg += shift.str();
    return std::string(kind == GammaKind::C ? "Gamma_C(" : "Gamma_R(") + arg + ")";
  }

  friend bool operator==(const GammaAtom& a, const GammaAtom& b) { return a.kind == b.kind && a.shift == b.shift; }
};

/// Gamma_C atoms by descending shift, then Gamma_R atoms by ascending shift.
inline void sort_canonical(std::vector<GammaAtom>& atoms) {
  std::stable_sort(atoms.begin(), atoms.end(), [](const GammaAtom& a, const GammaAtom& b) {
    if (a.kind != b.kind) return a.kind == GammaKind::C;
    return a.kind == GammaKind::C ? a.shift > b.shift : a.shift < b.shift;
  });
}

inline int total_degree(const std::vector<GammaAtom>& atoms) {
  int d = 0;
  for (const auto& a : atoms) d += a.degree();
  return d;
}

/// Gamma_C(s + 0) -> Gamma_R(s) Gamma_R(s + 1), so that the l1 = l2 case reads like the generic one.
inline std::vector<GammaAtom> expand_gamma_c_zero(const std::vector<GammaAtom>& atoms) {
  std::vector<GammaAtom> out;
  for (const auto& a : atoms) {
    if (a.kind == GammaKind::C && a.shift == 0) {
      out.push_back(GammaAtom::R(0));
      out.push_back(GammaAtom::R(1));
    } else {
      out.push_back(a);
    }
  }
  sort_canonical(out);
  return out;
}

/// Archimedean L-factor: phi(+,t) -> Gamma_R(s+t), phi(-,t) -> Gamma_R(s+t+1), phi(l,t) -> Gamma_C(s+t+l/2).
inline std::vector<GammaAtom> l_factor(const WeilIrrep& x) {
  switch (x.kind) {
    case WeilKind::Plus: return {GammaAtom::R(x.t)};
    case WeilKind::Minus: return {GammaAtom::R(x.t + 1)};
    case WeilKind::TwoDim: return {GammaAtom::C(x.t + Rational(x.ell) / 2)};
  }
  return {};
}

inline std::vector<GammaAtom> l_factor(const WeilRepSum& rep) {
  std::vector<GammaAtom> out;
  for (const auto& x : rep.parts()) {
    auto a = l_factor(x);
    out.insert(out.end(), a.begin(), a.end());
  }
  sort_canonical(out);
  return out;
}

/// Archimedean parameter of the degree-4 transfer: phi(2k-3) + phi(1).
inline WeilRepSum spin_arch_param(int k) {
  if (k < 3) fail(ErrorCode::WeightTooSmall, "spin parameter needs k >= 3, got " + std::to_string(k));
  return {WeilIrrep::two_dim(2 * k - 3), WeilIrrep::two_dim(1)};
}

/// Archimedean parameter of the degree-5 transfer: phi(2k-2) + phi(2k-4) + phi(+).
inline WeilRepSum std_arch_param(int k) {
  if (k < 3) fail(ErrorCode::WeightTooSmall, "standard parameter needs k >= 3, got " + std::to_string(k));
  return {WeilIrrep::two_dim(2 * k - 2), WeilIrrep::two_dim(2 * k - 4), WeilIrrep::plus()};
}

enum class RepPair { SpinSpin, StdStd };

/// Gamma factors of the rho4 x rho4 or rho5 x rho5 Rankin-Selberg convolution, canonically sorted.
inline std::vector<GammaAtom> rankin_arch_factors(int k1, int k2, RepPair pair) {
  auto param = pair == RepPair::SpinSpin ? spin_arch_param : std_arch_param;
  return l_factor(tensor(param(k1), param(k2)));
}

// ---------------------------------------------------------------------------------------------
// Numerics
// ---------------------------------------------------------------------------------------------

namespace detail {

/// log Gamma(z) on the principal branch (Lanczos, g = 7, n = 9; reflection for Re z < 1/2).
inline Complex log_gamma(Complex z) {
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    // log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1 - z)
    return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  Complex t = z + 7.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline bool is_nonpositive_integer(const Complex& z) {
  if (z.imag() != 0.0) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= 1e-12;
}

}  // namespace detail

/// Product of Gamma atoms at s, in log space: value = exp(log_modulus + i phase).
struct GammaValue {
  double log_modulus = 0;
  double phase = 0;  // in (-pi, pi]
  Complex value{1, 0};  // may overflow to inf for large shifts
};

inline GammaValue gamma_eval(const std::vector<GammaAtom>& atoms, const Complex& s) {
  constexpr double pi = std::numbers::pi;
  Complex total = 0;
  for (const auto& a : atoms) {
    Complex arg = s + to_double(a.shift);
    if (a.kind == GammaKind::R) {
      Complex g = arg / 2.0;
      if (detail::is_nonpositive_integer(g))
        fail(ErrorCode::PoleHit, a.str() + " has a pole at s = " + ScalarTraits<Complex>::str(s));
      total += -(arg / 2.0) * std::log(pi) + detail::log_gamma(g);
    } else {
      if (detail::is_nonpositive_integer(arg))
        fail(ErrorCode::PoleHit, a.str() + " has a pole at s = " + ScalarTraits<Complex>::str(s));
      total += std::log(2.0) - arg * std::log(2 * pi) + detail::log_gamma(arg);
    }
  }
  GammaValue v;
  v.log_modulus = total.real();
  v.phase = std::remainder(total.imag(), 2 * pi);
  if (v.phase <= -pi) v.phase += 2 * pi;
  v.value = std::exp(total);
  return v;
}

/// True iff no atom has a pole at any s with lo <= Re(s) <= hi. Shifts are real, so a pole can
/// only occur on the real axis: Gamma_R(s+t) at s+t in {0,-2,-4,...}, Gamma_C(s+t) at s+t in {0,-1,-2,...}.
inline bool pole_free_strip(const std::vector<GammaAtom>& atoms, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) fail(ErrorCode::DomainError, "strip needs lo < hi");
  for (const auto& a : atoms) {
    // Poles at s = -shift - step*m, m >= 0. Is one of them in [lo, hi]?
    const Rational top = -a.shift;  // m = 0
    if (top < lo) continue;
    const Rational step = a.kind == GammaKind::R ? 2 : 1;
    // smallest m with top - step*m <= hi
    Rational need = (top - hi) / step;
    Integer m = boost::multiprecision::numerator(need) / boost::multiprecision::denominator(need);
    if (Rational(m) < need) m += 1;
    if (m < 0) m = 0;
    Rational pole = top - step * Rational(m);
    if (pole >= lo && pole <= hi) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------------------------
// Expression grammar:  sum := term ('+' term)* ;  term := 'phi' '(' ('+' | '-' | int) [',' rational] ')'
// Whitespace anywhere is ignored.
// ---------------------------------------------------------------------------------------------

inline WeilRepSum parse_weil(std::string_view text) {
  std::string s;
  std::vector<std::size_t> pos;  // original column of each retained character
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      pos.push_back(i);
    }
  }
  std::size_t i = 0;
  auto where = [&](std::size_t at) { return at < pos.size() ? pos[at] : text.size(); };
  auto error = [&](const std::string& msg) -> void {
    fail(ErrorCode::ParseError, "at position " + std::to_string(where(i)) + ": " + msg);
  };
  auto expect = [&](char c) {
    if (i >= s.size() || s[i] != c) error(std::string("expected '") + c + "'");
    ++i;
  };

  std::vector<WeilIrrep> parts;
  if (s.empty()) error("empty expression");
  while (true) {
    if (s.compare(i, 3, "phi") != 0) error("expected 'phi'");
    i += 3;
    expect('(');
    WeilIrrep x;
    if (i < s.size() && s[i] == '+') {
      x = WeilIrrep::plus();
      ++i;
    } else if (i < s.size() && s[i] == '-') {
      x = WeilIrrep::minus();
      ++i;
    } else {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) error("expected '+', '-' or a positive integer");
      if (i - start > 9) error("l too large");
      int ell = std::stoi(s.substr(start, i - start));
      if (ell < 1) {
        i = start;
        error("l must be >= 1");
      }
      x = WeilIrrep::two_dim(ell);
    }
    if (i < s.size() && s[i] == ',') {
      ++i;
      std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/' || s[i] == '-' || s[i] == '+'))
        ++i;
      try {
        x.t = parse_rational(s.substr(start, i - start));
      } catch (const Error&) {
        i = start;
        error("bad rational shift");
      }
    }
    expect(')');
    parts.push_back(std::move(x));
    if (i == s.size()) break;
    expect('+');
  }
  return WeilRepSum(std::move(parts));
}

}  // namespace gsp4
