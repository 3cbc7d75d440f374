#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsp4/arith/scalar.hpp"

namespace gsp4 {

/// Truncated power series in one variable X (standing for p^(-s)), carried mod X^(order+1).
///
/// A series built from a finite polynomial remembers that it is exact, and only such a
/// series may be extended to a higher order. Anything else that changes the truncation must
/// go through truncated(); arithmetic between different orders is a TruncationMismatch.
template <Scalar T>
class SeriesPoly {
 public:
  SeriesPoly() : coeffs_(1, T(0)), polynomial_(true) {}

  /// Exact polynomial; order = degree (or 0 for an empty list).
  static SeriesPoly polynomial(std::vector<T> coeffs) {
    if (coeffs.empty()) coeffs.push_back(T(0));
    SeriesPoly s;
    s.coeffs_ = std::move(coeffs);
    s.polynomial_ = true;
    return s;
  }

  /// Truncated series of the given order; coeffs beyond order are dropped, missing ones are zero.
  static SeriesPoly truncated_series(std::vector<T> coeffs, std::size_t order) {
    coeffs.resize(order + 1, T(0));
    SeriesPoly s;
    s.coeffs_ = std::move(coeffs);
    s.polynomial_ = false;
    return s;
  }

  static SeriesPoly one(std::size_t order) { return truncated_series({T(1)}, order); }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  bool is_polynomial() const noexcept { return polynomial_; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  /// Degree of the highest nonzero coefficient (0 for the zero series).
  std::size_t degree(double tol = default_tolerance()) const {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      if (!ScalarTraits<T>::is_zero(coeffs_[i], tol)) return i;
    return 0;
  }

  /// Explicit lowering of the truncation order.
  SeriesPoly truncated(std::size_t order) const {
    if (order > this->order()) fail(ErrorCode::TruncationMismatch, "truncated() cannot raise the order");
    SeriesPoly s = *this;
    s.coeffs_.resize(order + 1);
    s.polynomial_ = polynomial_ && order >= degree();
    return s;
  }

  /// Raise or lower the order. Raising is only legal for exact polynomials.
  SeriesPoly with_order(std::size_t order) const {
    if (order <= this->order()) return truncated(order);
    if (!polynomial_)
      fail(ErrorCode::TruncationMismatch, "cannot extend a truncated series of order " + std::to_string(this->order()));
    SeriesPoly s = *this;
    s.coeffs_.resize(order + 1, T(0));
    return s;
  }

  SeriesPoly& operator+=(const SeriesPoly& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    polynomial_ = polynomial_ && o.polynomial_;
    return *this;
  }
  SeriesPoly& operator-=(const SeriesPoly& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    polynomial_ = polynomial_ && o.polynomial_;
    return *this;
  }

  /// Product mod X^(order+1). Two exact polynomials multiply to an exact polynomial of
  /// summed degree; otherwise both operands must share the same order.
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    if (a.polynomial_ && b.polynomial_) {
      std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
      for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      return polynomial(std::move(out));
    }
    a.check_order(b);
    std::size_t n = a.coeffs_.size();
    std::vector<T> out(n, T(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return truncated_series(std::move(out), n - 1);
  }

  friend SeriesPoly operator*(const T& c, SeriesPoly s) {
    for (auto& x : s.coeffs_) x = c * x;
    return s;
  }

  friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
  friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }

  /// Coefficientwise equality; same order required.
  bool equals(const SeriesPoly& o, double tol = default_tolerance()) const {
    if (order() != o.order()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!ScalarTraits<T>::equal(coeffs_[i], o.coeffs_[i], tol)) return false;
    return true;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ", ";
      s += ScalarTraits<T>::str(coeffs_[i]);
    }
    return polynomial_ ? "[" + s + "]" : "[" + s + "] mod X^" + std::to_string(order() + 1);
  }

 private:
  void check_order(const SeriesPoly& o) const {
    if (o.order() != order())
      fail(ErrorCode::TruncationMismatch,
           "series orders differ: " + std::to_string(order()) + " vs " + std::to_string(o.order()));
  }

  std::vector<T> coeffs_;
  bool polynomial_ = false;
};

/// g with f*g = 1 mod X^(order+1).
template <Scalar T>
SeriesPoly<T> series_invert(const SeriesPoly<T>& f, double tol = default_tolerance()) {
  const T& c0 = f[0];
  if (ScalarTraits<T>::is_zero(c0, tol)) fail(ErrorCode::ZeroConstantTerm, "series has zero constant term");
  T inv0 = T(1) / c0;
  std::size_t n = f.order();
  std::vector<T> g(n + 1, T(0));
  g[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += f[i] * g[k - i];
    g[k] = -(inv0 * acc);
  }
  return SeriesPoly<T>::truncated_series(std::move(g), n);
}

/// Expansion of X * (-R'(X) / R(X)) to the given order. For R = prod (1 - g_i X) the
/// coefficient of X^r is the power sum sum_i g_i^r.
template <Scalar T>
SeriesPoly<T> log_derivative_series(const SeriesPoly<T>& reciprocal, std::size_t order) {
  SeriesPoly<T> r = reciprocal.with_order(order);
  std::vector<T> xderiv(order + 1, T(0));
  for (std::size_t i = 1; i <= order; ++i) xderiv[i] = -(T(static_cast<long long>(i)) * r[i]);
  auto num = SeriesPoly<T>::truncated_series(std::move(xderiv), order);
  return num * series_invert(r);
}

}  // namespace gsp4
