#pragma once

#include <string>
#include <vector>

#include "floorgw/laurent.hpp"
#include "floorgw/rational.hpp"

namespace floorgw {

/// Truncated Laurent series in u with rational coefficients.
///
/// A USeries is known exactly below its truncation order and unknown at or
/// beyond it: asking for such a coefficient throws TruncationError rather than
/// returning zero. The valuation is the lowest exponent carrying a nonzero
/// coefficient; a series whose known coefficients all vanish reports
/// valuation() == order() and is_zero() == true (it is O(u^order)).
///
/// Arithmetic propagates the reliable order:
///   order(x + y) = min(order x, order y)
///   order(x * y) = min(order x + val y, order y + val x)
///   order(x^k)   = k * val x + (order x - val x)
class USeries {
 public:
  USeries(int first_exponent, std::vector<Rational> coefficients, int order);

  static USeries zero(int order) { return USeries(order, {}, order); }
  static USeries constant(const Rational& c, int order) { return USeries(0, {c}, order); }
  static USeries monomial(const Rational& c, int exponent, int order) {
    return USeries(exponent, {c}, order);
  }

  int order() const { return order_; }
  int valuation() const { return start_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(int exponent) const;
  /// Coefficients from valuation() to order() - 1 inclusive.
  std::vector<Rational> coefficients() const;

  /// Forgets every coefficient at or above the new order. Requires new_order <= order().
  USeries truncated(int new_order) const;
  /// Multiplication by u^k.
  USeries shifted(int k) const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const Rational& c, const USeries& a);

  /// Exact structural equality: same order and same known coefficients.
  friend bool operator==(const USeries& a, const USeries& b) = default;

  std::string str() const;

 private:
  int start_;
  int order_;
  std::vector<Rational> coeffs_;  // trimmed: coeffs_.front() nonzero when nonempty
};

/// Integer power; negative exponents invert. Inverting a zero series throws DomainError.
USeries pow(const USeries& x, int k);
USeries inverse(const USeries& x);

/// True when the two series agree on every exponent below min(order a, order b).
bool agree(const USeries& a, const USeries& b);

std::ostream& operator<<(std::ostream& os, const USeries& s);

/// (2 sin(a u / 2))^exponent truncated at `order`. Requires a >= 1 and order > exponent.
USeries sin_factor_series(int a, int exponent, int order);

/// 2 cos(a u / 2) truncated at `order`. Requires a >= 0, order >= 1.
USeries two_cos_series(int a, int order);

/// Substitutes s = e^{iu/2} into a palindromic p, writing p in the basis
/// {1, s^a + s^-a} and mapping s^a + s^-a to 2 cos(a u / 2). The result
/// has valuation >= 0 and truncation order `order`. Non-palindromic input
/// throws DomainError.
USeries substitute_exponential(const LaurentPoly& p, int order);

}  // namespace floorgw
