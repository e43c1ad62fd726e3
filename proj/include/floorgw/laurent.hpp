#pragma once

#include <string>
#include <vector>

#include "floorgw/rational.hpp"

namespace floorgw {

/// Laurent polynomial in s = q^{1/2} with integer coefficients.
///
/// Stored as a valuation (lowest exponent present) and the dense run of
/// coefficients from there upward. Leading and trailing stored coefficients are
/// nonzero; the zero polynomial stores nothing.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int valuation, std::vector<Integer> coefficients);

  static LaurentPoly monomial(const Integer& coefficient, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  int valuation() const { return valuation_; }
  /// Highest exponent with a nonzero coefficient; valuation() - 1 for zero.
  int max_exponent() const { return valuation_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int exponent) const;

  /// Invariant under s -> 1/s.
  bool is_palindromic() const;
  /// The image under s -> 1/s.
  LaurentPoly inverted() const;

  std::string str() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void normalize();

  int valuation_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// The q-integer [m]_q = s^{-(m-1)} + s^{-(m-3)} + ... + s^{m-1}. Requires m >= 1.
LaurentPoly q_integer(int m);

/// Sum of all coefficients, i.e. the value at s = 1.
Integer eval_at_one(const LaurentPoly& p);

}  // namespace floorgw
