#include "floorgw/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "floorgw/errors.hpp"

namespace floorgw {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentPoly::LaurentPoly(int valuation, std::vector<Integer> coefficients)
    : valuation_(valuation), coeffs_(std::move(coefficients)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& coefficient, int exponent) {
  return LaurentPoly(exponent, {coefficient});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  valuation_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) valuation_ = 0;
}

Integer LaurentPoly::coefficient(int exponent) const {
  if (exponent < valuation_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  return valuation_ == -max_exponent() && std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  return LaurentPoly(-max_exponent(), std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const int e = valuation_ + static_cast<int>(i);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "s";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(valuation_, o.valuation_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[valuation_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.valuation_ - lo + i] += o.coeffs_[i];
  valuation_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  LaurentPoly neg = o;
  neg *= Integer(-1);
  return *this += neg;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.valuation_ + b.valuation_, std::move(out));
}

LaurentPoly pow(const LaurentPoly& p, unsigned exponent) {
  LaurentPoly result(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly q_integer(int m) {
  if (m < 1) throw DomainError("q_integer requires m >= 1, got " + std::to_string(m));
  // Exponents -(m-1), -(m-3), ..., m-1 in steps of 2.
  std::vector<Integer> coeffs(static_cast<std::size_t>(2 * m - 1), 0);
  for (std::size_t i = 0; i < coeffs.size(); i += 2) coeffs[i] = 1;
  return LaurentPoly(-(m - 1), std::move(coeffs));
}

Integer eval_at_one(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& c : p.coefficients()) sum += c;
  return sum;
}

}  // namespace floorgw
