#include "floorgw/useries.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "floorgw/errors.hpp"

namespace floorgw {

USeries::USeries(int first_exponent, std::vector<Rational> coefficients, int order)
    : start_(first_exponent), order_(order), coeffs_(std::move(coefficients)) {
  const int known = std::max(0, order_ - start_);
  if (static_cast<int>(coeffs_.size()) > known) coeffs_.resize(static_cast<std::size_t>(known));
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
  start_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) start_ = order_;
}

Rational USeries::coefficient(int exponent) const {
  if (exponent >= order_) {
    throw TruncationError("coefficient of u^" + std::to_string(exponent) +
                          " requested from a series truncated at order " + std::to_string(order_));
  }
  const int idx = exponent - start_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

std::vector<Rational> USeries::coefficients() const {
  std::vector<Rational> out = coeffs_;
  out.resize(static_cast<std::size_t>(order_ - start_), Rational(0));
  return out;
}

USeries USeries::truncated(int new_order) const {
  if (new_order > order_) {
    throw TruncationError("cannot extend a series from order " + std::to_string(order_) + " to " +
                          std::to_string(new_order));
  }
  return USeries(start_, coeffs_, new_order);
}

USeries USeries::shifted(int k) const { return USeries(start_ + k, coeffs_, order_ + k); }

USeries USeries::operator-() const {
  std::vector<Rational> neg;
  neg.reserve(coeffs_.size());
  for (const auto& c : coeffs_) neg.push_back(-c);
  return USeries(start_, std::move(neg), order_);
}

USeries operator+(const USeries& a, const USeries& b) {
  const int order = std::min(a.order_, b.order_);
  const int lo = std::min(a.start_, b.start_);
  if (lo >= order) return USeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(order - lo));
  for (int e = lo; e < order; ++e) out[static_cast<std::size_t>(e - lo)] = a.coefficient(e) + b.coefficient(e);
  return USeries(lo, std::move(out), order);
}

USeries operator*(const USeries& a, const USeries& b) {
  const int order = std::min(a.order_ + b.start_, b.order_ + a.start_);
  if (a.is_zero() || b.is_zero()) return USeries::zero(order);
  const int lo = a.start_ + b.start_;
  if (lo >= order) return USeries::zero(order);
  std::vector<Rational> out(static_cast<std::size_t>(order - lo));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const std::size_t k = i + j;
      if (static_cast<int>(k) + lo >= order) break;
      out[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return USeries(lo, std::move(out), order);
}

USeries operator*(const Rational& c, const USeries& a) {
  std::vector<Rational> out;
  out.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) out.push_back(c * x);
  return USeries(a.start_, std::move(out), a.order_);
}

std::string USeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const int e = start_ + static_cast<int>(i);
    const Rational& c = coeffs_[i];
    const Rational mag = c < Rational(0) ? -c : c;
    if (first) {
      if (c < Rational(0)) os << "-";
    } else {
      os << (c < Rational(0) ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << "u";
    if (e != 1) os << "^" << e;
  }
  if (!first) os << " + ";
  os << "O(u^" << order_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const USeries& s) { return os << s.str(); }

USeries inverse(const USeries& x) {
  if (x.is_zero()) throw DomainError("inversion of a zero series");
  const int v = x.valuation();
  const int precision = x.order() - v;
  const Rational lead = x.coefficient(v);
  // x = lead * u^v * w with w = 1 + O(u); invert w by the recurrence b_j = -sum_{i>=1} w_i b_{j-i}.
  std::vector<Rational> w(static_cast<std::size_t>(precision));
  for (int j = 0; j < precision; ++j) w[static_cast<std::size_t>(j)] = x.coefficient(v + j) / lead;
  std::vector<Rational> b(static_cast<std::size_t>(precision));
  b[0] = 1;
  for (int j = 1; j < precision; ++j) {
    Rational acc = 0;
    for (int i = 1; i <= j; ++i) acc += w[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j - i)];
    b[static_cast<std::size_t>(j)] = -acc;
  }
  const Rational inv_lead = Rational(1) / lead;
  for (auto& c : b) c *= inv_lead;
  return USeries(-v, std::move(b), -v + precision);
}

USeries pow(const USeries& x, int k) {
  if (k < 0) return pow(inverse(x), -k);
  if (k == 0) {
    const int precision = x.order() - x.valuation();
    if (x.is_zero()) throw DomainError("zeroth power of a series with no known coefficients");
    return USeries::constant(1, precision);
  }
  USeries result = x;
  for (int i = 1; i < k; ++i) result = result * x;
  return result;
}

bool agree(const USeries& a, const USeries& b) {
  const int order = std::min(a.order(), b.order());
  return a.truncated(order) == b.truncated(order);
}

namespace {

// a^j / (2^j * j!) as an exact rational.
Rational half_angle_term(int a, int j) {
  Integer num;
  mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(j));
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2UL, static_cast<unsigned long>(j));
  den *= factorial(static_cast<unsigned long>(j));
  return Rational(num, den);
}

}  // namespace

USeries two_cos_series(int a, int order) {
  if (a < 0) throw DomainError("two_cos_series requires a >= 0");
  if (order < 1) throw DomainError("two_cos_series requires order >= 1");
  std::vector<Rational> coeffs(static_cast<std::size_t>(order), Rational(0));
  for (int j = 0; 2 * j < order; ++j) {
    Rational term = 2 * half_angle_term(a, 2 * j);
    coeffs[static_cast<std::size_t>(2 * j)] = (j % 2 == 0) ? term : -term;
  }
  return USeries(0, std::move(coeffs), order);
}

USeries sin_factor_series(int a, int exponent, int order) {
  if (a < 1) throw DomainError("sin_factor_series requires a >= 1");
  if (order <= exponent) {
    throw DomainError("sin_factor_series requires order > exponent (order " + std::to_string(order) +
                      ", exponent " + std::to_string(exponent) + ")");
  }
  const int precision = order - exponent;
  // 2 sin(a u / 2) / u = sum_j (-1)^j a^{2j+1} u^{2j} / (2^{2j} (2j+1)!)
  std::vector<Rational> unit(static_cast<std::size_t>(precision), Rational(0));
  for (int j = 0; 2 * j < precision; ++j) {
    Rational term = 2 * half_angle_term(a, 2 * j + 1);
    unit[static_cast<std::size_t>(2 * j)] = (j % 2 == 0) ? term : -term;
  }
  return pow(USeries(0, std::move(unit), precision), exponent).shifted(exponent);
}

USeries substitute_exponential(const LaurentPoly& p, int order) {
  if (!p.is_palindromic()) {
    throw DomainError("substitute_exponential requires a palindromic Laurent polynomial, got " + p.str());
  }
  if (order < 1) throw DomainError("substitute_exponential requires order >= 1");
  USeries result = USeries::constant(Rational(p.coefficient(0)), order);
  for (int a = 1; a <= p.max_exponent(); ++a) {
    const Integer c = p.coefficient(a);
    if (c == 0) continue;
    result = result + Rational(c) * two_cos_series(a, order);
  }
  return result;
}

}  // namespace floorgw
