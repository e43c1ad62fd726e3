#include "floorgw/rational.hpp"

#include <ostream>

#include "floorgw/errors.hpp"

namespace floorgw {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  Integer num;
  Integer den = 1;
  try {
    if (slash == std::string::npos) {
      if (s.empty() || num.set_str(s, 10) != 0) throw DomainError("bad rational: " + s);
    } else {
      if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
        throw DomainError("bad rational: " + s);
    }
  } catch (const std::invalid_argument&) {
    throw DomainError("bad rational: " + s);
  }
  if (den <= 0) throw DomainError("rational denominator must be positive: " + s);
  return Rational(num, den);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace floorgw
