#include "floorgw/gw.hpp"

#include <algorithm>

#include "floorgw/errors.hpp"

namespace floorgw {

namespace {

int floor_div(int a, int b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }

// x * (2 sin(u/2))^exponent, known to at least `order`. The caller must
// supply x with order(x) >= order - exponent.
USeries times_sin_power(const USeries& x, int exponent, int order) {
  if (exponent == 0) return x.truncated(order);
  const int sin_order = std::max(order - x.valuation(), exponent + 1);
  const USeries product = x * sin_factor_series(1, exponent, sin_order);
  return product.truncated(order);
}

void require_named_family(const HTransverseDegree& delta) {
  if (delta.family() == Family::General) {
    throw DomainError("generating series are only available for P2 and Hirzebruch degrees, got " + delta.describe());
  }
}

int require_genus(const HTransverseDegree& delta, int n) {
  const int g = genus_for_points(delta, n);
  if (g < 0) {
    throw DomainError("g_{Delta,n} = " + std::to_string(g) + " < 0 for " + delta.describe() + ", n = " +
                      std::to_string(n));
  }
  return g;
}

int class_genus(int h, int d, int n, const char* what) {
  if (h < 0 || d < 0 || n < 0) throw DomainError(std::string(what) + " parameters must be nonnegative");
  const int g = n + 1 - 4 * h - 2 * d;
  if (g < 0) throw DomainError(std::string(what) + " requires n + 1 - 4h - 2d >= 0");
  return g;
}

// N_floor(q^{1/2}) substituted at q = e^{iu}, times (2 sin(u/2))^exponent.
USeries refined_times_sin(const LaurentPoly& refined, int exponent, int order) {
  const USeries substituted = substitute_exponential(refined, std::max(order - exponent, 1));
  return times_sin_power(substituted, exponent, order);
}

}  // namespace

std::string to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Relative: return "relative";
    case SeriesKind::Log: return "log";
    case SeriesKind::AbsoluteF0: return "absolute_F0";
    case SeriesKind::RelativeF2: return "relative_F2_D-2";
    case SeriesKind::Vertex: return "vertex";
    case SeriesKind::Degeneration: return "degeneration";
  }
  return "unknown";
}

SeriesKind series_kind_from_string(const std::string& name) {
  for (SeriesKind k : {SeriesKind::Relative, SeriesKind::Log, SeriesKind::AbsoluteF0, SeriesKind::RelativeF2,
                       SeriesKind::Vertex, SeriesKind::Degeneration})
    if (to_string(k) == name) return k;
  throw DomainError("unknown series kind: " + name);
}

int GwSeries::max_genus() const { return floor_div(series.order() - 1 - exponent_offset, 2); }

Rational extract_invariant(const GwSeries& s, int g) {
  if (g < s.genus_min) {
    throw DomainError("genus " + std::to_string(g) + " is below the minimal genus " + std::to_string(s.genus_min));
  }
  return s.series.coefficient(s.exponent_for_genus(g));
}

std::vector<std::pair<int, Rational>> invariant_table(const GwSeries& s) {
  std::vector<std::pair<int, Rational>> rows;
  for (int g = s.genus_min; g <= s.max_genus(); ++g) rows.emplace_back(g, extract_invariant(s, g));
  return rows;
}

bool has_uniform_parity(const GwSeries& s) {
  const auto coeffs = s.series.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int e = s.series.valuation() + static_cast<int>(i);
    if (!coeffs[i].is_zero() && ((e - s.exponent_offset) % 2 != 0)) return false;
  }
  return true;
}

GwSeries gw_relative_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options) {
  require_named_family(delta);
  const int g0 = require_genus(delta, n);
  const int exponent = 2 * g0 - 2 + delta.d_b() + delta.d_t();
  GwSeries out{refined_times_sin(refined_count(delta, n, options), exponent, order)};
  out.kind = SeriesKind::Relative;
  out.degree = delta;
  out.n = n;
  out.exponent_offset = delta.d_b() + delta.d_t() - 2;
  out.genus_min = g0;
  return out;
}

GwSeries log_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options) {
  const int two_h = 2 * delta.height();
  GwSeries rel = gw_relative_series(delta, n, order - two_h, options);
  GwSeries out{times_sin_power(rel.series, two_h, order)};
  out.kind = SeriesKind::Log;
  out.degree = delta;
  out.n = n;
  out.exponent_offset = delta.size() - 2;
  out.genus_min = rel.genus_min;
  return out;
}

GwSeries vertex_series(const Partition& mu, const Partition& nu, int order) {
  const int length = mu.length() + nu.length();
  if (order < length + 1) {
    throw DomainError("vertex_series needs order >= l(mu) + l(nu) + 1 = " + std::to_string(length + 1));
  }
  USeries product = USeries::constant(1, order);
  const int largest = std::max(mu.largest(), nu.largest());
  for (int l = 1; l <= largest; ++l) {
    const int count = mu.multiplicity(l) + nu.multiplicity(l);
    if (count == 0) continue;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(count));
    product = product * (Rational(1, scale) * sin_factor_series(l, count, order - length + count));
  }
  GwSeries out{product.truncated(order)};
  out.kind = SeriesKind::Vertex;
  out.exponent_offset = length;
  out.genus_min = 0;
  out.mu = mu;
  out.nu = nu;
  return out;
}

GwSeries degeneration_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options) {
  require_named_family(delta);
  const int g0 = require_genus(delta, n);
  USeries total = USeries::zero(order);
  for (const auto& d : enumerate_marked(delta, n, options)) {
    // Every vertex factor has a nonzero leading term, so the product has valuation
    // sum_V (l(mu) + l(nu)) = 2 #bounded + d_b + d_t.
    const int total_length = 2 * d.bounded_edge_count() + delta.d_b() + delta.d_t();
    USeries product = USeries::constant(Rational(multiplicity(d)), std::max(order - total_length, 1));
    for (int v : d.vertex_positions) {
      const auto [mu, nu] = vertex_partitions(d, v);
      const int length = mu.length() + nu.length();
      product = product * vertex_series(mu, nu, std::max(order - total_length + length, length + 1)).series;
    }
    total = total + product.truncated(order);
  }
  GwSeries out{total};
  out.kind = SeriesKind::Degeneration;
  out.degree = delta;
  out.n = n;
  out.exponent_offset = delta.size() - 2;
  out.genus_min = g0;
  return out;
}

USeries polynomial_route_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options) {
  require_named_family(delta);
  const int g0 = require_genus(delta, n);
  return refined_times_sin(refined_count(delta, n, options), 2 * g0 - 2 + delta.size(), order);
}

GwSeries f0_absolute_series(int a, int b, int n, int order, const EnumerationOptions& options) {
  const int g0 = class_genus(a, b, n, "f0_absolute_series");
  GwSeries out{USeries::zero(order)};
  if (a > 0) {
    const auto delta = HTransverseDegree::hirzebruch(0, a, a + b);
    const int contacts = 2 * (a + b);
    out.series = times_sin_power(gw_relative_series(delta, n, order + contacts, options).series, -contacts, order);
    out.degree = delta;
  } else if (b > 0) {
    out.degree = HTransverseDegree::hirzebruch(0, 0, b);
  }
  out.kind = SeriesKind::AbsoluteF0;
  out.n = n;
  out.exponent_offset = -2;
  out.genus_min = g0;
  return out;
}

GwSeries f2_relative_dminus2_series(int h, int d, int n, int order, const EnumerationOptions& options) {
  const int g0 = class_genus(h, d, n, "f2_relative_dminus2_series");
  GwSeries out{USeries::zero(order)};
  if (h > 0) {
    const auto delta = HTransverseDegree::hirzebruch(2, h, d);
    const int contacts = 2 * h + d;
    out.series = times_sin_power(gw_relative_series(delta, n, order + contacts, options).series, -contacts, order);
    out.degree = delta;
  } else if (d > 0) {
    out.degree = HTransverseDegree::hirzebruch(2, 0, d);
  }
  out.kind = SeriesKind::RelativeF2;
  out.n = n;
  out.exponent_offset = d - 2;
  out.genus_min = g0;
  return out;
}

DegenerationReport degeneration_check(const HTransverseDegree& delta, int n, int order,
                                      const EnumerationOptions& options) {
  DegenerationReport report{degeneration_series(delta, n, order, options).series,
                            polynomial_route_series(delta, n, order, options),
                            log_series(delta, n, order, options).series};
  report.equal = report.diagram_route == report.polynomial_route && report.diagram_route == report.log_route;
  return report;
}

AbramovichBertramReport ab_identity_check(int a, int b, int n, int order, const EnumerationOptions& options) {
  class_genus(a, b, n, "ab_identity_check");
  AbramovichBertramReport report{LaurentPoly{}, LaurentPoly{}, USeries::zero(order), USeries::zero(order)};

  if (a > 0) report.lhs_polynomial = refined_count(HTransverseDegree::hirzebruch(0, a, a + b), n, options);
  for (int j = 0; j <= a; ++j) {
    if (a - j == 0) continue;  // no floors, no diagrams
    const Integer c = binomial(b + 2 * j, j);
    report.rhs_polynomial += c * refined_count(HTransverseDegree::hirzebruch(2, a - j, b + 2 * j), n, options);
  }

  report.lhs_series = f0_absolute_series(a, b, n, order, options).series;
  for (int j = 0; j <= a; ++j) {
    const int d = b + 2 * j;
    const USeries term = f2_relative_dminus2_series(a - j, d, n, order + d, options).series;
    report.rhs_series = report.rhs_series + Rational(binomial(d, j)) * times_sin_power(term, -d, order);
  }

  report.polynomial_equal = report.lhs_polynomial == report.rhs_polynomial;
  report.series_equal = report.lhs_series == report.rhs_series;
  return report;
}

}  // namespace floorgw
