#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floorgw/degree.hpp"
#include "floorgw/enumerate.hpp"
#include "floorgw/partition.hpp"
#include "floorgw/useries.hpp"

namespace floorgw {

enum class SeriesKind { Relative, Log, AbsoluteF0, RelativeF2, Vertex, Degeneration };

std::string to_string(SeriesKind kind);
SeriesKind series_kind_from_string(const std::string& name);

/// A generating series sum_g N_g u^{2g + exponent_offset}, g >= genus_min.
struct GwSeries {
  explicit GwSeries(USeries s) : series(std::move(s)) {}

  USeries series;
  SeriesKind kind = SeriesKind::Relative;
  std::optional<HTransverseDegree> degree;  // absent for vertex series and empty classes
  int n = 0;
  int exponent_offset = 0;
  int genus_min = 0;
  // Only for vertex series.
  Partition mu;
  Partition nu;

  /// u-exponent carrying genus g.
  int exponent_for_genus(int g) const { return 2 * g + exponent_offset; }
  /// Largest genus whose coefficient lies below the truncation order; genus_min - 1 if none.
  int max_genus() const;
};

/// Coefficient of u^{2g + offset}. Throws DomainError for g < genus_min and
/// TruncationError when that exponent is at or beyond the truncation order.
Rational extract_invariant(const GwSeries& series, int g);

/// (genus, invariant) for every genus the truncation order determines.
std::vector<std::pair<int, Rational>> invariant_table(const GwSeries& series);

/// Nonzero coefficients only at exponents congruent to exponent_offset mod 2.
bool has_uniform_parity(const GwSeries& series);

/// Relative invariants: N_floor(q^{1/2}) * (2 sin(u/2))^{2 g_{Delta,n} - 2 + d_b + d_t},
/// indexed by u^{2g - 2 + d_b + d_t}. Only P2 and Hirzebruch degrees are accepted.
GwSeries gw_relative_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options = {});

/// Log invariants: the relative series times (2 sin(u/2))^{2h}, indexed by u^{2g - 2 + |Delta|}.
GwSeries log_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options = {});

/// Vertex contribution prod_l ((1/l) 2 sin(l u/2))^{mu_l + nu_l}, indexed by u^{2g + l(mu) + l(nu)}.
GwSeries vertex_series(const Partition& mu, const Partition& nu, int order);

/// Sum over marked diagrams of prod_E w_E^2 times prod_V vertex_series(mu(V), nu(V)).
/// Its valuation is 2 g_{Delta,n} - 2 + |Delta|, so it is indexed by u^{2g - 2 + |Delta|}.
GwSeries degeneration_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options = {});

/// N_floor(q^{1/2}) * (2 sin(u/2))^{2 g_{Delta,n} - 2 + |Delta|} via substitute_exponential:
/// the polynomial-side counterpart of degeneration_series.
USeries polynomial_route_series(const HTransverseDegree& delta, int n, int order, const EnumerationOptions& options = {});

/// Absolute invariants of F0 = P1 x P1 in class (a, b), indexed by u^{2g-2}:
/// the relative series of Hirzebruch(0, a, a+b) times (2 sin(u/2))^{-2(a+b)}.
/// Classes without floors (a = 0) give the zero series.
GwSeries f0_absolute_series(int a, int b, int n, int order, const EnumerationOptions& options = {});

/// F2 invariants relative to D_{-2} in class (h, d), indexed by u^{2g-2+d}:
/// the relative series of Hirzebruch(2, h, d) times (2 sin(u/2))^{-(2h+d)}.
GwSeries f2_relative_dminus2_series(int h, int d, int n, int order, const EnumerationOptions& options = {});

struct DegenerationReport {
  USeries diagram_route;
  USeries polynomial_route;
  USeries log_route;  // gw_relative_series * (2 sin(u/2))^{2h}
  bool equal = false;
};

/// Compares the diagram-sum series with the refined-count series, and both with the log series.
DegenerationReport degeneration_check(const HTransverseDegree& delta, int n, int order,
                                      const EnumerationOptions& options = {});

struct AbramovichBertramReport {
  LaurentPoly lhs_polynomial;  // N_floor of F0 class (a, b)
  LaurentPoly rhs_polynomial;  // sum_j C(b+2j, j) N_floor of F2 class (a-j, b+2j)
  USeries lhs_series;
  USeries rhs_series;
  bool polynomial_equal = false;
  bool series_equal = false;
  bool equal() const { return polynomial_equal && series_equal; }
};

/// Checks the F0/F2 comparison at the level of refined counts and of generating series.
AbramovichBertramReport ab_identity_check(int a, int b, int n, int order, const EnumerationOptions& options = {});

}  // namespace floorgw
