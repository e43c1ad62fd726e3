#include "doctest.h"
#include "floorgw/enumerate.hpp"
#include "floorgw/errors.hpp"
#include "floorgw/gw.hpp"
#include "support.hpp"

using namespace floorgw;
using testing::fixture_series;

namespace {

USeries two_sin_pow(int k, int order) { return sin_factor_series(1, k, order); }

}  // namespace

TEST_SUITE("gw") {

TEST_CASE("relative series fixtures") {
  const GwSeries line = gw_relative_series(HTransverseDegree::p2(1), 2, 6);
  CHECK(line.kind == SeriesKind::Relative);
  CHECK(line.exponent_offset == -1);
  CHECK(line.series == fixture_series("sin_pow_m1").truncated(6));
  CHECK(extract_invariant(line, 0) == Rational(1));
  CHECK(extract_invariant(line, 1) == Rational(1, 24));
  CHECK(extract_invariant(line, 2) == Rational(7, 5760));

  const GwSeries cubic = gw_relative_series(HTransverseDegree::p2(3), 8, 16);
  CHECK(cubic.series == fixture_series("rel_p2_d3"));
  CHECK(extract_invariant(cubic, 0) == Rational(12));
  CHECK(extract_invariant(cubic, 1) == Rational(-3, 2));
  CHECK(extract_invariant(cubic, 2) == Rational(21, 160));

  const GwSeries f0 = gw_relative_series(HTransverseDegree::hirzebruch(0, 1, 1), 3, 6);
  CHECK(f0.series == USeries::constant(1, 6));
}

TEST_CASE("extraction errors") {
  const GwSeries cubic = gw_relative_series(HTransverseDegree::p2(3), 9, 8);
  CHECK(cubic.genus_min == 1);
  CHECK_THROWS_AS(extract_invariant(cubic, 0), DomainError);
  CHECK(extract_invariant(cubic, 1) == Rational(1));
  // u^{2g+1} with order 8: g = 3 is the first undetermined genus.
  CHECK_NOTHROW(extract_invariant(cubic, 2));
  CHECK_THROWS_AS(extract_invariant(cubic, 4), TruncationError);
  CHECK(cubic.max_genus() == 3);
  CHECK(invariant_table(cubic).size() == 3);
}

TEST_CASE("input validation") {
  const auto general = HTransverseDegree::general({{0, -1}, {-1, 0}, {1, 1}});
  CHECK_THROWS_AS(gw_relative_series(general, 2, 8), DomainError);
  CHECK_THROWS_AS(log_series(general, 2, 8), DomainError);
  CHECK_THROWS_AS(gw_relative_series(HTransverseDegree::p2(2), 4, 8), DomainError);
  CHECK_THROWS_AS(f0_absolute_series(1, 0, 2, 8), DomainError);
  CHECK_THROWS_AS(f2_relative_dminus2_series(1, 1, 4, 8), DomainError);
  CHECK_THROWS_AS(ab_identity_check(1, 1, 4, 8), DomainError);
  CHECK_THROWS_AS(f0_absolute_series(-1, 0, 8, 8), DomainError);
  CHECK_THROWS_AS(vertex_series(Partition({1}), Partition({1}), 2), DomainError);
}

TEST_CASE("vertex series") {
  CHECK(vertex_series({}, {}, 8).series == USeries::constant(1, 8));
  CHECK(vertex_series(Partition({1}), {}, 6).series == fixture_series("sin_pow_1").truncated(6));
  CHECK(vertex_series(Partition({2}), {}, 16).series == fixture_series("vertex_2_empty"));
  CHECK(vertex_series(Partition({2, 1}), Partition({1, 1}), 16).series == fixture_series("vertex_21_11"));
  CHECK(vertex_series(Partition({3}), Partition({2, 2}), 16).series == fixture_series("vertex_3_22"));
  const GwSeries v = vertex_series(Partition({3, 1}), Partition({2}), 12);
  CHECK(v.exponent_offset == 3);
  CHECK(v.genus_min == 0);
  CHECK(v.series.valuation() == 3);
  CHECK(extract_invariant(v, 0) == Rational(1));
  CHECK(has_uniform_parity(v));
}

TEST_CASE("log series") {
  const GwSeries line = log_series(HTransverseDegree::p2(1), 2, 8);
  CHECK(line.kind == SeriesKind::Log);
  CHECK(line.series == two_sin_pow(1, 8));
  CHECK(extract_invariant(line, 0) == Rational(1));
  const GwSeries cubic = log_series(HTransverseDegree::p2(3), 8, 16);
  CHECK(cubic.series.valuation() == 7);
  CHECK(cubic.series == fixture_series("log_p2_d3"));
  const GwSeries f0 = log_series(HTransverseDegree::hirzebruch(0, 1, 1), 3, 8);
  CHECK(f0.series == two_sin_pow(2, 8));
}

TEST_CASE("degeneration series") {
  const GwSeries line = degeneration_series(HTransverseDegree::p2(1), 2, 8);
  CHECK(line.series == two_sin_pow(1, 8));
  const GwSeries f2 = degeneration_series(HTransverseDegree::hirzebruch(2, 1, 0), 3, 10);
  CHECK(f2.series == two_sin_pow(2, 10));
  const auto report = degeneration_check(HTransverseDegree::p2(3), 8, 16);
  CHECK(report.equal);
  CHECK(report.diagram_route == fixture_series("log_p2_d3"));
}

TEST_CASE("F0 and F2 series") {
  const GwSeries a = f0_absolute_series(1, 0, 3, 8);
  CHECK(a.exponent_offset == -2);
  CHECK(a.series.coefficient(-2) == Rational(1));
  CHECK(a.series == two_sin_pow(-2, 8));
  CHECK(f0_absolute_series(1, 0, 4, 8).series.is_zero());
  CHECK(f0_absolute_series(0, 1, 1, 8).series.is_zero());

  CHECK(f2_relative_dminus2_series(1, 0, 3, 8).series == fixture_series("sin_pow_m2").truncated(8));
  CHECK(f2_relative_dminus2_series(0, 2, 3, 8).series.is_zero());
  const GwSeries f = f2_relative_dminus2_series(1, 2, 7, 8);
  CHECK(f.series.coefficient(0) == Rational(classical_count(HTransverseDegree::hirzebruch(2, 1, 2), 7)));
}

TEST_CASE("Abramovich-Bertram spot checks") {
  const auto r1 = ab_identity_check(1, 0, 3, 16);
  CHECK(r1.lhs_polynomial == LaurentPoly(1));
  CHECK(r1.rhs_polynomial == LaurentPoly(1));
  CHECK(r1.equal());
  const auto r2 = ab_identity_check(1, 0, 4, 16);
  CHECK(r2.lhs_polynomial.is_zero());
  CHECK(r2.equal());
  CHECK(ab_identity_check(0, 0, 0, 16).equal());
  CHECK(ab_identity_check(2, 0, 7, 16).equal());
}

TEST_CASE("kind names round trip") {
  for (auto k : {SeriesKind::Relative, SeriesKind::Log, SeriesKind::AbsoluteF0, SeriesKind::RelativeF2,
                 SeriesKind::Vertex, SeriesKind::Degeneration})
    CHECK(series_kind_from_string(to_string(k)) == k);
  CHECK(to_string(SeriesKind::RelativeF2) == "relative_F2_D-2");
  CHECK_THROWS_AS(series_kind_from_string("bogus"), DomainError);
}

TEST_CASE("series invariants over the small instances") {
  for (const auto& inst : testing::small_instances()) {
    CAPTURE(inst.delta.describe());
    CAPTURE(inst.n);
    const int g = genus_for_points(inst.delta, inst.n);
    const GwSeries rel = gw_relative_series(inst.delta, inst.n, 16);
    const GwSeries log = log_series(inst.delta, inst.n, 16);
    CHECK(has_uniform_parity(rel));
    CHECK(has_uniform_parity(log));
    const Rational classical(classical_count(inst.delta, inst.n));
    CHECK(extract_invariant(rel, g) == classical);
    CHECK(extract_invariant(log, g) == classical);
    if (!classical.is_zero()) {
      CHECK(rel.series.valuation() == rel.exponent_for_genus(g));
      CHECK(log.series.valuation() == rel.series.valuation() + 2 * inst.delta.height());
    }
    CHECK(agree(log.series, rel.series * two_sin_pow(2 * inst.delta.height(), 16)));
  }
}

}  // TEST_SUITE
