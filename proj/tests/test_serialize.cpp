#include <random>

#include "doctest.h"
#include "floorgw/enumerate.hpp"
#include "floorgw/errors.hpp"
#include "floorgw/serialize.hpp"
#include "support.hpp"

using namespace floorgw;
using floorgw::json::Json;

TEST_SUITE("serialize") {

TEST_CASE("scalar encodings") {
  CHECK(json::to_json(Rational(-3, 2)) == Json("-3/2"));
  CHECK(json::rational_from_json(Json("21/160")) == Rational(21, 160));
  CHECK_THROWS_AS(json::rational_from_json(Json(3)), DomainError);
  CHECK(json::integer_to_json(Integer(620)) == Json(620));
  CHECK(json::integer_to_json(Integer("123456789012345678901234567890")) == Json("123456789012345678901234567890"));
}

TEST_CASE("count payload shape") {
  const Json j = json::to_json(refined_count(HTransverseDegree::p2(3), 8));
  CHECK(j.dump() == R"({"valuation":-2,"coefficients":["1","0","10","0","1"]})");
  CHECK(json::laurent_from_json(j).str() == "s^-2 + 10 + s^2");
  CHECK_THROWS_AS(json::laurent_from_json(Json::parse(R"({"valuation":0})")), DomainError);
  CHECK_THROWS_AS(json::laurent_from_json(Json::parse(R"({"valuation":0,"coefficients":["x"]})")), DomainError);
}

TEST_CASE("series round trip") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-9, 9), v(-4, 4), len(0, 7), den(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> cs(len(rng));
    for (auto& x : cs) x = Rational(c(rng), den(rng));
    const int start = v(rng);
    const USeries s(start, cs, start + 8);
    CHECK(json::useries_from_json(json::to_json(s)) == s);
  }
  CHECK(json::useries_from_json(json::to_json(USeries::zero(4))) == USeries::zero(4));
  CHECK_THROWS_AS(json::useries_from_json(Json::parse(R"({"valuation":0,"order":1,"coefficients":["1","2"]})")),
                  DomainError);
}

TEST_CASE("degree round trip") {
  for (const auto& delta : {HTransverseDegree::p2(3), HTransverseDegree::hirzebruch(2, 1, 0),
                            HTransverseDegree::general({{0, -1}, {0, -1}, {-1, 0}, {-1, 1}, {1, 0}, {1, 1}})}) {
    const Json j = json::to_json(delta);
    CHECK(json::degree_from_json(j) == delta);
    CHECK(j.at("d_b") == delta.d_b());
  }
  CHECK_THROWS_AS(json::degree_from_json(Json::parse(R"({"family":"torus"})")), DomainError);
  CHECK_THROWS_AS(json::degree_from_json(Json::parse(R"({"family":"p2","d":0})")), DomainError);
}

TEST_CASE("diagram round trip and schema") {
  for (const auto& inst : testing::small_instances()) {
    for (const auto& d : enumerate_marked(inst.delta, inst.n)) {
      const Json j = json::to_json(d);
      CHECK(json::diagram_from_json(Json::parse(j.dump())) == d);
    }
  }
  const auto conic = enumerate_marked(HTransverseDegree::p2(2), 5).at(0);
  CHECK(json::to_json(conic).dump() ==
        R"({"n":5,"vertices":[3,5],"divergences":{"3":1,"5":1},"edges":[)"
        R"({"position":1,"source":null,"target":3,"weight":1},)"
        R"({"position":2,"source":null,"target":3,"weight":1},)"
        R"({"position":4,"source":3,"target":5,"weight":1}]})");
}

TEST_CASE("external diagrams go through the validator") {
  const auto delta = HTransverseDegree::p2(2);
  const Json good = Json::parse(R"({"n":5,"vertices":[3,5],"divergences":{"3":1,"5":1},"edges":[
      {"position":1,"source":null,"target":3,"weight":1},
      {"position":2,"source":null,"target":3,"weight":1},
      {"position":4,"source":3,"target":5,"weight":1}]})");
  CHECK(violations(json::diagram_from_json(good), delta).empty());

  Json loop = good;
  loop["edges"][2]["source"] = 5;
  CHECK_FALSE(violations(json::diagram_from_json(loop), delta).empty());

  Json heavy = good;
  heavy["edges"][0]["weight"] = 2;
  CHECK_FALSE(violations(json::diagram_from_json(heavy), delta).empty());

  CHECK_THROWS_AS(json::diagram_from_json(Json::parse(R"({"n":5})")), DomainError);
  Json bad_key = good;
  bad_key["divergences"] = Json::parse(R"({"3x":1})");
  CHECK_THROWS_AS(json::diagram_from_json(bad_key), DomainError);
}

TEST_CASE("GW series round trip") {
  std::vector<GwSeries> all = {
      gw_relative_series(HTransverseDegree::p2(3), 8, 16),
      gw_relative_series(HTransverseDegree::p2(1), 2, 6),
      log_series(HTransverseDegree::hirzebruch(1, 2, 1), 9, 16),
      vertex_series(Partition({2, 1}), Partition({1}), 10),
      vertex_series({}, {}, 4),
      degeneration_series(HTransverseDegree::p2(2), 6, 12),
      f0_absolute_series(1, 1, 7, 12),
      f2_relative_dminus2_series(1, 2, 7, 10),
  };
  for (const auto& s : all) {
    CAPTURE(to_string(s.kind));
    const Json j = json::to_json(s);
    const GwSeries back = json::gw_series_from_json(Json::parse(j.dump()));
    CHECK(back.series == s.series);
    CHECK(back.kind == s.kind);
    CHECK(back.n == s.n);
    CHECK(back.exponent_offset == s.exponent_offset);
    CHECK(back.genus_min == s.genus_min);
    CHECK(back.mu == s.mu);
    CHECK(back.nu == s.nu);
    CHECK(json::to_json(back) == j);
  }
  const Json j = json::to_json(all[0]);
  CHECK(j.at("invariants").at(2) == Json::parse(R"({"g":2,"value":"21/160"})"));
}

}  // TEST_SUITE
