#include "floorgw/serialize.hpp"

#include <limits>

#include "floorgw/errors.hpp"

namespace floorgw::json {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Integer integer_from_string(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw DomainError("bad integer: " + s);
  return z;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  return guarded("rational", [&] { return Rational::parse(j.get<std::string>()); });
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<long>(z.get_si());
  return z.get_str();
}

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"valuation", p.valuation()}, {"coefficients", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded("Laurent polynomial", [&] {
    std::vector<Integer> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(integer_from_string(c.get<std::string>()));
    return LaurentPoly(j.at("valuation").get<int>(), std::move(coeffs));
  });
}

Json to_json(const USeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
  return Json{{"valuation", s.valuation()}, {"order", s.order()}, {"coefficients", coeffs}};
}

USeries useries_from_json(const Json& j) {
  return guarded("series", [&] {
    const int valuation = j.at("valuation").get<int>();
    const int order = j.at("order").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
    if (static_cast<int>(coeffs.size()) > std::max(0, order - valuation))
      throw DomainError("series lists coefficients at or beyond its order");
    return USeries(valuation, std::move(coeffs), order);
  });
}

Json to_json(const HTransverseDegree& delta) {
  Json j;
  switch (delta.family()) {
    case Family::P2:
      j["family"] = "p2";
      j["d"] = delta.param_d();
      break;
    case Family::Hirzebruch:
      j["family"] = "hirzebruch";
      j["k"] = delta.param_k();
      j["h"] = delta.height();
      j["d"] = delta.param_d();
      break;
    case Family::General: {
      j["family"] = "general";
      Json vecs = Json::array();
      for (const Vec2& v : delta.vectors()) vecs.push_back(Json::array({v.x, v.y}));
      j["vectors"] = vecs;
      break;
    }
  }
  j["d_b"] = delta.d_b();
  j["d_t"] = delta.d_t();
  j["height"] = delta.height();
  return j;
}

HTransverseDegree degree_from_json(const Json& j) {
  return guarded("degree", [&] {
    const auto family = j.at("family").get<std::string>();
    if (family == "p2") return HTransverseDegree::p2(j.at("d").get<int>());
    if (family == "hirzebruch")
      return HTransverseDegree::hirzebruch(j.at("k").get<int>(), j.at("h").get<int>(), j.at("d").get<int>());
    if (family == "general") {
      std::vector<Vec2> vecs;
      for (const auto& v : j.at("vectors")) vecs.push_back({v.at(0).get<int>(), v.at(1).get<int>()});
      return HTransverseDegree::general(std::move(vecs));
    }
    throw DomainError("unknown degree family: " + family);
  });
}

Json to_json(const MarkedFloorDiagram& d) {
  Json divergences = Json::object();
  for (const auto& [pos, div] : d.vertex_divergence) divergences[std::to_string(pos)] = div;
  Json edges = Json::array();
  for (const auto& e : d.edges) {
    edges.push_back(Json{{"position", e.position},
                         {"source", e.source ? Json(*e.source) : Json(nullptr)},
                         {"target", e.target ? Json(*e.target) : Json(nullptr)},
                         {"weight", e.weight}});
  }
  return Json{{"n", d.n}, {"vertices", d.vertex_positions}, {"divergences", divergences}, {"edges", edges}};
}

MarkedFloorDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    MarkedFloorDiagram d;
    d.n = j.at("n").get<int>();
    d.vertex_positions = j.at("vertices").get<std::vector<int>>();
    for (const auto& [key, value] : j.at("divergences").items()) {
      std::size_t used = 0;
      const int pos = std::stoi(key, &used);
      if (used != key.size()) throw DomainError("bad divergence key: " + key);
      d.vertex_divergence[pos] = value.get<int>();
    }
    for (const auto& e : j.at("edges")) {
      DiagramEdge edge;
      edge.position = e.at("position").get<int>();
      if (!e.at("source").is_null()) edge.source = e.at("source").get<int>();
      if (!e.at("target").is_null()) edge.target = e.at("target").get<int>();
      edge.weight = e.at("weight").get<int>();
      d.edges.push_back(edge);
    }
    return d;
  });
}

Json to_json(const GwSeries& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["delta"] = s.degree ? to_json(*s.degree) : Json(nullptr);
  j["n"] = s.n;
  if (s.kind == SeriesKind::Vertex) {
    j["mu"] = s.mu.parts();
    j["nu"] = s.nu.parts();
  }
  j["series"] = to_json(s.series);
  Json rows = Json::array();
  for (const auto& [g, value] : invariant_table(s)) rows.push_back(Json{{"g", g}, {"value", value.str()}});
  j["invariants"] = rows;
  return j;
}

GwSeries gw_series_from_json(const Json& j) {
  return guarded("GW series", [&] {
    GwSeries s{useries_from_json(j.at("series"))};
    s.kind = series_kind_from_string(j.at("kind").get<std::string>());
    s.n = j.at("n").get<int>();
    if (!j.at("delta").is_null()) s.degree = degree_from_json(j.at("delta"));
    const int size = s.degree ? s.degree->size() : 0;
    s.genus_min = s.n + 1 - size;
    switch (s.kind) {
      case SeriesKind::Relative:
        if (!s.degree) throw DomainError("relative series needs a degree");
        s.exponent_offset = s.degree->d_b() + s.degree->d_t() - 2;
        break;
      case SeriesKind::Log:
      case SeriesKind::Degeneration:
        if (!s.degree) throw DomainError("series needs a degree");
        s.exponent_offset = size - 2;
        break;
      case SeriesKind::AbsoluteF0:
        s.exponent_offset = -2;
        break;
      case SeriesKind::RelativeF2:
        s.exponent_offset = (s.degree ? s.degree->param_d() : 0) - 2;
        break;
      case SeriesKind::Vertex:
        s.mu = Partition(j.at("mu").get<std::vector<int>>());
        s.nu = Partition(j.at("nu").get<std::vector<int>>());
        s.exponent_offset = s.mu.length() + s.nu.length();
        s.genus_min = 0;
        break;
    }
    return s;
  });
}

}  // namespace floorgw::json
