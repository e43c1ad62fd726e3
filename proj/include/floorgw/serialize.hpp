#pragma once

#include <json.hpp>

#include "floorgw/degree.hpp"
#include "floorgw/floor_diagram.hpp"
#include "floorgw/gw.hpp"
#include "floorgw/laurent.hpp"
#include "floorgw/rational.hpp"
#include "floorgw/useries.hpp"

// JSON encodings. Rationals and big integers travel as decimal strings so no
// consumer loses precision. Malformed input throws DomainError.
namespace floorgw::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"valuation": int, "coefficients": [string, ...]}, exponents of s implied.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

/// {"valuation": int, "order": int, "coefficients": [string, ...]} covering valuation..order-1.
Json to_json(const USeries& s);
USeries useries_from_json(const Json& j);

Json to_json(const HTransverseDegree& delta);
HTransverseDegree degree_from_json(const Json& j);

/// {"n": int, "vertices": [int], "divergences": {pos: int}, "edges": [{"position", "source", "target", "weight"}]}
Json to_json(const MarkedFloorDiagram& d);
MarkedFloorDiagram diagram_from_json(const Json& j);

/// {"kind", "delta", "n", "series", "invariants": [{"g", "value"}]}; vertex series add "mu" and "nu".
Json to_json(const GwSeries& s);
GwSeries gw_series_from_json(const Json& j);

/// Integer as a JSON number when it fits in 64 bits, else as a decimal string.
Json integer_to_json(const Integer& z);

}  // namespace floorgw::json
