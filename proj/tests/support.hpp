#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fixtures/series_fixtures.hpp"
#include "floorgw/degree.hpp"
#include "floorgw/rational.hpp"
#include "floorgw/useries.hpp"

namespace testing {

inline floorgw::USeries fixture_series(const std::string& name) {
  for (const auto& f : fixtures::series()) {
    if (name != f.name) continue;
    if (f.terms.empty()) return floorgw::USeries::zero(f.order);
    const int lo = f.terms.front().first;
    std::vector<floorgw::Rational> coeffs(f.order - lo, floorgw::Rational(0));
    for (const auto& [e, c] : f.terms) coeffs[e - lo] = floorgw::Rational::parse(c);
    return floorgw::USeries(lo, std::move(coeffs), f.order);
  }
  throw std::runtime_error("no fixture " + name);
}

struct Instance {
  floorgw::HTransverseDegree delta;
  int n;
};

// P2 with d <= 3 and Hirzebruch(k <= 2, h <= 2, d <= 2), for 0 <= g <= 2.
inline std::vector<Instance> small_instances() {
  std::vector<floorgw::HTransverseDegree> degrees;
  for (int d = 1; d <= 3; ++d) degrees.push_back(floorgw::HTransverseDegree::p2(d));
  for (int k = 0; k <= 2; ++k)
    for (int h = 0; h <= 2; ++h)
      for (int d = 0; d <= 2; ++d)
        if (h + d >= 1) degrees.push_back(floorgw::HTransverseDegree::hirzebruch(k, h, d));
  std::vector<Instance> out;
  for (const auto& delta : degrees)
    for (int g = 0; g <= 2; ++g) out.push_back({delta, floorgw::points_for_genus(delta, g)});
  return out;
}

}  // namespace testing
