#pragma once

#include <vector>

#include "floorgw/degree.hpp"
#include "floorgw/floor_diagram.hpp"
#include "floorgw/laurent.hpp"

// Brute-force reference enumerator for marked floor diagrams. It shares no
// search or pruning code with the sweep in enumerate.hpp and exists to
// certify it; it is used by the test suites and `floorgw verify oracle`.
namespace floorgw::oracle {

struct OracleConfig {
  /// Upper bound on edge weights; 0 selects d_b + sum of max(-divergence, 0).
  int max_weight = 0;
  /// Largest n accepted.
  int max_elements = 16;
};

/// Every marked (Delta, n)-floor diagram, sorted. Generates all weighted
/// edge multisets between ranked floors and all placements of the unbounded
/// edges, keeps the balanced and connected ones, then enumerates every
/// order-compatible marking of each.
std::vector<MarkedFloorDiagram> brute_force_enumerate(const HTransverseDegree& delta, int n,
                                                      const OracleConfig& config = {});

LaurentPoly brute_force_refined_count(const HTransverseDegree& delta, int n, const OracleConfig& config = {});

}  // namespace floorgw::oracle
