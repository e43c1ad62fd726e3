#pragma once

#include <vector>

#include "floorgw/degree.hpp"
#include "floorgw/floor_diagram.hpp"
#include "floorgw/laurent.hpp"

namespace floorgw {

struct EnumerationOptions {
  /// Worker threads; 0 or 1 runs sequentially. Output is identical either way.
  unsigned workers = 1;
};

/// One representative per isomorphism class of marked (Delta, n)-floor diagrams.
///
/// Sweeps positions 1..n in increasing order. Each position is either an edge
/// or a vertex, and branches are explored in this fixed order:
///   1. a new incoming unbounded edge (weight 1), while fewer than d_b exist;
///   2. a new bounded edge leaving a placed vertex with spare outgoing budget,
///      by source position ascending and then weight ascending;
///   3. an outgoing unbounded edge (weight 1) leaving a placed vertex with
///      budget >= 1, by source position ascending, while fewer than d_t exist;
///   4. a vertex, by divergence ascending and then by the set of pending edge
///      heads it absorbs, in lexicographic order of their positions.
/// A vertex's outgoing budget is (absorbed incoming weight) - divergence.
/// A completed trace needs every budget spent, every head absorbed, and a
/// connected graph. Markings leave no automorphisms, so traces correspond
/// one-to-one with isomorphism classes and nothing is deduplicated.
///
/// Throws DomainError when g_{Delta,n} < 0.
std::vector<MarkedFloorDiagram> enumerate_marked(const HTransverseDegree& delta, int n,
                                                 const EnumerationOptions& options = {});

/// Sum of refined multiplicities over enumerate_marked(delta, n).
LaurentPoly refined_count(const HTransverseDegree& delta, int n, const EnumerationOptions& options = {});

/// Sum of multiplicities; equals eval_at_one(refined_count(delta, n)).
Integer classical_count(const HTransverseDegree& delta, int n, const EnumerationOptions& options = {});

}  // namespace floorgw
