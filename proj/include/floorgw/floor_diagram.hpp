#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floorgw/degree.hpp"
#include "floorgw/laurent.hpp"
#include "floorgw/partition.hpp"

namespace floorgw {

/// One edge of a marked floor diagram. A missing source marks an incoming
/// unbounded edge, a missing target an outgoing unbounded edge.
struct DiagramEdge {
  int position = 0;
  std::optional<int> source;
  std::optional<int> target;
  int weight = 1;

  bool bounded() const { return source.has_value() && target.has_value(); }
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// A floor diagram together with its marking. Elements are identified with
/// their marking positions 1..n; vertices (floors) and edges partition them.
/// The marking rigidifies the diagram, so two values compare equal exactly
/// when they are isomorphic marked diagrams.
struct MarkedFloorDiagram {
  int n = 0;
  std::vector<int> vertex_positions;  // sorted
  std::map<int, int> vertex_divergence;
  std::vector<DiagramEdge> edges;     // sorted by position

  int bounded_edge_count() const;
  int first_betti_number() const;

  friend bool operator==(const MarkedFloorDiagram&, const MarkedFloorDiagram&) = default;
  friend auto operator<=>(const MarkedFloorDiagram&, const MarkedFloorDiagram&) = default;
};

/// Structural problems with a diagram on its own (element partition, order
/// compatibility, divergence bookkeeping, connectivity). Empty means valid.
std::vector<std::string> structural_violations(const MarkedFloorDiagram& diagram);

/// Structural problems plus conformance to (Delta, n): unbounded edge
/// counts and weights, floor count, realizable divergences, Betti number.
std::vector<std::string> violations(const MarkedFloorDiagram& diagram, const HTransverseDegree& delta);

/// Product of w_E^2 over all edges.
Integer multiplicity(const MarkedFloorDiagram& diagram);

/// Product of [w_E]_q^2 over all edges.
LaurentPoly refined_multiplicity(const MarkedFloorDiagram& diagram);

/// (mu(V), nu(V)): weights of the outgoing and of the incoming edges at the floor V.
std::pair<Partition, Partition> vertex_partitions(const MarkedFloorDiagram& diagram, int vertex);

std::string describe(const MarkedFloorDiagram& diagram);

}  // namespace floorgw
