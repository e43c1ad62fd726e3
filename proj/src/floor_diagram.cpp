#include "floorgw/floor_diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "floorgw/errors.hpp"

namespace floorgw {

int MarkedFloorDiagram::bounded_edge_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const DiagramEdge& e) { return e.bounded(); }));
}

int MarkedFloorDiagram::first_betti_number() const {
  return bounded_edge_count() - static_cast<int>(vertex_positions.size()) + 1;
}

std::vector<std::string> structural_violations(const MarkedFloorDiagram& d) {
  std::vector<std::string> out;
  auto fail = [&out](std::string msg) { out.push_back(std::move(msg)); };

  const std::set<int> vertices(d.vertex_positions.begin(), d.vertex_positions.end());
  if (vertices.size() != d.vertex_positions.size()) fail("duplicate vertex position");
  if (!std::is_sorted(d.vertex_positions.begin(), d.vertex_positions.end())) fail("vertex positions not sorted");
  if (vertices.empty()) fail("a floor diagram needs at least one vertex");

  std::vector<int> seen(static_cast<std::size_t>(std::max(d.n, 0)) + 1, 0);
  auto mark = [&](int pos) {
    if (pos < 1 || pos > d.n) {
      fail("position " + std::to_string(pos) + " outside 1.." + std::to_string(d.n));
      return;
    }
    ++seen[static_cast<std::size_t>(pos)];
  };
  for (int v : d.vertex_positions) mark(v);
  for (const auto& e : d.edges) mark(e.position);
  for (int p = 1; p <= d.n; ++p)
    if (seen[static_cast<std::size_t>(p)] != 1)
      fail("position " + std::to_string(p) + " used " + std::to_string(seen[static_cast<std::size_t>(p)]) + " times");
  if (static_cast<int>(d.vertex_positions.size() + d.edges.size()) != d.n) fail("n != #vertices + #edges");

  if (d.vertex_divergence.size() != vertices.size()) fail("divergence map does not match the vertex set");
  for (const auto& [pos, div] : d.vertex_divergence)
    if (!vertices.contains(pos)) fail("divergence given for non-vertex " + std::to_string(pos));

  std::map<int, long> in_weight;
  std::map<int, long> out_weight;
  for (const auto& e : d.edges) {
    const std::string tag = "edge at " + std::to_string(e.position);
    if (e.weight < 1) fail(tag + " has non-positive weight");
    if (!e.source && !e.target) fail(tag + " has no endpoint");
    if (e.source) {
      if (!vertices.contains(*e.source)) fail(tag + " has non-vertex source");
      if (!(*e.source < e.position)) fail(tag + " does not follow its source");
      out_weight[*e.source] += e.weight;
    }
    if (e.target) {
      if (!vertices.contains(*e.target)) fail(tag + " has non-vertex target");
      if (!(e.position < *e.target)) fail(tag + " does not precede its target");
      in_weight[*e.target] += e.weight;
    }
  }
  if (!std::is_sorted(d.edges.begin(), d.edges.end(),
                      [](const DiagramEdge& a, const DiagramEdge& b) { return a.position < b.position; }))
    fail("edges not sorted by position");

  for (const auto& [pos, div] : d.vertex_divergence) {
    if (in_weight[pos] - out_weight[pos] != div)
      fail("vertex " + std::to_string(pos) + " has divergence " + std::to_string(in_weight[pos] - out_weight[pos]) +
           ", expected " + std::to_string(div));
  }

  // Connectivity over vertices through bounded edges; unbounded edges hang off a single vertex.
  if (!vertices.empty()) {
    std::map<int, int> parent;
    for (int v : vertices) parent[v] = v;
    auto find = [&parent](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& e : d.edges)
      if (e.bounded() && vertices.contains(*e.source) && vertices.contains(*e.target))
        parent[find(*e.source)] = find(*e.target);
    const int root = find(*vertices.begin());
    for (int v : vertices)
      if (find(v) != root) {
        fail("underlying graph is disconnected");
        break;
      }
  }
  return out;
}

std::vector<std::string> violations(const MarkedFloorDiagram& d, const HTransverseDegree& delta) {
  std::vector<std::string> out = structural_violations(d);
  int incoming = 0;
  int outgoing = 0;
  for (const auto& e : d.edges) {
    if (e.bounded()) continue;
    if (e.weight != 1) out.push_back("unbounded edge at " + std::to_string(e.position) + " has weight != 1");
    if (!e.source) ++incoming;
    if (!e.target) ++outgoing;
  }
  if (incoming != delta.d_b()) out.push_back("expected " + std::to_string(delta.d_b()) + " incoming unbounded edges");
  if (outgoing != delta.d_t()) out.push_back("expected " + std::to_string(delta.d_t()) + " outgoing unbounded edges");
  if (static_cast<int>(d.vertex_positions.size()) != delta.height())
    out.push_back("expected " + std::to_string(delta.height()) + " vertices");

  std::vector<int> sequence;
  for (int v : d.vertex_positions) {
    auto it = d.vertex_divergence.find(v);
    sequence.push_back(it == d.vertex_divergence.end() ? 0 : it->second);
  }
  const auto& allowed = delta.divergence_sequences();
  if (std::find(allowed.begin(), allowed.end(), sequence) == allowed.end())
    out.push_back("vertex divergences are not realizable from Delta");

  const int g = genus_for_points(delta, d.n);
  if (d.first_betti_number() != g)
    out.push_back("first Betti number " + std::to_string(d.first_betti_number()) + " != g_{Delta,n} = " +
                  std::to_string(g));
  return out;
}

Integer multiplicity(const MarkedFloorDiagram& d) {
  Integer m = 1;
  for (const auto& e : d.edges) m *= Integer(e.weight) * e.weight;
  return m;
}

LaurentPoly refined_multiplicity(const MarkedFloorDiagram& d) {
  LaurentPoly m(1);
  for (const auto& e : d.edges) {
    if (e.weight == 1) continue;
    const LaurentPoly q = q_integer(e.weight);
    m = m * q * q;
  }
  return m;
}

std::pair<Partition, Partition> vertex_partitions(const MarkedFloorDiagram& d, int vertex) {
  if (!std::binary_search(d.vertex_positions.begin(), d.vertex_positions.end(), vertex))
    throw DomainError("position " + std::to_string(vertex) + " is not a vertex");
  std::vector<int> outgoing;
  std::vector<int> incoming;
  for (const auto& e : d.edges) {
    if (e.source == vertex) outgoing.push_back(e.weight);
    if (e.target == vertex) incoming.push_back(e.weight);
  }
  return {Partition(std::move(outgoing)), Partition(std::move(incoming))};
}

std::string describe(const MarkedFloorDiagram& d) {
  std::ostringstream os;
  os << "n=" << d.n << " vertices{";
  for (std::size_t i = 0; i < d.vertex_positions.size(); ++i) {
    const int v = d.vertex_positions[i];
    os << (i ? " " : "") << v << ":" << d.vertex_divergence.at(v);
  }
  os << "} edges{";
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& e = d.edges[i];
    os << (i ? " " : "") << e.position << ":" << (e.source ? std::to_string(*e.source) : "-") << "->"
       << (e.target ? std::to_string(*e.target) : "-") << "/" << e.weight;
  }
  os << "}";
  return os.str();
}

}  // namespace floorgw
