#include "floorgw/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <iterator>
#include <numeric>

#include "floorgw/errors.hpp"

namespace floorgw {

namespace {

struct SweepState {
  int pos = 1;
  std::vector<int> vertex_pos;
  std::vector<int> budget;
  std::vector<int> divergence;
  std::vector<DiagramEdge> edges;
  std::vector<std::size_t> pending;  // edge indices awaiting a target, by position
  int incoming_used = 0;
  int outgoing_used = 0;
  int bounded_used = 0;
};

class Sweep {
 public:
  Sweep(const HTransverseDegree& delta, int n)
      : delta_(delta), n_(n), h_(delta.height()), bounded_total_(genus_for_points(delta, n) + delta.height() - 1) {}

  // Runs to completion from `state`, appending finished diagrams to `out`.
  void complete(SweepState& state, std::vector<MarkedFloorDiagram>& out) {
    results_ = &out;
    frontier_ = nullptr;
    visit(state);
  }

  // Collects every live state whose next position is `stop_pos`, in sweep order.
  void collect_frontier(SweepState& state, int stop_pos, std::vector<SweepState>& frontier,
                        std::vector<MarkedFloorDiagram>& finished_early) {
    results_ = &finished_early;
    frontier_ = &frontier;
    stop_pos_ = stop_pos;
    visit(state);
  }

 private:
  void descend(SweepState& s) {
    if (frontier_ && s.pos == stop_pos_) {
      frontier_->push_back(s);
      return;
    }
    visit(s);
  }

  bool viable(const SweepState& s) const {
    const int vertices_left = h_ - static_cast<int>(s.vertex_pos.size());
    if (vertices_left == 0) {
      // Only outgoing unbounded edges can still be placed.
      if (!s.pending.empty() || s.incoming_used != delta_.d_b() || s.bounded_used != bounded_total_) return false;
      const int spare = std::accumulate(s.budget.begin(), s.budget.end(), 0);
      const int positions_left = n_ - s.pos + 1;
      return spare == delta_.d_t() - s.outgoing_used && spare == positions_left;
    }
    return true;
  }

  void visit(SweepState& s) {
    if (!viable(s)) return;
    if (s.pos > n_) {
      finish(s);
      return;
    }
    const int pos = s.pos;
    ++s.pos;

    // Incoming unbounded edge.
    if (s.incoming_used < delta_.d_b()) {
      s.edges.push_back({pos, std::nullopt, std::nullopt, 1});
      s.pending.push_back(s.edges.size() - 1);
      ++s.incoming_used;
      descend(s);
      --s.incoming_used;
      s.pending.pop_back();
      s.edges.pop_back();
    }

    // Bounded edge out of a placed vertex.
    if (s.bounded_used < bounded_total_) {
      for (std::size_t v = 0; v < s.vertex_pos.size(); ++v) {
        const int budget = s.budget[v];
        for (int w = 1; w <= budget; ++w) {
          s.edges.push_back({pos, s.vertex_pos[v], std::nullopt, w});
          s.pending.push_back(s.edges.size() - 1);
          s.budget[v] -= w;
          ++s.bounded_used;
          descend(s);
          --s.bounded_used;
          s.budget[v] += w;
          s.pending.pop_back();
          s.edges.pop_back();
        }
      }
    }

    // Outgoing unbounded edge.
    if (s.outgoing_used < delta_.d_t()) {
      for (std::size_t v = 0; v < s.vertex_pos.size(); ++v) {
        if (s.budget[v] < 1) continue;
        s.edges.push_back({pos, s.vertex_pos[v], std::nullopt, 1});
        --s.budget[v];
        ++s.outgoing_used;
        descend(s);
        --s.outgoing_used;
        ++s.budget[v];
        s.edges.pop_back();
      }
    }

    // Vertex.
    if (static_cast<int>(s.vertex_pos.size()) < h_) {
      for (int div : candidate_divergences(s)) {
        std::vector<std::size_t> chosen;
        place_vertex(s, pos, div, 0, 0, chosen);
      }
    }
    --s.pos;
  }

  std::vector<int> candidate_divergences(const SweepState& s) const {
    std::vector<int> values;
    const std::size_t rank = s.divergence.size();
    for (const auto& seq : delta_.divergence_sequences()) {
      if (std::equal(s.divergence.begin(), s.divergence.end(), seq.begin())) values.push_back(seq[rank]);
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  // Enumerates subsets of pending heads in lexicographic order of positions:
  // the current subset first, then each extension by a later head.
  void place_vertex(SweepState& s, int pos, int div, std::size_t next, int absorbed,
                    std::vector<std::size_t>& chosen) {
    attach_and_descend(s, pos, div, absorbed, chosen);
    for (std::size_t i = next; i < s.pending.size(); ++i) {
      chosen.push_back(s.pending[i]);
      place_vertex(s, pos, div, i + 1, absorbed + s.edges[s.pending[i]].weight, chosen);
      chosen.pop_back();
    }
  }

  void attach_and_descend(SweepState& s, int pos, int div, int absorbed, const std::vector<std::size_t>& chosen) {
    const int budget = absorbed - div;
    if (budget < 0) return;
    // An isolated floor can never be connected to the others.
    if (chosen.empty() && budget == 0 && h_ >= 2) return;

    const std::vector<std::size_t> saved_pending = s.pending;
    for (std::size_t idx : chosen) s.edges[idx].target = pos;
    std::vector<std::size_t> remaining;
    remaining.reserve(s.pending.size() - chosen.size());
    std::set_difference(s.pending.begin(), s.pending.end(), chosen.begin(), chosen.end(),
                        std::back_inserter(remaining));
    s.pending = std::move(remaining);
    s.vertex_pos.push_back(pos);
    s.budget.push_back(budget);
    s.divergence.push_back(div);

    descend(s);

    s.divergence.pop_back();
    s.budget.pop_back();
    s.vertex_pos.pop_back();
    s.pending = saved_pending;
    for (std::size_t idx : chosen) s.edges[idx].target.reset();
  }

  void finish(const SweepState& s) {
    if (static_cast<int>(s.vertex_pos.size()) != h_ || !s.pending.empty()) return;
    if (s.incoming_used != delta_.d_b() || s.outgoing_used != delta_.d_t() || s.bounded_used != bounded_total_)
      return;
    if (std::any_of(s.budget.begin(), s.budget.end(), [](int b) { return b != 0; })) return;

    std::vector<int> parent(s.vertex_pos.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto rank_of = [&s](int pos) {
      return static_cast<int>(std::lower_bound(s.vertex_pos.begin(), s.vertex_pos.end(), pos) - s.vertex_pos.begin());
    };
    auto find = [&parent](int v) {
      while (parent[static_cast<std::size_t>(v)] != v)
        v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      return v;
    };
    for (const auto& e : s.edges)
      if (e.bounded()) parent[static_cast<std::size_t>(find(rank_of(*e.source)))] = find(rank_of(*e.target));
    for (std::size_t v = 1; v < parent.size(); ++v)
      if (find(static_cast<int>(v)) != find(0)) return;

    MarkedFloorDiagram d;
    d.n = n_;
    d.vertex_positions = s.vertex_pos;
    for (std::size_t v = 0; v < s.vertex_pos.size(); ++v) d.vertex_divergence[s.vertex_pos[v]] = s.divergence[v];
    d.edges = s.edges;
    results_->push_back(std::move(d));
  }

  const HTransverseDegree& delta_;
  int n_;
  int h_;
  int bounded_total_;
  std::vector<MarkedFloorDiagram>* results_ = nullptr;
  std::vector<SweepState>* frontier_ = nullptr;
  int stop_pos_ = 0;
};

}  // namespace

std::vector<MarkedFloorDiagram> enumerate_marked(const HTransverseDegree& delta, int n,
                                                 const EnumerationOptions& options) {
  const int g = genus_for_points(delta, n);
  if (g < 0) {
    throw DomainError("g_{Delta,n} = " + std::to_string(g) + " < 0 for " + delta.describe() + ", n = " +
                      std::to_string(n));
  }
  std::vector<MarkedFloorDiagram> out;
  // Without floors nothing can hold the unbounded edges together.
  if (delta.height() == 0) return out;

  SweepState root;
  if (options.workers <= 1 || n < 4) {
    Sweep(delta, n).complete(root, out);
    return out;
  }

  // Split at a fixed depth; concatenating branch results in frontier order
  // reproduces the sequential output exactly.
  std::vector<SweepState> frontier;
  std::vector<MarkedFloorDiagram> early;
  const int stop_pos = std::min(n, 4) + 1;
  Sweep(delta, n).collect_frontier(root, stop_pos, frontier, early);

  std::vector<std::vector<MarkedFloorDiagram>> parts(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Sweep sweep(delta, n);
    for (std::size_t i = next++; i < frontier.size(); i = next++) sweep.complete(frontier[i], parts[i]);
  };
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < options.workers; ++w) jobs.push_back(std::async(std::launch::async, worker));
  for (auto& job : jobs) job.get();

  // Frontier states sit at a position <= n, so no diagram finishes before the split.
  out = std::move(early);
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

LaurentPoly refined_count(const HTransverseDegree& delta, int n, const EnumerationOptions& options) {
  LaurentPoly total;
  for (const auto& d : enumerate_marked(delta, n, options)) total += refined_multiplicity(d);
  return total;
}

Integer classical_count(const HTransverseDegree& delta, int n, const EnumerationOptions& options) {
  Integer total = 0;
  for (const auto& d : enumerate_marked(delta, n, options)) total += multiplicity(d);
  return total;
}

}  // namespace floorgw
