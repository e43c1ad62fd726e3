#include "floorgw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "floorgw/errors.hpp"

namespace floorgw::oracle {

namespace {

struct BoundedType {
  int lower;  // source floor rank
  int upper;  // target floor rank
  int weight;
};

// All length-`parts` sequences of nonnegative integers summing to `total`.
std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == parts - 1) {
      cur[static_cast<std::size_t>(i)] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

// Can floors with these divergences be given distinct left and right vectors?
bool realizable(const std::vector<int>& divergence, std::vector<int> lefts, std::vector<int> rights) {
  std::vector<bool> used_l(lefts.size(), false);
  std::vector<bool> used_r(rights.size(), false);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v == divergence.size()) return true;
    for (std::size_t i = 0; i < lefts.size(); ++i) {
      if (used_l[i]) continue;
      for (std::size_t j = 0; j < rights.size(); ++j) {
        if (used_r[j] || lefts[i] + rights[j] != divergence[v]) continue;
        used_l[i] = used_r[j] = true;
        if (rec(v + 1)) return true;
        used_l[i] = used_r[j] = false;
      }
    }
    return false;
  };
  return rec(0);
}

bool connected(int floors, const std::vector<BoundedType>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(floors));
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.lower)].push_back(e.upper);
    adj[static_cast<std::size_t>(e.upper)].push_back(e.lower);
  }
  std::vector<bool> seen(static_cast<std::size_t>(floors), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++count;
      q.push(w);
    }
  }
  return count == floors;
}

// A token is one kind of non-floor element still to be placed.
struct Token {
  std::optional<int> source_rank;
  std::optional<int> target_rank;
  int weight;
  int remaining;
};

void place_markings(int n, int floors, const std::vector<int>& divergence, std::vector<Token> tokens,
                    std::vector<MarkedFloorDiagram>& out) {
  std::vector<int> vpos(static_cast<std::size_t>(floors));
  std::vector<DiagramEdge> edges;

  std::function<void(int)> assign;  // fills non-floor position p onward
  assign = [&](int p) {
    if (p > n) {
      MarkedFloorDiagram d;
      d.n = n;
      d.vertex_positions = vpos;
      for (int r = 0; r < floors; ++r) d.vertex_divergence[vpos[static_cast<std::size_t>(r)]] = divergence[static_cast<std::size_t>(r)];
      d.edges = edges;
      out.push_back(std::move(d));
      return;
    }
    if (std::binary_search(vpos.begin(), vpos.end(), p)) {
      assign(p + 1);
      return;
    }
    for (auto& t : tokens) {
      if (t.remaining == 0) continue;
      if (t.source_rank && !(vpos[static_cast<std::size_t>(*t.source_rank)] < p)) continue;
      if (t.target_rank && !(p < vpos[static_cast<std::size_t>(*t.target_rank)])) continue;
      --t.remaining;
      DiagramEdge e;
      e.position = p;
      if (t.source_rank) e.source = vpos[static_cast<std::size_t>(*t.source_rank)];
      if (t.target_rank) e.target = vpos[static_cast<std::size_t>(*t.target_rank)];
      e.weight = t.weight;
      edges.push_back(e);
      assign(p + 1);
      edges.pop_back();
      ++t.remaining;
    }
  };

  // Choose the floor positions, increasing.
  std::function<void(int, int)> choose = [&](int r, int from) {
    if (r == floors) {
      assign(1);
      return;
    }
    for (int p = from; p <= n - (floors - r - 1); ++p) {
      vpos[static_cast<std::size_t>(r)] = p;
      choose(r + 1, p + 1);
    }
  };
  choose(0, 1);
}

}  // namespace

std::vector<MarkedFloorDiagram> brute_force_enumerate(const HTransverseDegree& delta, int n,
                                                      const OracleConfig& config) {
  if (n > config.max_elements) {
    throw DomainError("oracle cap exceeded: n = " + std::to_string(n) + " > " + std::to_string(config.max_elements));
  }
  if (config.max_weight < 0) throw DomainError("oracle: max_weight must be positive, or 0 for the default");
  int d_b = 0;
  int d_t = 0;
  std::vector<int> lefts;
  std::vector<int> rights;
  for (const Vec2& v : delta.vectors()) {
    if (v.x == 0) (v.y < 0 ? d_b : d_t) += 1;
    else (v.x < 0 ? lefts : rights).push_back(v.y);
  }
  const int floors = static_cast<int>(lefts.size());
  const int size = d_b + d_t + 2 * floors;
  const int genus = n + 1 - size;
  if (genus < 0) throw DomainError("oracle: negative genus for n = " + std::to_string(n));
  std::vector<MarkedFloorDiagram> out;
  if (floors == 0) return out;
  const int bounded_count = genus + floors - 1;

  int max_weight = config.max_weight;
  if (max_weight <= 0) {
    int deficit = 0;
    for (int l : lefts)
      for (int r : rights) deficit = std::max(deficit, -(l + r));
    max_weight = std::max(1, d_b + floors * deficit);
  }

  std::vector<BoundedType> types;
  for (int i = 0; i < floors; ++i)
    for (int j = i + 1; j < floors; ++j)
      for (int w = 1; w <= max_weight; ++w) types.push_back({i, j, w});
  if (bounded_count > 0 && types.empty()) return out;

  const auto ins = compositions(d_b, floors);
  const auto outs = compositions(d_t, floors);

  // Multisets of bounded edge types, as nondecreasing index sequences.
  std::vector<std::size_t> pick(static_cast<std::size_t>(bounded_count), 0);
  std::function<void(int, std::size_t)> multisets = [&](int slot, std::size_t from) {
    if (slot < bounded_count) {
      for (std::size_t t = from; t < types.size(); ++t) {
        pick[static_cast<std::size_t>(slot)] = t;
        multisets(slot + 1, t);
      }
      return;
    }
    std::vector<BoundedType> chosen;
    for (std::size_t t : pick) chosen.push_back(types[t]);
    if (!connected(floors, chosen)) return;
    for (const auto& in : ins) {
      for (const auto& outgoing : outs) {
        std::vector<int> divergence(static_cast<std::size_t>(floors), 0);
        for (int r = 0; r < floors; ++r)
          divergence[static_cast<std::size_t>(r)] = in[static_cast<std::size_t>(r)] - outgoing[static_cast<std::size_t>(r)];
        for (const auto& e : chosen) {
          divergence[static_cast<std::size_t>(e.upper)] += e.weight;
          divergence[static_cast<std::size_t>(e.lower)] -= e.weight;
        }
        if (!realizable(divergence, lefts, rights)) continue;

        std::vector<Token> tokens;
        for (std::size_t t = 0; t < pick.size();) {
          std::size_t u = t;
          while (u < pick.size() && pick[u] == pick[t]) ++u;
          const auto& ty = types[pick[t]];
          tokens.push_back({ty.lower, ty.upper, ty.weight, static_cast<int>(u - t)});
          t = u;
        }
        for (int r = 0; r < floors; ++r) {
          if (in[static_cast<std::size_t>(r)] > 0) tokens.push_back({std::nullopt, r, 1, in[static_cast<std::size_t>(r)]});
          if (outgoing[static_cast<std::size_t>(r)] > 0)
            tokens.push_back({r, std::nullopt, 1, outgoing[static_cast<std::size_t>(r)]});
        }
        place_markings(n, floors, divergence, tokens, out);
      }
    }
  };
  multisets(0, 0);

  std::sort(out.begin(), out.end());
  return out;
}

LaurentPoly brute_force_refined_count(const HTransverseDegree& delta, int n, const OracleConfig& config) {
  LaurentPoly total;
  for (const auto& d : brute_force_enumerate(delta, n, config)) {
    LaurentPoly m(1);
    for (const auto& e : d.edges) {
      const LaurentPoly q = q_integer(e.weight);
      m = m * q * q;
    }
    total += m;
  }
  return total;
}

}  // namespace floorgw::oracle
