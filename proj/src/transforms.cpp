#include "transforms.hpp"

#include <algorithm>

#include "resistance.hpp"

namespace drd {

namespace {

struct PendantSite {
  int anchor;                 // the non-pendant neighbor u
  std::vector<int> pendants;  // degree-1 neighbors of v
};

// Pendant-star setting: v carries s >= 1 pendants and exactly one further
// neighbor u, and u lies on a cycle.
PendantSite pendant_site(const Graph& g, int v) {
  PendantSite site{-1, {}};
  for (int w : g.neighbors(v)) {
    if (g.degree(w) == 1) {
      site.pendants.push_back(w);
    } else {
      if (site.anchor >= 0)
        throw Error(ErrorCode::PreconditionViolation,
                    "vertex has more than one non-pendant neighbor");
      site.anchor = w;
    }
  }
  if (site.pendants.empty())
    throw Error(ErrorCode::PreconditionViolation, "vertex has no pendant edges");
  if (site.anchor < 0)
    throw Error(ErrorCode::PreconditionViolation, "vertex has no cycle-side neighbor");
  BicyclicBase base = bicyclic_base(g);  // also enforces TwoCycles
  auto on = [&](const std::vector<int>& cycle) {
    return std::find(cycle.begin(), cycle.end(), site.anchor) != cycle.end();
  };
  if (!on(base.cycle_small) && !on(base.cycle_large))
    throw Error(ErrorCode::PreconditionViolation,
                "the non-pendant neighbor does not lie on a cycle");
  return site;
}

EdgeList without_edges(const Graph& g, const EdgeList& removed) {
  EdgeList edges;
  for (auto [u, v] : g.edges()) {
    bool drop = false;
    for (auto [a, b] : removed)
      if ((u == std::min(a, b)) && (v == std::max(a, b))) drop = true;
    if (!drop) edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::Decreased: return "decreased";
    case Direction::Increased: return "increased";
    case Direction::Equal: return "equal";
  }
  return "unknown";
}

TransformOutcome compare_transform(const Graph& before, const Graph& after) {
  Rational a = invariants(before).degree_resistance;
  Rational b = invariants(after).degree_resistance;
  Direction dir = b < a   ? Direction::Decreased
                  : a < b ? Direction::Increased
                          : Direction::Equal;
  return {before, after, a, b, dir};
}

Graph sigma_transform(const Graph& g, int v) {
  PendantSite site = pendant_site(g, v);
  EdgeList removed;
  for (int x : site.pendants) removed.emplace_back(v, x);
  EdgeList edges = without_edges(g, removed);
  for (int x : site.pendants) edges.emplace_back(site.anchor, x);
  return Graph(g.vertex_count(), edges);
}

Graph pi_transform(const Graph& g, int v) {
  PendantSite site = pendant_site(g, v);
  EdgeList removed;
  for (int x : site.pendants) removed.emplace_back(v, x);
  EdgeList edges = without_edges(g, removed);
  int prev = v;
  for (int x : site.pendants) {
    edges.emplace_back(prev, x);
    prev = x;
  }
  return Graph(g.vertex_count(), edges);
}

Graph relocate_pendants(const Graph& g, int u, int w) {
  if (u == w)
    throw Error(ErrorCode::PreconditionViolation,
                "source and target vertices coincide");
  BicyclicBase base = bicyclic_base(g);
  if (base.path.size() != 1)
    throw Error(ErrorCode::PreconditionViolation,
                "the two cycles do not share a vertex");
  if (base.path[0] != w)
    throw Error(ErrorCode::PreconditionViolation,
                "target is not the common vertex of the cycles");
  bool on_cycle =
      std::find(base.cycle_small.begin(), base.cycle_small.end(), u) !=
          base.cycle_small.end() ||
      std::find(base.cycle_large.begin(), base.cycle_large.end(), u) !=
          base.cycle_large.end();
  if (!on_cycle)
    throw Error(ErrorCode::PreconditionViolation, "source vertex is not on a cycle");
  std::vector<int> pendants;
  for (int x : g.neighbors(u))
    if (g.degree(x) == 1) pendants.push_back(x);
  if (pendants.empty())
    throw Error(ErrorCode::PreconditionViolation, "source vertex has no pendants");
  EdgeList removed;
  for (int x : pendants) removed.emplace_back(u, x);
  EdgeList edges = without_edges(g, removed);
  for (int x : pendants) edges.emplace_back(w, x);
  return Graph(g.vertex_count(), edges);
}

Graph rewire_edge(const Graph& g, std::pair<int, int> remove,
                  std::pair<int, int> add) {
  if (!g.has_edge(remove.first, remove.second))
    throw Error(ErrorCode::EdgeAbsent, "edge to remove is not present");
  if (add.first == add.second)
    throw Error(ErrorCode::EdgePresent, "edge to add is a self-loop");
  bool same = std::minmax(remove.first, remove.second) ==
              std::minmax(add.first, add.second);
  if (!same && g.has_edge(add.first, add.second))
    throw Error(ErrorCode::EdgePresent, "edge to add is already present");
  EdgeList edges = without_edges(g, {remove});
  edges.emplace_back(add.first, add.second);
  Graph out(g.vertex_count(), edges);
  if (!is_connected(out))
    throw Error(ErrorCode::Disconnects, "rewiring disconnects the graph");
  return out;
}

Graph contract_to_pendant(const Graph& g, std::pair<int, int> e) {
  BicyclicBase base = bicyclic_base(g);
  if (base.path.size() < 2)
    throw Error(ErrorCode::PreconditionViolation, "the joining path has no edges");
  bool on_path = false;
  for (size_t i = 0; i + 1 < base.path.size(); ++i) {
    if (std::minmax(base.path[i], base.path[i + 1]) ==
        std::minmax(e.first, e.second))
      on_path = true;
  }
  if (!on_path)
    throw Error(ErrorCode::PreconditionViolation,
                "edge is not on the joining path");
  int keep = std::min(e.first, e.second);
  int gone = std::max(e.first, e.second);
  auto map = [&](int v) {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  EdgeList edges;
  for (auto [u, v] : g.edges()) {
    if (u == keep && v == gone) continue;
    edges.emplace_back(map(u), map(v));
  }
  // The contraction frees index n-1; the new pendant takes it.
  edges.emplace_back(map(keep), g.vertex_count() - 1);
  return Graph(g.vertex_count(), edges);
}

Graph cycle_shrink(const Graph& g, int which) {
  if (which != 0 && which != 1)
    throw Error(ErrorCode::InvalidArgument, "cycle selector must be 0 or 1");
  BicyclicBase base = bicyclic_base(g);
  const std::vector<int>& cycle = which == 0 ? base.cycle_small : base.cycle_large;
  if (cycle.size() < 4)
    throw Error(ErrorCode::CycleTooSmall, "cannot shrink a triangle");
  int path_len = static_cast<int>(base.path.size()) - 1;
  int core_size = static_cast<int>(base.cycle_small.size() +
                                   base.cycle_large.size()) +
                  path_len - 1;

  int w = base.path.size() == 1
              ? base.path[0]
              : (which == 0 ? base.path.front() : base.path.back());
  if (cycle.front() != w)
    throw Error(ErrorCode::PreconditionViolation,
                "selected cycle does not meet the base contact vertex");

  if (base.path.size() == 1) {
    // Shared-vertex structure: everything off the core must be a pendant
    // at w, matching the configuration the shrink move is defined on.
    for (int v = 0; v < g.vertex_count(); ++v) {
      bool in_core =
          std::find(base.cycle_small.begin(), base.cycle_small.end(), v) !=
              base.cycle_small.end() ||
          std::find(base.cycle_large.begin(), base.cycle_large.end(), v) !=
              base.cycle_large.end();
      if (in_core) continue;
      if (g.degree(v) != 1 || g.neighbors(v)[0] != w)
        throw Error(ErrorCode::PreconditionViolation,
                    "attachments other than pendants at the common vertex");
    }
    // Successive vertices u1, u2 next to w; the lower-indexed neighbor of w
    // is displaced and becomes a pendant at w.
    int a = cycle[1], b = cycle[cycle.size() - 1];
    int u1 = std::min(a, b);
    int u2 = u1 == a ? cycle[2] : cycle[cycle.size() - 2];
    EdgeList edges = without_edges(g, {{u1, u2}});
    edges.emplace_back(w, u2);
    return Graph(g.vertex_count(), edges);
  }

  // Joining-path structure: require the bare dumbbell, no attached trees.
  if (g.vertex_count() != core_size)
    throw Error(ErrorCode::PreconditionViolation,
                "graph carries trees outside the two cycles and the path");
  int a = cycle[1], b = cycle[cycle.size() - 1];
  int u1 = std::min(a, b);
  int u2 = std::max(a, b);
  EdgeList edges = without_edges(g, {{w, u2}});
  edges.emplace_back(u1, u2);
  return Graph(g.vertex_count(), edges);
}

}  // namespace drd
