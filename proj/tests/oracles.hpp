// Independent reference computations the unit tests compare against.
// Everything here is deliberately naive; correctness over speed.

#ifndef TESTS_ORACLES_HPP
#define TESTS_ORACLES_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "graph.hpp"

namespace oracles {

// Counts simple cycles by backtracking over paths whose interior vertices
// all exceed the root, so each cycle is found exactly twice (once per
// direction) from its smallest vertex.
inline int simple_cycle_count(const drd::Graph& g) {
  int n = g.vertex_count();
  int doubled = 0;
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int root, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) ++doubled;
      if (w <= root || used[static_cast<size_t>(w)]) continue;
      used[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      self(self, root, w);
      path.pop_back();
      used[static_cast<size_t>(w)] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    path = {root};
    dfs(dfs, root, root);
  }
  return doubled / 2;
}

inline drd::Graph relabel(const drd::Graph& g, const std::vector<int>& perm) {
  drd::EdgeList edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<size_t>(u)],
                       perm[static_cast<size_t>(v)]);
  return drd::Graph(g.vertex_count(), edges);
}

inline drd::Graph random_relabel(const drd::Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<size_t>(g.vertex_count()));
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace oracles

#endif
