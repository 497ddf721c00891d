#include "graph.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace drd {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyCore: return "EmptyCore";
    case ErrorCode::InvalidCycle: return "InvalidCycle";
    case ErrorCode::CycleTooSmall: return "CycleTooSmall";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::EdgePresent: return "EdgePresent";
    case ErrorCode::Disconnects: return "Disconnects";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Graph::Graph(int n, const EdgeList& edges) : n_(n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw Error(ErrorCode::SelfLoop,
                  "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i] == edges_[i - 1])
      throw Error(ErrorCode::DuplicateEdge,
                  "duplicate edge (" + std::to_string(edges_[i].first) + "," +
                      std::to_string(edges_[i].second) + ")");
  adj_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
}

int Graph::check(int v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " out of range");
  return v;
}

bool Graph::has_edge(int u, int v) const {
  check(u);
  check(v);
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<std::vector<int>> shortest_distances(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> dist(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n), -1));
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<size_t>(s)];
    d[static_cast<size_t>(s)] = 0;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (d[static_cast<size_t>(w)] < 0) {
          d[static_cast<size_t>(w)] = d[static_cast<size_t>(u)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int w : g.neighbors(queue[head]))
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        queue.push_back(w);
      }
  return queue.size() == static_cast<size_t>(n);
}

TwoCore two_core(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<int> strip;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = g.degree(v);
    if (deg[static_cast<size_t>(v)] <= 1) strip.push_back(v);
  }
  for (size_t head = 0; head < strip.size(); ++head) {
    int v = strip[head];
    removed[static_cast<size_t>(v)] = 1;
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<size_t>(w)]) continue;
      if (--deg[static_cast<size_t>(w)] <= 1) {
        strip.push_back(w);
        removed[static_cast<size_t>(w)] = 1;
      }
    }
  }
  std::vector<int> original;
  std::vector<int> index(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<size_t>(v)]) {
      index[static_cast<size_t>(v)] = static_cast<int>(original.size());
      original.push_back(v);
    }
  if (original.empty()) throw Error(ErrorCode::EmptyCore, "graph is a forest");
  EdgeList edges;
  for (auto [u, v] : g.edges())
    if (index[static_cast<size_t>(u)] >= 0 && index[static_cast<size_t>(v)] >= 0)
      edges.emplace_back(index[static_cast<size_t>(u)],
                         index[static_cast<size_t>(v)]);
  return {Graph(static_cast<int>(original.size()), edges), std::move(original)};
}

namespace {

// Iterative Tarjan articulation points.
std::vector<int> articulation_points(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n)),
      parent(static_cast<size_t>(n), -1), child_count(static_cast<size_t>(n), 0);
  std::vector<char> cut(static_cast<size_t>(n), 0);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<size_t>(root)] >= 0) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    disc[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = timer++;
    while (!stack.empty()) {
      auto& [u, it] = stack.back();
      const auto& nb = g.neighbors(u);
      if (it < nb.size()) {
        int w = nb[it++];
        if (disc[static_cast<size_t>(w)] < 0) {
          parent[static_cast<size_t>(w)] = u;
          ++child_count[static_cast<size_t>(u)];
          disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
          stack.emplace_back(w, 0);
        } else if (w != parent[static_cast<size_t>(u)]) {
          low[static_cast<size_t>(u)] =
              std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
        }
      } else {
        stack.pop_back();
        int p = parent[static_cast<size_t>(u)];
        if (p >= 0) {
          low[static_cast<size_t>(p)] =
              std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(u)]);
          if (p != root && low[static_cast<size_t>(u)] >= disc[static_cast<size_t>(p)])
            cut[static_cast<size_t>(p)] = 1;
        }
      }
    }
    if (child_count[static_cast<size_t>(root)] > 1) cut[static_cast<size_t>(root)] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

// Recover one simple cycle via DFS back edge. The graph must contain a cycle.
std::vector<int> find_cycle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> parent(static_cast<size_t>(n), -2);
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<size_t>(root)] != -2) continue;
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    parent[static_cast<size_t>(root)] = -1;
    on_stack[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
      auto& [u, it] = stack.back();
      const auto& nb = g.neighbors(u);
      if (it < nb.size()) {
        int w = nb[it++];
        if (w == parent[static_cast<size_t>(u)]) continue;
        if (parent[static_cast<size_t>(w)] == -2) {
          parent[static_cast<size_t>(w)] = u;
          on_stack[static_cast<size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        } else if (on_stack[static_cast<size_t>(w)]) {
          std::vector<int> cycle;
          for (int x = u; x != w; x = parent[static_cast<size_t>(x)])
            cycle.push_back(x);
          cycle.push_back(w);
          return cycle;
        }
      } else {
        on_stack[static_cast<size_t>(u)] = 0;
        stack.pop_back();
      }
    }
  }
  throw Error(ErrorCode::PreconditionViolation, "acyclic graph");
}

}  // namespace

std::vector<int> cut_vertices(const Graph& g) {
  if (!is_connected(g))
    throw Error(ErrorCode::PreconditionViolation,
                "cut vertices defined on connected graphs only");
  return articulation_points(g);
}

BicyclicClass classify_bicyclic(const Graph& g) {
  BicyclicClass result;
  int n = g.vertex_count();
  if (n < 1 || g.edge_count() != n + 1 || !is_connected(g)) return result;
  TwoCore core = two_core(g);
  // For m = n+1 the 2-core is 2-connected exactly when the graph is
  // theta-type; a cut vertex in the core means two edge-disjoint cycles.
  if (articulation_points(core.core).empty()) {
    result.kind = BicyclicKind::Theta;
    return result;
  }
  result.kind = BicyclicKind::TwoCycles;
  BicyclicBase base = bicyclic_base(g);
  result.p = static_cast<int>(base.cycle_small.size());
  result.q = static_cast<int>(base.cycle_large.size());
  result.path_len = static_cast<int>(base.path.size()) - 1;
  return result;
}

BicyclicBase bicyclic_base(const Graph& g) {
  int n = g.vertex_count();
  if (g.edge_count() != n + 1 || !is_connected(g))
    throw Error(ErrorCode::PreconditionViolation, "graph is not bicyclic");
  TwoCore core = two_core(g);
  const Graph& c = core.core;

  std::vector<int> cycle1 = find_cycle(c);
  std::set<std::pair<int, int>> cycle1_edges;
  for (size_t i = 0; i < cycle1.size(); ++i) {
    int u = cycle1[i], v = cycle1[(i + 1) % cycle1.size()];
    cycle1_edges.insert({std::min(u, v), std::max(u, v)});
  }

  // Strip the first cycle's edges; the 2-core of the remainder is the second
  // cycle, and the leftover edges form the joining path.
  std::vector<int> deg(static_cast<size_t>(c.vertex_count()), 0);
  std::set<std::pair<int, int>> rest;
  for (auto e : c.edges())
    if (!cycle1_edges.count(e)) {
      rest.insert(e);
      ++deg[static_cast<size_t>(e.first)];
      ++deg[static_cast<size_t>(e.second)];
    }
  std::vector<std::vector<int>> radj(static_cast<size_t>(c.vertex_count()));
  for (auto [u, v] : rest) {
    radj[static_cast<size_t>(u)].push_back(v);
    radj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<char> gone(static_cast<size_t>(c.vertex_count()), 0);
  std::vector<int> strip;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (deg[static_cast<size_t>(v)] == 1) strip.push_back(v);
  std::set<std::pair<int, int>> path_edges;
  for (size_t head = 0; head < strip.size(); ++head) {
    int v = strip[head];
    gone[static_cast<size_t>(v)] = 1;
    for (int w : radj[static_cast<size_t>(v)]) {
      auto e = std::make_pair(std::min(v, w), std::max(v, w));
      if (!rest.count(e) || path_edges.count(e)) continue;
      path_edges.insert(e);
      if (--deg[static_cast<size_t>(w)] == 1 && !gone[static_cast<size_t>(w)])
        strip.push_back(w);
    }
  }
  std::set<std::pair<int, int>> cycle2_edges;
  for (auto e : rest)
    if (!path_edges.count(e)) cycle2_edges.insert(e);
  if (cycle2_edges.size() < 3)
    throw Error(ErrorCode::PreconditionViolation, "graph is not two-cycle bicyclic");

  // Walk the second cycle.
  std::vector<std::vector<int>> c2adj(static_cast<size_t>(c.vertex_count()));
  for (auto [u, v] : cycle2_edges) {
    c2adj[static_cast<size_t>(u)].push_back(v);
    c2adj[static_cast<size_t>(v)].push_back(u);
  }
  std::vector<int> cycle2;
  {
    int start = cycle2_edges.begin()->first;
    int prev = -1, cur = start;
    do {
      cycle2.push_back(cur);
      int next = (c2adj[static_cast<size_t>(cur)][0] != prev ||
                  c2adj[static_cast<size_t>(cur)].size() == 1)
                     ? c2adj[static_cast<size_t>(cur)][0]
                     : c2adj[static_cast<size_t>(cur)][1];
      prev = cur;
      cur = next;
    } while (cur != start);
  }

  // Joining path, ordered from the cycle1 contact to the cycle2 contact.
  std::vector<int> path;
  std::vector<char> on1(static_cast<size_t>(c.vertex_count()), 0),
      on2(static_cast<size_t>(c.vertex_count()), 0);
  for (int v : cycle1) on1[static_cast<size_t>(v)] = 1;
  for (int v : cycle2) on2[static_cast<size_t>(v)] = 1;
  if (path_edges.empty()) {
    int shared = -1;
    for (int v = 0; v < c.vertex_count(); ++v)
      if (on1[static_cast<size_t>(v)] && on2[static_cast<size_t>(v)]) shared = v;
    if (shared < 0)
      throw Error(ErrorCode::PreconditionViolation, "graph is not two-cycle bicyclic");
    path = {shared};
  } else {
    std::vector<std::vector<int>> padj(static_cast<size_t>(c.vertex_count()));
    for (auto [u, v] : path_edges) {
      padj[static_cast<size_t>(u)].push_back(v);
      padj[static_cast<size_t>(v)].push_back(u);
    }
    int contact1 = -1;
    for (auto [u, v] : path_edges) {
      if (on1[static_cast<size_t>(u)]) contact1 = u;
      if (on1[static_cast<size_t>(v)]) contact1 = v;
    }
    if (contact1 < 0)
      throw Error(ErrorCode::PreconditionViolation, "graph is not two-cycle bicyclic");
    int prev = -1, cur = contact1;
    path.push_back(cur);
    while (!on2[static_cast<size_t>(cur)]) {
      int next = -1;
      for (int w : padj[static_cast<size_t>(cur)])
        if (w != prev) next = w;
      if (next < 0)
        throw Error(ErrorCode::PreconditionViolation, "broken joining path");
      prev = cur;
      cur = next;
      path.push_back(cur);
    }
  }

  // Rotate cycles so the contact vertex comes first, and map back to the
  // vertex ids of the input graph.
  auto rotate_to = [](std::vector<int>& cycle, int v) {
    auto it = std::find(cycle.begin(), cycle.end(), v);
    std::rotate(cycle.begin(), it, cycle.end());
  };
  rotate_to(cycle1, path.front());
  rotate_to(cycle2, path.back());

  BicyclicBase base;
  auto remap = [&core](std::vector<int> vs) {
    for (int& v : vs) v = core.original[static_cast<size_t>(v)];
    return vs;
  };
  if (cycle1.size() <= cycle2.size()) {
    base.cycle_small = remap(cycle1);
    base.cycle_large = remap(cycle2);
    base.path = remap(path);
  } else {
    base.cycle_small = remap(cycle2);
    base.cycle_large = remap(cycle1);
    std::reverse(path.begin(), path.end());
    base.path = remap(path);
  }
  return base;
}

IdentifiedGraph identify_vertices(const Graph& g1, int u1, const Graph& g2,
                                  int u2) {
  if (u1 < 0 || u1 >= g1.vertex_count() || u2 < 0 || u2 >= g2.vertex_count())
    throw Error(ErrorCode::IndexOutOfRange, "identification vertex out of range");
  int n1 = g1.vertex_count();
  auto map2 = [&](int v) { return v == u2 ? u1 : (v < u2 ? n1 + v : n1 + v - 1); };
  EdgeList edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(map2(u), map2(v));
  return {Graph(n1 + g2.vertex_count() - 1, edges), u1};
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  EdgeList edges;
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "bad header line: " + line);
    } else {
      int u, v;
      if (!(row >> u >> v))
        throw Error(ErrorCode::ParseError, "bad edge line: " + line);
      edges.emplace_back(u, v);
    }
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing header line");
  if (static_cast<int>(edges.size()) != m)
    throw Error(ErrorCode::ParseError,
                "header promised " + std::to_string(m) + " edges, got " +
                    std::to_string(edges.size()));
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path);
  write_edge_list(out, g);
}

}  // namespace drd
