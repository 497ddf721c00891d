#ifndef DRD_GRAPH_HPP
#define DRD_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace drd {

using EdgeList = std::vector<std::pair<int, int>>;

// Simple, loopless, undirected graph over dense vertex indices 0..n-1.
// Immutable after construction; every operation below is a pure function.
class Graph {
 public:
  Graph(int n, const EdgeList& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
  bool has_edge(int u, int v) const;
  // Edges normalized to u < v, sorted lexicographically.
  const EdgeList& edges() const { return edges_; }

 private:
  int check(int v) const;
  int n_;
  EdgeList edges_;
  std::vector<std::vector<int>> adj_;
};

enum class BicyclicKind { NotBicyclic, TwoCycles, Theta };

struct BicyclicClass {
  BicyclicKind kind = BicyclicKind::NotBicyclic;
  // Cycle lengths with p <= q, and the edge count of the joining path
  // (0 when the cycles share a vertex). Valid only for TwoCycles.
  int p = 0;
  int q = 0;
  int path_len = 0;
};

// Structural decomposition of a TwoCycles graph, computed on the 2-core.
struct BicyclicBase {
  std::vector<int> cycle_small;  // vertices of the shorter cycle, in order
  std::vector<int> cycle_large;  // vertices of the longer cycle, in order
  std::vector<int> path;         // contact-to-contact path, inclusive; one
                                 // vertex when the cycles share it
};

struct TwoCore {
  Graph core;
  std::vector<int> original;  // core vertex -> vertex of the input graph
};

struct IdentifiedGraph {
  Graph graph;
  int merged;  // index of the merged vertex
};

// Hop-count matrix, -1 for unreachable pairs.
std::vector<std::vector<int>> shortest_distances(const Graph& g);

bool is_connected(const Graph& g);

// Maximal subgraph of minimum degree >= 2. Throws EmptyCore on trees.
TwoCore two_core(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);

BicyclicClass classify_bicyclic(const Graph& g);

// Cycle/path decomposition for a graph already known to be TwoCycles.
// Vertices refer to the input graph. Throws PreconditionViolation otherwise.
BicyclicBase bicyclic_base(const Graph& g);

// Disjoint union with u1 (of g1) and u2 (of g2) merged. Vertices of g1 keep
// their indices; vertices of g2 are shifted past them, except u2.
IdentifiedGraph identify_vertices(const Graph& g1, int u1, const Graph& g2,
                                  int u2);

// Edge-list text format: "n m" header, then one "u v" line per edge.
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace drd

#endif
