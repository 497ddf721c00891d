#ifndef DRD_TRANSFORMS_HPP
#define DRD_TRANSFORMS_HPP

#include "graph.hpp"
#include "rational.hpp"

namespace drd {

enum class Direction { Decreased, Increased, Equal };

// Before/after record for one graph surgery, with the exact degree
// resistance distance comparison.
struct TransformOutcome {
  Graph before;
  Graph after;
  Rational dr_before;
  Rational dr_after;
  Direction direction;
};

TransformOutcome compare_transform(const Graph& before, const Graph& after);

// Moves the pendant star at v onto v's cycle neighbor u.
Graph sigma_transform(const Graph& g, int v);

// Replaces the pendant star at v by a pendant path starting at v.
Graph pi_transform(const Graph& g, int v);

// Moves all pendants from cycle vertex u to the common vertex w of the two
// cycles.
Graph relocate_pendants(const Graph& g, int u, int w);

// Generic single-edge rewiring with simplicity and connectivity checks.
Graph rewire_edge(const Graph& g, std::pair<int, int> remove,
                  std::pair<int, int> add);

// Contracts a joining-path edge and attaches a fresh pendant at the merged
// vertex, preserving vertex and edge counts.
Graph contract_to_pendant(const Graph& g, std::pair<int, int> e);

// Shrinks the selected cycle (0 = shorter, 1 = longer) by one vertex. With
// the cycles sharing a vertex w the displaced vertex becomes a pendant at w;
// with a joining path the contact vertex slides onto the path.
Graph cycle_shrink(const Graph& g, int which);

const char* direction_name(Direction d);

}  // namespace drd

#endif
