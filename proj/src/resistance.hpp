#ifndef DRD_RESISTANCE_HPP
#define DRD_RESISTANCE_HPP

#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace drd {

// Exact all-pairs effective resistances of a connected graph with unit
// resistors on every edge.
class ResistanceMatrix {
 public:
  explicit ResistanceMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * n) {}
  int size() const { return n_; }
  const Rational& at(int u, int v) const {
    return entries_[static_cast<size_t>(u) * n_ + v];
  }
  Rational& at(int u, int v) { return entries_[static_cast<size_t>(u) * n_ + v]; }

 private:
  int n_;
  std::vector<Rational> entries_;
};

struct InvariantReport {
  Rational wiener;
  Rational kirchhoff;
  Rational degree_distance;
  Rational degree_resistance;
  std::vector<Rational> kf_v;  // per-vertex resistance sums, Kf_v
  std::vector<Rational> d_v;   // per-vertex degree-weighted sums, D_v
};

struct CycleClosedForms {
  Rational kf;    // (k^3 - k) / 12
  Rational dr;    // (k^3 - k) / 3
  Rational kf_v;  // (k^2 - 1) / 6
  Rational d_v;   // (k^2 - 1) / 3
};

// Solves the Laplacian grounded at vertex 0 by exact Gauss-Jordan
// elimination, then r(u,v) = M(u,u) + M(v,v) - 2 M(u,v).
ResistanceMatrix resistance_matrix(const Graph& g);

Rational effective_resistance(const Graph& g, int u, int v);

InvariantReport invariants(const Graph& g);

CycleClosedForms cycle_closed_forms(int k);

// Resistance between positions i and j (1-based, i < j) on a k-cycle:
// (j - i)(k + i - j) / k.
Rational cycle_pair_resistance(int k, int i, int j);

// Degree resistance distance of the graph obtained by identifying u1 of g1
// with u2 of g2, via the cut-vertex composition formula rather than a direct
// solve. Cross-check counterpart of invariants(identify_vertices(...)).
Rational compose_identified(const Graph& g1, int u1, const Graph& g2, int u2);

}  // namespace drd

#endif
