#ifndef DRD_FAMILIES_HPP
#define DRD_FAMILIES_HPP

#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace drd {

// Parametrization of a two-cycle bicyclic graph: cycles of lengths p and q
// joined by a path of m edges, with rooted trees attached to base vertices.
//
// Base vertex roles: "c1:i" (position i on the first cycle, contact at 0),
// "c2:j" (position j on the second cycle, contact at 0), "path:k" (interior
// path vertex k, 1 <= k <= m-1). Tree vertex 0 is the root, identified with
// the base vertex.
struct BicyclicShape {
  int p = 3;
  int q = 3;
  int m = 0;
  struct Attachment {
    std::string at;
    EdgeList tree_edges;
  };
  std::vector<Attachment> attachments;
};

struct PClosedForm {
  Rational raw;          // pre-substitution expression with m = n+1-p-q
  Rational printed_eq2;  // the final displayed formula, evaluated verbatim
};

Graph make_cycle(int k);
Graph make_path(int k);  // path on k vertices

// Two cycles sharing one vertex, with n+1-p-q pendant edges at it.
Graph make_S(int n, int p, int q);

// Two disjoint cycles joined by a path of n+1-p-q edges; reduces to make_S
// when the path length is zero.
Graph make_P(int n, int p, int q);

Graph make_B(const BicyclicShape& shape);

BicyclicShape shape_from_json(const std::string& text);

// Degree resistance distance of S_n^{p,q}:
// (1/3)[-p^3 - q^3 + (2n+1)(p^2+q^2) + (1-9n)(p+q) + 9n^2 + 5n - 2]
Rational closed_form_S(int n, int p, int q);

// Degree resistance distance of P_n^{p,q}. `raw` is the value that matches
// direct computation; `printed_eq2` is the final printed display, kept so
// the discrepancy stays reproducible.
PClosedForm closed_form_P(int n, int p, int q);

// 3n^2 - 13n/3 - 32/3, the global minimum over two-cycle bicyclic graphs.
Rational closed_form_S33(int n);

// (2/3)n^3 + n^2 - 19n + 88/3, the global maximum.
Rational closed_form_P33(int n);

}  // namespace drd

#endif
