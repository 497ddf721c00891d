#ifndef DRD_ENUMERATION_HPP
#define DRD_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace drd {

enum class Population { TwoCyclesOnly, AllBicyclic };

// Minimum upper-triangle adjacency bit string over all vertex permutations
// that respect the (degree, neighbor-degree) partition. Exhaustive, so only
// offered for n <= 10.
using CanonicalForm = std::uint64_t;
CanonicalForm canonical_form(const Graph& g);

// Streams every labeled connected graph on n vertices with n+1 edges whose
// classification matches the population, by iterating (n+1)-subsets of the
// edges of K_n. 5 <= n <= 8 by default; n = 9 only with allow_large.
void enumerate_bicyclic(
    int n, Population population,
    const std::function<void(const Graph&, BicyclicKind)>& visit,
    bool allow_large = false);

// Exact degree resistance distance by integer matrix-tree minors
// (fraction-free elimination); valid for the graph sizes enumeration uses.
Rational degree_resistance_small(const Graph& g);

struct ExtremalReport {
  int n = 0;
  Population population = Population::TwoCyclesOnly;
  long long count_labeled = 0;
  long long theta_count_labeled = 0;  // informational, AllBicyclic only
  Rational min_value;
  Rational max_value;
  // One labeled representative per isomorphism class attaining the extremum.
  std::map<CanonicalForm, EdgeList> min_attainers;
  std::map<CanonicalForm, EdgeList> max_attainers;
  Rational expected_min;  // closed_form_S33(n)
  Rational expected_max;  // closed_form_P33(n)
  bool agrees_min = false;
  bool agrees_max = false;
};

ExtremalReport extremal_search(int n, Population population, int jobs = 1,
                               bool allow_large = false);

struct WithinClassReport {
  int n = 0, p = 0, q = 0;
  long long count_labeled = 0;
  Rational min_value;
  Rational max_value;
  std::map<CanonicalForm, EdgeList> min_attainers;
  std::map<CanonicalForm, EdgeList> max_attainers;
  bool min_unique_is_S = false;
  bool max_unique_is_P = false;
  bool coincident = false;  // S and P coincide (zero-length path)
};

// Exhaustive check of the within-class extremality claims: over all
// two-cycle bicyclic graphs with cycle lengths (p, q) on n vertices, the
// minimum is attained exactly by S_n^{p,q} and the maximum by P_n^{p,q}.
WithinClassReport verify_within_class(int n, int p, int q);

const char* population_name(Population population);

}  // namespace drd

#endif
