#ifndef DRD_VERIFY_HPP
#define DRD_VERIFY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace drd {

constexpr std::uint64_t kDefaultSeed = 42;

struct SuiteCheck {
  std::string name;
  long long instances = 0;
  long long strict = 0;  // strict inequalities in the stated direction
  long long equal = 0;   // documented boundary cases
  bool passed = false;
  std::vector<std::string> failures;  // counterexample edge lists
};

struct SuiteReport {
  std::string suite;
  bool passed = false;
  std::vector<SuiteCheck> checks;
};

// Seeded reproducible generators used by the verification campaigns.
Graph random_tree(std::mt19937_64& rng, int n);
Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges);

// Property campaigns: cut-vertex additivity, cycle closed forms, the
// vertex-identification composition formula, and the four transformation
// inequalities, each on seeded generated configurations.
SuiteReport verify_lemmas(std::uint64_t seed, int transform_instances = 250);

// Extremality checks at one n: formula anchors, within-class min/max for
// every feasible (p, q), and the global search over two-cycle graphs.
SuiteReport verify_theorems(int n, int jobs = 1, bool allow_large = false);

// Closed-form evaluations against direct computation over the full test
// ranges, including the pinned discrepancy of the printed P-family display.
SuiteReport verify_closed_forms();

// Classical solver properties: Foster's identity, Rayleigh monotonicity,
// and exact tree degeneration (Kf = W, D_R = D).
SuiteReport verify_solver_sanity(std::uint64_t seed);

}  // namespace drd

#endif
