#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "enumeration.hpp"
#include "families.hpp"
#include "oracles.hpp"
#include "resistance.hpp"
#include "verify.hpp"

using namespace drd;

namespace {

// Independent generation strategy: every two-cycle bicyclic graph arises
// from its base by attaching pendant vertices one at a time, so growing all
// bases and deduplicating by canonical form enumerates isomorphism classes.
std::map<CanonicalForm, Graph> grow_enumeration(int n) {
  std::map<CanonicalForm, Graph> current;
  auto admit = [&](std::map<CanonicalForm, Graph>& into, const Graph& g) {
    into.emplace(canonical_form(g), g);
  };
  for (int p = 3; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      for (int m = 0; p + q + m - 1 <= n; ++m)
        admit(current, make_P(p + q + m - 1, p, q));
  // Bases come in mixed sizes; grow every representative up to n vertices.
  for (int step = 0; step < n; ++step) {
    std::map<CanonicalForm, Graph> next;
    for (const auto& [form, g] : current) {
      if (g.vertex_count() == n) {
        next.emplace(form, g);
        continue;
      }
      int k = g.vertex_count();
      for (int v = 0; v < k; ++v) {
        EdgeList edges = g.edges();
        edges.emplace_back(v, k);
        admit(next, Graph(k + 1, edges));
      }
    }
    current = std::move(next);
  }
  std::map<CanonicalForm, Graph> full;
  for (const auto& [form, g] : current)
    if (g.vertex_count() == n) full.emplace(form, g);
  return full;
}

}  // namespace

TEST_CASE("canonical form is an isomorphism invariant") {
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  Graph bowtie2(5, {{2, 3}, {2, 4}, {3, 4}, {0, 2}, {1, 2}, {0, 1}});
  CHECK(canonical_form(bowtie) == canonical_form(bowtie2));

  CHECK(canonical_form(bowtie) == canonical_form(make_S(5, 3, 3)));
  CHECK(canonical_form(make_S(7, 3, 3)) != canonical_form(make_P(7, 3, 3)));
  CHECK(canonical_form(make_S(7, 3, 4)) != canonical_form(make_S(7, 3, 3)));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(rng, 7, static_cast<int>(rng() % 4));
    CHECK(canonical_form(g) == canonical_form(oracles::random_relabel(g, rng)));
  }
  CHECK_THROWS_AS(canonical_form(make_path(11)), Error);
}

TEST_CASE("fast degree resistance agrees with the exact solver") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_connected_graph(rng, n, static_cast<int>(rng() % 4));
    CHECK(degree_resistance_small(g) == invariants(g).degree_resistance);
  }
}

TEST_CASE("enumeration stream at n=5") {
  long long two_cycle = 0, theta = 0;
  bool saw_bowtie = false;
  CanonicalForm bowtie = canonical_form(make_S(5, 3, 3));
  enumerate_bicyclic(5, Population::AllBicyclic,
                     [&](const Graph& g, BicyclicKind kind) {
                       CHECK(g.edge_count() == 6);
                       CHECK(is_connected(g));
                       if (kind == BicyclicKind::TwoCycles) {
                         ++two_cycle;
                         if (canonical_form(g) == bowtie) saw_bowtie = true;
                       } else {
                         ++theta;
                       }
                     });
  CHECK(two_cycle == 15);  // 5 hub choices x 3 pairings of the other four
  CHECK(theta > 0);
  CHECK(saw_bowtie);

  long long filtered = 0;
  enumerate_bicyclic(5, Population::TwoCyclesOnly,
                     [&](const Graph&, BicyclicKind kind) {
                       CHECK(kind == BicyclicKind::TwoCycles);
                       ++filtered;
                     });
  CHECK(filtered == two_cycle);
}

TEST_CASE("enumeration range limits") {
  auto ignore = [](const Graph&, BicyclicKind) {};
  CHECK_THROWS_AS(enumerate_bicyclic(4, Population::AllBicyclic, ignore), Error);
  CHECK_THROWS_AS(enumerate_bicyclic(9, Population::AllBicyclic, ignore), Error);
  CHECK_THROWS_AS(
      enumerate_bicyclic(10, Population::AllBicyclic, ignore, true), Error);
}

TEST_CASE("labeled and constructive enumerations agree on class counts") {
  for (int n = 5; n <= 7; ++n) {
    std::set<CanonicalForm> labeled;
    enumerate_bicyclic(n, Population::TwoCyclesOnly,
                       [&](const Graph& g, BicyclicKind) {
                         labeled.insert(canonical_form(g));
                       });
    std::map<CanonicalForm, Graph> grown = grow_enumeration(n);
    CHECK(labeled.size() == grown.size());
    for (const auto& [form, g] : grown) CHECK(labeled.count(form) == 1);
  }
}

TEST_CASE("extremal search at small n") {
  ExtremalReport r5 = extremal_search(5, Population::TwoCyclesOnly);
  CHECK(r5.count_labeled == 15);
  CHECK(r5.min_value == rational(128, 3));
  CHECK(r5.max_value == rational(128, 3));
  CHECK(r5.agrees_min);
  CHECK(r5.agrees_max);

  ExtremalReport r6 = extremal_search(6, Population::TwoCyclesOnly);
  CHECK(r6.min_value == closed_form_S33(6));
  CHECK(r6.max_value == closed_form_P33(6));
  REQUIRE(r6.min_attainers.size() == 1);
  REQUIRE(r6.max_attainers.size() == 1);
  CHECK(r6.min_attainers.begin()->first == canonical_form(make_S(6, 3, 3)));
  CHECK(r6.max_attainers.begin()->first == canonical_form(make_P(6, 3, 3)));
}

TEST_CASE("worker count does not change the report") {
  ExtremalReport a = extremal_search(6, Population::AllBicyclic, 1);
  ExtremalReport b = extremal_search(6, Population::AllBicyclic, 3);
  ExtremalReport c = extremal_search(6, Population::AllBicyclic, 8);
  for (const ExtremalReport* r : {&b, &c}) {
    CHECK(r->count_labeled == a.count_labeled);
    CHECK(r->theta_count_labeled == a.theta_count_labeled);
    CHECK(r->min_value == a.min_value);
    CHECK(r->max_value == a.max_value);
    CHECK(r->min_attainers == a.min_attainers);
    CHECK(r->max_attainers == a.max_attainers);
  }
}

TEST_CASE("within-class extremality reports") {
  WithinClassReport r = verify_within_class(7, 3, 4);
  CHECK(r.min_unique_is_S);
  CHECK(r.max_unique_is_P);
  CHECK(r.min_value == closed_form_S(7, 3, 4));
  CHECK(r.max_value == closed_form_P(7, 3, 4).raw);
  CHECK_FALSE(r.coincident);

  WithinClassReport tight = verify_within_class(5, 3, 3);
  CHECK(tight.coincident);
  CHECK(tight.min_value == tight.max_value);
  CHECK(tight.min_unique_is_S);
  CHECK(tight.max_unique_is_P);
}
