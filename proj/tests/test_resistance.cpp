#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "families.hpp"
#include "resistance.hpp"
#include "verify.hpp"

using namespace drd;

TEST_CASE("small cycle resistances") {
  ResistanceMatrix c3 = resistance_matrix(make_cycle(3));
  CHECK(c3.at(0, 1) == rational(2, 3));
  CHECK(c3.at(1, 2) == rational(2, 3));

  ResistanceMatrix c4 = resistance_matrix(make_cycle(4));
  CHECK(c4.at(0, 1) == rational(3, 4));
  CHECK(c4.at(0, 2) == rational(1));

  ResistanceMatrix c5 = resistance_matrix(make_cycle(5));
  CHECK(c5.at(0, 1) == rational(4, 5));
  CHECK(c5.at(0, 2) == rational(6, 5));
}

TEST_CASE("path resistances equal hop counts") {
  Graph p = make_path(5);
  ResistanceMatrix r = resistance_matrix(p);
  for (int u = 0; u < 5; ++u)
    for (int v = 0; v < 5; ++v) CHECK(r.at(u, v) == rational(std::abs(u - v)));
}

TEST_CASE("resistance matrix basics") {
  Graph g = make_S(7, 3, 4);
  ResistanceMatrix r = resistance_matrix(g);
  for (int u = 0; u < 7; ++u) {
    CHECK(r.at(u, u) == rational(0));
    for (int v = 0; v < 7; ++v) CHECK(r.at(u, v) == r.at(v, u));
  }
  CHECK(effective_resistance(g, 1, 2) == r.at(1, 2));
  CHECK_THROWS_AS(resistance_matrix(Graph(4, {{0, 1}, {2, 3}})), Error);
  CHECK_THROWS_AS(effective_resistance(g, 0, 9), Error);
}

TEST_CASE("complete graph invariants") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  InvariantReport inv = invariants(k4);
  CHECK(inv.wiener == rational(6));
  CHECK(inv.kirchhoff == rational(3));
  CHECK(inv.degree_distance == rational(36));
  CHECK(inv.degree_resistance == rational(18));
}

TEST_CASE("bowtie degree resistance distance") {
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  InvariantReport inv = invariants(bowtie);
  CHECK(inv.degree_resistance == rational(128, 3));
}

TEST_CASE("per-vertex sums tie the indices together") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(rng, 7, static_cast<int>(rng() % 5));
    InvariantReport inv = invariants(g);
    Rational kf_total(0), dr_total(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      kf_total += inv.kf_v[static_cast<size_t>(v)];
      dr_total += Rational(g.degree(v)) * inv.kf_v[static_cast<size_t>(v)];
    }
    CHECK(kf_total == Rational(2) * inv.kirchhoff);
    CHECK(dr_total == inv.degree_resistance);
  }
}

TEST_CASE("cycle closed forms") {
  CycleClosedForms f5 = cycle_closed_forms(5);
  CHECK(f5.kf == rational(10));
  CHECK(f5.dr == rational(40));
  CHECK(f5.kf_v == rational(4));
  CHECK(f5.d_v == rational(8));
  CHECK(cycle_pair_resistance(5, 1, 3) == rational(6, 5));
  CHECK(cycle_pair_resistance(4, 1, 3) == rational(1));
  CHECK_THROWS_AS(cycle_closed_forms(2), Error);
  CHECK_THROWS_AS(cycle_pair_resistance(5, 3, 3), Error);
}

TEST_CASE("cut vertex composition formula") {
  // Bowtie as two triangles identified at a vertex.
  Graph tri = make_cycle(3);
  CHECK(compose_identified(tri, 0, tri, 0) == rational(128, 3));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    int n1 = 2 + static_cast<int>(rng() % 6);
    int n2 = 2 + static_cast<int>(rng() % 6);
    Graph g1 = random_connected_graph(rng, n1, static_cast<int>(rng() % 3));
    Graph g2 = random_connected_graph(rng, n2, static_cast<int>(rng() % 3));
    int u1 = static_cast<int>(rng() % static_cast<unsigned>(n1));
    int u2 = static_cast<int>(rng() % static_cast<unsigned>(n2));
    Rational direct =
        invariants(identify_vertices(g1, u1, g2, u2).graph).degree_resistance;
    CHECK(compose_identified(g1, u1, g2, u2) == direct);
  }
}
