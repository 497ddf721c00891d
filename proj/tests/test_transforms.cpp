#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enumeration.hpp"
#include "families.hpp"
#include "resistance.hpp"
#include "transforms.hpp"

using namespace drd;

namespace {

// Bowtie with a 2-pendant star hung on cycle vertex 1 through carrier 5.
Graph star_on_bowtie() {
  return Graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
                   {1, 5}, {5, 6}, {5, 7}});
}

}  // namespace

TEST_CASE("star slide toward the cycle decreases the index") {
  Graph g = star_on_bowtie();
  Graph after = sigma_transform(g, 5);
  CHECK(after.vertex_count() == g.vertex_count());
  CHECK(after.edge_count() == g.edge_count());
  CHECK(after.degree(1) == 5);
  CHECK(after.degree(5) == 1);
  TransformOutcome outcome = compare_transform(g, after);
  CHECK(outcome.direction == Direction::Decreased);
}

TEST_CASE("star to path increases the index, single pendant is neutral") {
  Graph g = star_on_bowtie();
  Graph after = pi_transform(g, 5);
  CHECK(after.degree(5) == 2);
  CHECK(compare_transform(g, after).direction == Direction::Increased);

  Graph one(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {5, 6}});
  Graph one_after = pi_transform(one, 5);
  CHECK(compare_transform(one, one_after).direction == Direction::Equal);
}

TEST_CASE("pendant star preconditions") {
  Graph g = star_on_bowtie();
  CHECK_THROWS_AS(sigma_transform(g, 6), Error);  // a pendant, not a carrier
  CHECK_THROWS_AS(sigma_transform(g, 0), Error);  // no pendants at all
  CHECK_THROWS_AS(pi_transform(g, 2), Error);
  // Carrier hanging off another carrier, not off a cycle.
  Graph chained(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
                    {1, 5}, {5, 6}, {6, 7}, {6, 8}});
  CHECK_THROWS_AS(sigma_transform(chained, 6), Error);
}

TEST_CASE("moving pendants to the shared vertex decreases the index") {
  Graph g(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
              {1, 5}, {1, 6}, {3, 7}});
  Graph after = relocate_pendants(g, 1, 0);
  CHECK(after.degree(0) == 6);
  CHECK(after.degree(1) == 2);
  CHECK(compare_transform(g, after).direction == Direction::Decreased);

  CHECK_THROWS_AS(relocate_pendants(g, 2, 0), Error);  // no pendants at 2
  CHECK_THROWS_AS(relocate_pendants(g, 1, 3), Error);  // 3 is not the hub
  CHECK_THROWS_AS(relocate_pendants(g, 0, 0), Error);
  Graph joined = make_P(8, 3, 4);
  CHECK_THROWS_AS(relocate_pendants(joined, 1, 0), Error);  // no shared vertex
}

TEST_CASE("edge rewiring guards") {
  Graph g = make_S(6, 3, 3);
  CHECK_THROWS_AS(rewire_edge(g, {1, 3}, {1, 5}), Error);   // absent
  CHECK_THROWS_AS(rewire_edge(g, {0, 5}, {1, 2}), Error);   // target present
  CHECK_THROWS_AS(rewire_edge(g, {0, 5}, {3, 3}), Error);   // self loop
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(rewire_edge(star, {0, 1}, {2, 3}), Error);  // disconnects
  Graph moved = rewire_edge(g, {0, 5}, {1, 5});
  CHECK(moved.edge_count() == g.edge_count());
  CHECK(moved.has_edge(1, 5));
}

TEST_CASE("contracting a path edge into a pendant decreases the index") {
  Graph g = make_P(7, 3, 3);  // joining path of 2 edges
  BicyclicBase base = bicyclic_base(g);
  std::pair<int, int> path_edge{base.path[0], base.path[1]};
  Graph after = contract_to_pendant(g, path_edge);
  CHECK(after.vertex_count() == 7);
  CHECK(after.edge_count() == 8);
  BicyclicClass c = classify_bicyclic(after);
  CHECK(c.kind == BicyclicKind::TwoCycles);
  CHECK(c.path_len == 1);
  CHECK(compare_transform(g, after).direction == Direction::Decreased);

  CHECK_THROWS_AS(contract_to_pendant(g, {0, 1}), Error);  // cycle edge
  CHECK_THROWS_AS(contract_to_pendant(make_S(6, 3, 3), {0, 1}), Error);
}

TEST_CASE("cycle shrink with a shared vertex decreases the index") {
  Graph g = make_S(6, 3, 4);
  Graph after = cycle_shrink(g, 1);
  CHECK(after.vertex_count() == 6);
  CHECK(after.edge_count() == 7);
  CHECK(canonical_form(after) == canonical_form(make_S(6, 3, 3)));
  CHECK(compare_transform(g, after).direction == Direction::Decreased);
  CHECK_THROWS_AS(cycle_shrink(g, 0), Error);  // triangle side
  CHECK_THROWS_AS(cycle_shrink(g, 2), Error);

  // Pendants anywhere but the shared vertex block the move.
  Graph off(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {4, 5}, {3, 5}, {1, 6}});
  CHECK_THROWS_AS(cycle_shrink(off, 1), Error);
}

TEST_CASE("cycle shrink along a joining path increases the index") {
  Graph g = make_P(9, 3, 4);  // cycles 3 and 4, path of 3 edges
  Graph after = cycle_shrink(g, 1);
  CHECK(after.vertex_count() == 9);
  CHECK(after.edge_count() == 10);
  CHECK(canonical_form(after) == canonical_form(make_P(9, 3, 3)));
  CHECK(compare_transform(g, after).direction == Direction::Increased);

  // Attachments outside the dumbbell block the move.
  Graph decorated(10, [] {
    EdgeList edges = make_P(9, 3, 4).edges();
    edges.emplace_back(1, 9);
    return edges;
  }());
  CHECK_THROWS_AS(cycle_shrink(decorated, 1), Error);
}

TEST_CASE("transforms preserve vertex and edge counts") {
  Graph g = star_on_bowtie();
  for (const Graph& after : {sigma_transform(g, 5), pi_transform(g, 5)}) {
    CHECK(after.vertex_count() == g.vertex_count());
    CHECK(after.edge_count() == g.edge_count());
    CHECK(classify_bicyclic(after).kind == BicyclicKind::TwoCycles);
  }
}
