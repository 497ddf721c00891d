#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "families.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "verify.hpp"

using namespace drd;

namespace {

Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// Two triangles joined by a 2-edge path.
Graph dumbbell() {
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 6}, {6, 3},
                   {3, 4}, {3, 5}, {4, 5}});
}

Graph theta_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(-1, {}), Error);
  Graph g(4, {{2, 1}, {0, 3}});
  CHECK(g.edges() == EdgeList{{0, 3}, {1, 2}});
  CHECK(g.degree(1) == 1);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("shortest distances and connectivity") {
  Graph path = make_path(4);
  auto d = shortest_distances(path);
  CHECK(d[0][3] == 3);
  CHECK(d[1][2] == 1);
  CHECK(is_connected(path));

  Graph split(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(split));
  CHECK(shortest_distances(split)[0][2] == -1);

  Graph cycle = make_cycle(6);
  CHECK(shortest_distances(cycle)[0][3] == 3);
  CHECK(shortest_distances(cycle)[0][5] == 1);
}

TEST_CASE("two-core strips trees") {
  CHECK_THROWS_AS(two_core(make_path(5)), Error);

  // Tadpole: triangle with a 2-edge tail.
  Graph tadpole(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}});
  TwoCore core = two_core(tadpole);
  CHECK(core.core.vertex_count() == 3);
  CHECK(core.core.edge_count() == 3);
  std::vector<int> expected = {0, 1, 2};
  CHECK(core.original == expected);
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(make_cycle(5)).empty());
  auto path_cuts = cut_vertices(make_path(4));
  CHECK(path_cuts == std::vector<int>{1, 2});
  CHECK(cut_vertices(bowtie()) == std::vector<int>{0});
  CHECK(cut_vertices(theta_graph()).empty());
}

TEST_CASE("bicyclic classification on named graphs") {
  CHECK(classify_bicyclic(make_cycle(6)).kind == BicyclicKind::NotBicyclic);
  CHECK(classify_bicyclic(make_path(4)).kind == BicyclicKind::NotBicyclic);

  BicyclicClass bow = classify_bicyclic(bowtie());
  CHECK(bow.kind == BicyclicKind::TwoCycles);
  CHECK(bow.p == 3);
  CHECK(bow.q == 3);
  CHECK(bow.path_len == 0);

  BicyclicClass dumb = classify_bicyclic(dumbbell());
  CHECK(dumb.kind == BicyclicKind::TwoCycles);
  CHECK(dumb.p == 3);
  CHECK(dumb.q == 3);
  CHECK(dumb.path_len == 2);

  CHECK(classify_bicyclic(theta_graph()).kind == BicyclicKind::Theta);

  // Disconnected graph with m = n + 1 overall.
  Graph split(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
                  {5, 6}, {6, 7}, {5, 7}});
  CHECK(classify_bicyclic(split).kind == BicyclicKind::NotBicyclic);
}

TEST_CASE("classification agrees with a simple-cycle-count oracle") {
  std::mt19937_64 rng(7);
  int two_cycle_seen = 0, theta_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 5 + static_cast<int>(rng() % 3);
    Graph g = random_connected_graph(rng, n, 2);
    if (g.edge_count() != n + 1) continue;  // extra edges may collide
    int cycles = oracles::simple_cycle_count(g);
    BicyclicKind kind = classify_bicyclic(g).kind;
    if (cycles == 2) {
      CHECK(kind == BicyclicKind::TwoCycles);
      ++two_cycle_seen;
    } else {
      CHECK(cycles == 3);
      CHECK(kind == BicyclicKind::Theta);
      ++theta_seen;
    }
  }
  CHECK(two_cycle_seen > 20);
  CHECK(theta_seen > 20);
}

TEST_CASE("base decomposition orients cycles at their contacts") {
  BicyclicBase base = bicyclic_base(dumbbell());
  CHECK(base.cycle_small.size() == 3);
  CHECK(base.cycle_large.size() == 3);
  CHECK(base.path.size() == 3);
  CHECK(base.cycle_small.front() == base.path.front());
  CHECK(base.cycle_large.front() == base.path.back());

  BicyclicBase bow = bicyclic_base(bowtie());
  CHECK(bow.path == std::vector<int>{0});
  CHECK(bow.cycle_small.front() == 0);
  CHECK(bow.cycle_large.front() == 0);

  CHECK_THROWS_AS(bicyclic_base(theta_graph()), Error);

  // Pendants must not disturb the decomposition.
  Graph decorated = make_S(9, 3, 4);
  BicyclicBase dec = bicyclic_base(decorated);
  CHECK(dec.cycle_small.size() == 3);
  CHECK(dec.cycle_large.size() == 4);
  CHECK(dec.path.size() == 1);
}

TEST_CASE("vertex identification") {
  IdentifiedGraph joined = identify_vertices(make_cycle(3), 1, make_cycle(4), 2);
  CHECK(joined.graph.vertex_count() == 6);
  CHECK(joined.graph.edge_count() == 7);
  CHECK(joined.merged == 1);
  CHECK(is_connected(joined.graph));
  CHECK(joined.graph.degree(joined.merged) == 4);
  BicyclicClass c = classify_bicyclic(joined.graph);
  CHECK(c.kind == BicyclicKind::TwoCycles);
  CHECK(c.p == 3);
  CHECK(c.q == 4);
  CHECK(c.path_len == 0);
}

TEST_CASE("edge list round trip") {
  std::ostringstream out;
  write_edge_list(out, bowtie());
  std::istringstream in(out.str());
  Graph back = read_edge_list(in);
  CHECK(back.vertex_count() == 5);
  CHECK(back.edges() == bowtie().edges());
}

TEST_CASE("edge list parsing") {
  std::istringstream ok("# comment\n3 2\n0 1\n# mid comment\n1 2\n");
  Graph g = read_edge_list(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  std::istringstream missing("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(missing), Error);
  std::istringstream junk("3 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), Error);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/g.edges"), Error);
}
