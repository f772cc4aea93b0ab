#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "me2c/graph.hpp"
#include "test_util.hpp"

using namespace me2c;

TEST_CASE("parse and serialize round trip") {
  const char* text = "4 3\n0 1\n1 2\n2 3\n";
  Graph g = Graph::parse(text);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.serialize() == text);
  CHECK(Graph::parse(g.serialize()) == g);
}

TEST_CASE("parse skips comments and blank lines") {
  Graph g = Graph::parse("# header comment\n\n3 2  # n m\n0 1\n\n1 2 # last\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      Graph::parse(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("2\n") == 1);
  CHECK(line_of("2 1\n0 2\n") == 2);   // endpoint out of range
  CHECK(line_of("2 1\n1 1\n") == 2);   // self-loop
  CHECK(line_of("2 2\n0 1\n1 0\n") == 3);  // duplicate
  CHECK(line_of("2 1\n0 1\n0 1\n") == 3);  // trailing content
  CHECK(line_of("2 2\n0 1\n") == 3);   // missing edge line
  CHECK(line_of("x 1\n") == 1);
}

TEST_CASE("mutation guards") {
  Graph g(3);
  CHECK(g.add_edge(0, 1) == 0);
  CHECK(g.add_edge(1, 2) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK(g.add_vertex() == 3);
  CHECK(g.add_edge(0, 3) == 2);
  CHECK(g.degree(0) == 2);
  CHECK(g.find_edge(3, 0) == 2);
  CHECK(g.find_edge(0, 2) == -1);
}

TEST_CASE("neighbors keep edge insertion order") {
  Graph g(4);
  g.add_edge(1, 3);
  g.add_edge(1, 0);
  g.add_edge(2, 1);
  const auto& nb = g.neighbors(1);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0] == std::pair<int, int>{3, 0});
  CHECK(nb[1] == std::pair<int, int>{0, 1});
  CHECK(nb[2] == std::pair<int, int>{2, 2});
}

TEST_CASE("components in discovery order") {
  Graph g = Graph::parse("7 4\n4 5\n0 1\n1 2\n5 6\n");
  ComponentView cv = components(g);
  REQUIRE(cv.count() == 3);
  CHECK(cv.info[0].members == std::vector<int>{0, 1, 2});
  CHECK(cv.info[0].vertices == 3);
  CHECK(cv.info[0].edges == 2);
  CHECK(cv.info[0].leaves == 2);
  CHECK_FALSE(cv.info[0].trivial());
  CHECK(cv.info[1].members == std::vector<int>{3});
  CHECK(cv.info[1].trivial());
  CHECK(cv.info[2].members == std::vector<int>{4, 5, 6});
  CHECK(cv.component[6] == 2);
}

TEST_CASE("induced component keeps local ids dense and mapped") {
  Graph g = Graph::parse("6 4\n3 4\n4 5\n0 1\n5 3\n");
  ComponentView cv = components(g);
  // Components discovered: {0,1}, {2}, triangle {3,4,5}.
  Subgraph sub = induced_component(g, cv, 2);
  CHECK(sub.graph.vertex_count() == 3);
  CHECK(sub.graph.edge_count() == 3);
  CHECK(sub.vertex_to_global == std::vector<int>{3, 4, 5});
  for (int le = 0; le < sub.graph.edge_count(); ++le) {
    auto [lu, lv] = sub.graph.edge(le);
    auto [gu, gv] = g.edge(sub.edge_to_global[le]);
    CHECK(sub.vertex_to_global[lu] == gu);
    CHECK(sub.vertex_to_global[lv] == gv);
  }
}

TEST_CASE("bridges match the deletion oracle") {
  SUBCASE("path: every edge") {
    Graph g = Graph::parse("4 3\n0 1\n1 2\n2 3\n");
    CHECK(find_bridges(g) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("cycle: none") {
    Graph g = gen_cycle(5);
    CHECK(find_bridges(g).empty());
  }
  SUBCASE("isolated edge qualifies") {
    Graph g = Graph::parse("2 1\n0 1\n");
    CHECK(find_bridges(g) == std::vector<int>{0});
  }
  SUBCASE("seeded graphs") {
    for (int seed = 0; seed < 100; ++seed) {
      Graph g = testutil::random_graph(3 + seed % 8, 2 + seed % 11, 900 + seed);
      std::vector<int> expect;
      for (int e = 0; e < g.edge_count(); ++e)
        if (testutil::is_bridge_brute(g, e)) expect.push_back(e);
      CAPTURE(seed);
      CHECK(find_bridges(g) == expect);
    }
  }
}

TEST_CASE("degree class predicates") {
  CHECK(is_subcubic(gen_petersen()));
  CHECK_FALSE(is_subcubic(gen_complete(5)));
  CHECK(is_claw_free(gen_complete(4)));
  CHECK(is_claw_free(gen_cycle(6)));
  CHECK_FALSE(is_claw_free(Graph::parse("4 3\n0 1\n0 2\n0 3\n")));
  // A K1,3 with one pair of talons joined is no longer induced.
  CHECK(is_claw_free(Graph::parse("4 4\n0 1\n0 2\n0 3\n1 2\n")));
  CHECK_FALSE(is_claw_free(gen_petersen()));  // girth 5, independent talons
}

TEST_CASE("triangle listing is sorted and complete") {
  CHECK(list_triangles(gen_cycle(4)).empty());
  auto tris = list_triangles(gen_complete(4));
  REQUIRE(tris.size() == 4);
  CHECK(tris[0] == std::array<int, 3>{0, 1, 2});
  CHECK(tris[3] == std::array<int, 3>{1, 2, 3});
  CHECK(list_triangles(gen_petersen()).empty());
}

TEST_CASE("floor division rounds toward minus infinity") {
  CHECK(floor_div(7, 4) == 1);
  CHECK(floor_div(8, 4) == 2);
  CHECK(floor_div(-1, 4) == -1);
  CHECK(floor_div(-4, 4) == -1);
  CHECK(floor_div(-5, 4) == -2);
  CHECK(floor_div(0, 4) == 0);
}

TEST_CASE("generators produce the documented shapes") {
  Graph pet = gen_petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

  Graph c6 = gen_cycle(6);
  CHECK(c6.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  Graph k4 = gen_complete(4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.edge(0) == std::pair<int, int>{0, 1});
  CHECK(k4.edge(5) == std::pair<int, int>{2, 3});

  for (int n = 4; n <= 12; n += 2) {
    Graph sub = gen_subcubic_random(n, 11);
    CHECK(is_subcubic(sub));
    Graph cf = gen_clawfree_random(n, 12);
    CHECK(is_claw_free(cf));
    Graph pm = gen_pm_random(n, 0.3, 13);
    CHECK(pm.vertex_count() == n);
    for (int i = 0; i < n; i += 2) CHECK(pm.has_edge(i, i + 1));
  }

  Graph chain2 = gen_cactus_chain(2);
  CHECK(chain2.vertex_count() == 9);   // 5 cactus vertices + 4 needles
  CHECK(chain2.edge_count() == 10);    // 6 triangle edges + 4 needle edges
  CHECK(list_triangles(chain2).size() == 2);

  // Same seed, same bytes.
  CHECK(gen_subcubic_random(9, 5).serialize() == gen_subcubic_random(9, 5).serialize());
}
