#include <algorithm>
#include <numeric>

#include <doctest.h>

#include "me2c/coloring.hpp"
#include "me2c/generators.hpp"
#include "me2c/oracle.hpp"
#include "test_util.hpp"

using namespace me2c;

TEST_CASE("exact optimum on pinned instances") {
  // Cycles admit an all-distinct coloring: each vertex meets two edges.
  for (int n = 3; n <= 7; ++n) {
    EdgeColoring chi = exact_opt(gen_cycle(n));
    CHECK(chi.colors == n);
    CHECK(check_feasible(gen_cycle(n), chi).feasible);
  }
  CHECK(exact_opt(gen_complete(4)).colors == 3);
  CHECK(exact_opt(Graph::parse("2 1\n0 1\n")).colors == 1);
  CHECK(exact_opt(Graph(3)).colors == 0);
  CHECK(exact_opt(Graph::parse("4 3\n0 1\n0 2\n0 3\n")).colors == 2);
}

TEST_CASE("oracle output is feasible and canonical") {
  for (int seed = 0; seed < 60; ++seed) {
    Graph g = testutil::random_graph(3 + seed % 7, 2 + seed % 9, 3100 + seed);
    EdgeColoring chi = exact_opt(g);
    CAPTURE(seed);
    CHECK(check_feasible(g, chi).feasible);
    CHECK(chi.color == chi.canonicalized().color);
  }
}

TEST_CASE("adding an isolated edge adds exactly one color") {
  for (int seed = 0; seed < 100; ++seed) {
    Graph g = testutil::random_graph(3 + seed % 6, 2 + seed % 8, 5200 + seed);
    if (g.edge_count() + 1 > 12) continue;
    int base = exact_opt(g).colors;
    Graph h = g;
    int a = h.add_vertex();
    int b = h.add_vertex();
    h.add_edge(a, b);
    CAPTURE(seed);
    CHECK(exact_opt(h).colors == base + 1);
  }
}

TEST_CASE("optimum is invariant under vertex relabeling") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = testutil::random_graph(4 + trial % 5, 3 + trial % 7, 6100 + trial % 10);
    int base = exact_opt(g).colors;
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = static_cast<int>(perm.size()) - 1; i > 0; --i)
      std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
    Graph h(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      h.add_edge(perm[u], perm[v]);
    }
    CAPTURE(trial);
    CHECK(exact_opt(h).colors == base);
  }
}

TEST_CASE("budget refusal") {
  Graph big = gen_petersen();  // 15 edges
  CHECK_THROWS_AS(exact_opt(big), BudgetError);
  CHECK_THROWS_AS(exact_opt(gen_cycle(3), 21), BudgetError);
  CHECK_THROWS_AS(exact_opt(gen_cycle(3), -1), BudgetError);
  CHECK(exact_opt(big, 15).colors == 7);
  CHECK_THROWS_AS(exists_coloring_above(big, 14, 7), BudgetError);
  CHECK_FALSE(exists_coloring_above(big, 15, 7));
  CHECK(exists_coloring_above(big, 15, 6));
  CHECK_THROWS_AS(exact_matching_bruteforce(Graph(13)), BudgetError);
}

TEST_CASE("decision variant brackets the optimum") {
  for (int seed = 0; seed < 50; ++seed) {
    Graph g = testutil::random_graph(3 + seed % 7, 2 + seed % 10, 7300 + seed);
    int opt = exact_opt(g).colors;
    CAPTURE(seed);
    CHECK_FALSE(exists_coloring_above(g, 14, opt));
    if (opt > 0) CHECK(exists_coloring_above(g, 14, opt - 1));
  }
}
