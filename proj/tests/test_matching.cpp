#include <doctest.h>

#include "me2c/generators.hpp"
#include "me2c/matching.hpp"
#include "me2c/oracle.hpp"
#include "test_util.hpp"

using namespace me2c;

namespace {

void check_valid_matching(const Graph& g, const Matching& m) {
  std::vector<int> seen(g.vertex_count(), 0);
  for (int e : m.edges) {
    REQUIRE(e >= 0);
    REQUIRE(e < g.edge_count());
    CHECK(m.in[e] == 1);
    auto [u, v] = g.edge(e);
    CHECK(m.mate[u] == v);
    CHECK(m.mate[v] == u);
    ++seen[u];
    ++seen[v];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(seen[v] <= 1);
    if (seen[v] == 0) CHECK(m.mate[v] == -1);
  }
  CHECK(std::is_sorted(m.edges.begin(), m.edges.end()));
}

}  // namespace

TEST_CASE("small matchings") {
  Graph p3 = Graph::parse("3 2\n0 1\n1 2\n");
  Matching m = maximum_matching(p3);
  CHECK(m.size() == 1);
  CHECK_FALSE(is_perfect(m, p3));

  Graph c5 = gen_cycle(5);
  Matching mc5 = maximum_matching(c5);
  CHECK(mc5.size() == 2);
  CHECK_FALSE(is_perfect(mc5, c5));

  Graph k4 = gen_complete(4);
  Matching mk4 = maximum_matching(k4);
  CHECK(mk4.size() == 2);
  CHECK(is_perfect(mk4, k4));

  Graph pet = gen_petersen();
  Matching mp = maximum_matching(pet);
  CHECK(mp.size() == 5);
  CHECK(is_perfect(mp, pet));

  Graph empty(4);
  CHECK(maximum_matching(empty).size() == 0);
}

TEST_CASE("matches the exhaustive size on seeded graphs") {
  // Odd cycles and random clutter exercise blossom contraction.
  for (int seed = 0; seed < 120; ++seed) {
    int n = 3 + seed % 8;
    Graph g = testutil::random_graph(n, 1 + seed % 12, 1700 + seed);
    Matching m = maximum_matching(g);
    check_valid_matching(g, m);
    CAPTURE(seed);
    CHECK(m.size() == exact_matching_bruteforce(g));
  }
  for (int n = 3; n <= 9; n += 2) {
    Graph c = gen_cycle(n);
    CHECK(maximum_matching(c).size() == n / 2);
  }
}

TEST_CASE("deterministic output") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = testutil::random_graph(9, 14, 4200 + seed);
    Matching a = maximum_matching(g);
    Matching b = maximum_matching(g);
    CHECK(a.edges == b.edges);
    CHECK(a.mate == b.mate);
  }
}

TEST_CASE("is_perfect validates its input") {
  Graph p3 = Graph::parse("3 2\n0 1\n1 2\n");
  Matching m = maximum_matching(p3);

  Matching wrong_len = m;
  wrong_len.mate.pop_back();
  CHECK_THROWS_AS(is_perfect(wrong_len, p3), std::invalid_argument);

  Matching asym = m;
  asym.mate = {1, -1, -1};  // 0 claims 1 but 1 does not claim 0
  CHECK_THROWS_AS(is_perfect(asym, p3), std::invalid_argument);

  Matching non_edge = m;
  non_edge.mate = {2, -1, 0};  // 0-2 is not an edge of the path
  non_edge.edges.clear();
  non_edge.in.assign(2, 0);
  CHECK_THROWS_AS(is_perfect(non_edge, p3), std::invalid_argument);

  Matching stale = m;
  stale.in.assign(2, 1);  // membership disagrees with mate
  stale.edges = {0, 1};
  CHECK_THROWS_AS(is_perfect(stale, p3), std::invalid_argument);
}

TEST_CASE("matching_from_edges round trips") {
  Graph pet = gen_petersen();
  Matching m = maximum_matching(pet);
  Matching rebuilt = matching_from_edges(pet, m.in);
  CHECK(rebuilt.edges == m.edges);
  CHECK(rebuilt.mate == m.mate);
  CHECK(is_perfect(rebuilt, pet));

  std::vector<char> overlap(pet.edge_count(), 0);
  overlap[0] = overlap[1] = 1;  // edges 0-1 and 1-2 share vertex 1
  CHECK_THROWS_AS(matching_from_edges(pet, overlap), std::invalid_argument);
}
