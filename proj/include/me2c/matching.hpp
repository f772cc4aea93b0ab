#pragma once

#include "me2c/graph.hpp"

namespace me2c {

struct Matching {
  std::vector<int> mate;     // vertex -> partner vertex, -1 when unmatched
  std::vector<char> in;      // edge id -> membership
  std::vector<int> edges;    // member edge ids, ascending

  int size() const { return static_cast<int>(edges.size()); }
};

// Maximum cardinality matching via repeated augmenting-path search with
// blossom contraction, O(n^3). Deterministic: the greedy seed scans edges by
// identity and the search scans vertices and adjacency in identity order.
Matching maximum_matching(const Graph& g);

// True when every vertex is matched. Validates that m is a consistent
// matching of g and throws std::invalid_argument otherwise.
bool is_perfect(const Matching& m, const Graph& g);

Matching matching_from_edges(const Graph& g, const std::vector<char>& edge_in);

}  // namespace me2c
