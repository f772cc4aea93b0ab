#pragma once

#include <stdexcept>

#include "me2c/coloring.hpp"
#include "me2c/graph.hpp"

namespace me2c {

// Thrown when an instance exceeds an oracle's size budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact maximum edge 2-coloring by branch and bound over canonical color
// partitions: edges are ordered by descending endpoint degree sum (ties by
// edge id) and each edge takes an already used color or the one fresh color.
// Prunes when used + remaining <= best and restricts saturated endpoints to
// their own color sets. Refuses graphs with more than edge_budget edges;
// edge_budget above 20 is itself refused.
EdgeColoring exact_opt(const Graph& g, int edge_budget = 14);

// Decision variant: true iff some feasible coloring uses more than threshold
// colors. Prunes against the threshold instead of a best-so-far, so it is
// much faster than exact_opt when the answer is no.
bool exists_coloring_above(const Graph& g, int edge_budget, int threshold);

// Maximum matching size by include/skip enumeration over edges. n <= 12.
int exact_matching_bruteforce(const Graph& g);

}  // namespace me2c
