#include "me2c/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace me2c {

namespace {

// Branch-and-bound state over a fixed edge processing order. Vertex color
// sets never exceed 2 entries; the partial assignment is always feasible.
struct Search {
  const Graph& g;
  std::vector<int> order;       // processing position -> edge id
  std::vector<std::array<int, 2>> seen;  // per-vertex colors, -1 empty
  std::vector<int> assigned;    // per position, color; -1 unassigned
  int used = 0;
  int best = 0;                 // best complete count (or threshold)
  std::vector<int> best_assigned;
  bool decision = false;        // stop as soon as best is beaten
  bool found = false;

  explicit Search(const Graph& graph) : g(graph) {
    int m = g.edge_count();
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      auto [au, av] = g.edge(a);
      auto [bu, bv] = g.edge(b);
      return g.degree(au) + g.degree(av) > g.degree(bu) + g.degree(bv);
    });
    seen.assign(g.vertex_count(), {-1, -1});
    assigned.assign(m, -1);
  }

  static int count_at(const std::array<int, 2>& s) {
    return (s[0] >= 0) + (s[1] >= 0);
  }
  static bool sees(const std::array<int, 2>& s, int c) {
    return s[0] == c || s[1] == c;
  }

  // Adds color c at vertex v; returns true if it was new there.
  bool add(int v, int c) {
    if (sees(seen[v], c)) return false;
    ME2C_CHECK(count_at(seen[v]) < 2);
    seen[v][seen[v][0] >= 0 ? 1 : 0] = c;
    return true;
  }
  void remove(int v, int c) {
    if (seen[v][1] == c)
      seen[v][1] = -1;
    else if (seen[v][0] == c) {
      seen[v][0] = seen[v][1];
      seen[v][1] = -1;
    }
  }

  void dfs(int pos) {
    if (decision && found) return;
    int m = g.edge_count();
    if (pos == m) {
      if (used > best) {
        best = used;
        best_assigned = assigned;
        found = true;
      }
      return;
    }
    if (used + (m - pos) <= best) return;
    auto [u, v] = g.edge(order[pos]);
    int cu = count_at(seen[u]), cv = count_at(seen[v]);
    // Candidate colors in ascending order; `used` stands for the fresh color.
    std::vector<int> cand;
    if (cu == 2 && cv == 2) {
      for (int c : seen[u])
        if (sees(seen[v], c)) cand.push_back(c);
      std::sort(cand.begin(), cand.end());
    } else if (cu == 2) {
      cand = {seen[u][0], seen[u][1]};
      std::sort(cand.begin(), cand.end());
    } else if (cv == 2) {
      cand = {seen[v][0], seen[v][1]};
      std::sort(cand.begin(), cand.end());
    } else {
      cand.resize(used + 1);
      std::iota(cand.begin(), cand.end(), 0);
    }
    for (int c : cand) {
      bool fresh = (c == used);
      bool nu = add(u, c), nv = add(v, c);
      assigned[pos] = c;
      if (fresh) ++used;
      dfs(pos + 1);
      if (fresh) --used;
      assigned[pos] = -1;
      if (nv) remove(v, c);
      if (nu) remove(u, c);
      if (decision && found) return;
    }
  }

  // Greedy incumbent: fresh when allowed, else the smallest candidate; falls
  // back to all-one-color if it ever gets stuck.
  int greedy() {
    int m = g.edge_count();
    std::vector<int> out(m, -1);
    int g_used = 0;
    std::vector<std::array<int, 2>> s(g.vertex_count(), {-1, -1});
    auto add_to = [&](int w, int c) {
      if (!sees(s[w], c)) s[w][s[w][0] >= 0 ? 1 : 0] = c;
    };
    for (int pos = 0; pos < m; ++pos) {
      auto [u, v] = g.edge(order[pos]);
      int cu = count_at(s[u]), cv = count_at(s[v]);
      int pick = -1;
      if (cu < 2 && cv < 2) {
        pick = g_used;  // fresh
      } else if (cu == 2 && cv == 2) {
        for (int c : s[u])
          if (sees(s[v], c) && (pick < 0 || c < pick)) pick = c;
        if (pick < 0) return 1;  // stuck; all-one-color is always feasible
      } else {
        const auto& sat = (cu == 2) ? s[u] : s[v];
        pick = std::min(sat[0], sat[1]);
      }
      if (pick == g_used) ++g_used;
      add_to(u, pick);
      add_to(v, pick);
      out[pos] = pick;
    }
    return g_used;
  }
};

void check_budget(const Graph& g, int edge_budget) {
  if (edge_budget > 20)
    throw BudgetError("edge budget above the hard limit of 20");
  if (edge_budget < 0) throw BudgetError("negative edge budget");
  if (g.edge_count() > edge_budget)
    throw BudgetError("graph has " + std::to_string(g.edge_count()) +
                      " edges, budget is " + std::to_string(edge_budget));
}

}  // namespace

EdgeColoring exact_opt(const Graph& g, int edge_budget) {
  check_budget(g, edge_budget);
  int m = g.edge_count();
  if (m == 0) return EdgeColoring{};
  Search search(g);
  search.best = search.greedy() - 1;  // the search must re-find an optimum
  ME2C_CHECK(search.best >= 0);
  search.dfs(0);
  ME2C_CHECK(search.found);
  std::vector<int> raw(m, -1);
  for (int pos = 0; pos < m; ++pos) raw[search.order[pos]] = search.best_assigned[pos];
  EdgeColoring out = make_coloring(std::move(raw));
  ME2C_CHECK(out.colors == search.best);
  ME2C_CHECK(check_feasible(g, out).feasible);
  return out;
}

bool exists_coloring_above(const Graph& g, int edge_budget, int threshold) {
  check_budget(g, edge_budget);
  if (g.edge_count() == 0) return 0 > threshold;
  if (threshold < 0) return true;  // even one color beats it
  Search search(g);
  search.best = threshold;
  search.decision = true;
  search.dfs(0);
  return search.found;
}

int exact_matching_bruteforce(const Graph& g) {
  if (g.vertex_count() > 12)
    throw BudgetError("matching bruteforce limited to 12 vertices");
  int m = g.edge_count();
  std::vector<char> taken(g.vertex_count(), 0);
  int best = 0;
  auto rec = [&](auto&& self, int e, int cur) -> void {
    if (cur > best) best = cur;
    if (e == m || cur + (m - e) <= best) return;
    auto [u, v] = g.edge(e);
    if (!taken[u] && !taken[v]) {
      taken[u] = taken[v] = 1;
      self(self, e + 1, cur + 1);
      taken[u] = taken[v] = 0;
    }
    self(self, e + 1, cur);
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace me2c
