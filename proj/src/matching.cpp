#include "me2c/matching.hpp"

#include <algorithm>
#include <queue>

namespace me2c {

namespace {

// One phase of the blossom search: BFS an alternating tree from root,
// contracting odd cycles onto their base vertex, until an unmatched vertex is
// reached or the tree is exhausted.
struct BlossomSearch {
  const Graph& g;
  int n;
  std::vector<int>& match;
  std::vector<int> p, base;
  std::vector<char> used, blossom;

  explicit BlossomSearch(const Graph& graph, std::vector<int>& m)
      : g(graph), n(graph.vertex_count()), match(m) {}

  int lca(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  // Returns the unmatched tree endpoint, or -1.
  int find_path(int root) {
    p.assign(n, -1);
    used.assign(n, 0);
    base.resize(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& [to, e] : g.neighbors(v)) {
        (void)e;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && p[match[to]] >= 0)) {
          int cur = lca(v, to);
          blossom.assign(n, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (p[to] < 0) {
          p[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> match(n, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (match[u] < 0 && match[v] < 0) {
      match[u] = v;
      match[v] = u;
    }
  }
  BlossomSearch search(g, match);
  for (int v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    int leaf = search.find_path(v);
    while (leaf >= 0) {
      int prev = search.p[leaf];
      int next = match[prev];
      match[leaf] = prev;
      match[prev] = leaf;
      leaf = next;
    }
  }
  Matching result;
  result.mate = match;
  result.in.assign(g.edge_count(), 0);
  for (int v = 0; v < n; ++v) {
    if (match[v] > v) {
      int e = g.find_edge(v, match[v]);
      ME2C_CHECK(e >= 0);
      result.in[e] = 1;
      result.edges.push_back(e);
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

bool is_perfect(const Matching& m, const Graph& g) {
  if (static_cast<int>(m.mate.size()) != g.vertex_count() ||
      static_cast<int>(m.in.size()) != g.edge_count())
    throw std::invalid_argument("matching does not belong to this graph");
  std::vector<int> derived(g.vertex_count(), -1);
  for (int e : m.edges) {
    if (e < 0 || e >= g.edge_count() || !m.in[e])
      throw std::invalid_argument("matching edge list inconsistent");
    auto [u, v] = g.edge(e);
    if (derived[u] >= 0 || derived[v] >= 0)
      throw std::invalid_argument("edges share a vertex");
    derived[u] = v;
    derived[v] = u;
  }
  if (derived != m.mate)
    throw std::invalid_argument("mate table inconsistent with edge set");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (m.mate[v] < 0) return false;
  return true;
}

Matching matching_from_edges(const Graph& g, const std::vector<char>& edge_in) {
  ME2C_CHECK(static_cast<int>(edge_in.size()) == g.edge_count());
  Matching m;
  m.mate.assign(g.vertex_count(), -1);
  m.in = edge_in;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!edge_in[e]) continue;
    auto [u, v] = g.edge(e);
    if (m.mate[u] >= 0 || m.mate[v] >= 0)
      throw std::invalid_argument("selected edges share a vertex");
    m.mate[u] = v;
    m.mate[v] = u;
    m.edges.push_back(e);
  }
  return m;
}

}  // namespace me2c
