#include "me2c/generators.hpp"

#include <cmath>

namespace me2c {

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph gen_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  return g;
}

Graph gen_subcubic_random(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  SplitMix64 rng(seed);
  Graph g(n);
  for (int attempt = 0; attempt < 3 * n; ++attempt) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v || g.has_edge(u, v)) continue;
    if (g.degree(u) >= 3 || g.degree(v) >= 3) continue;
    g.add_edge(u, v);
  }
  return g;
}

Graph gen_clawfree_random(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generator needs n >= 1");
  SplitMix64 rng(seed);
  Graph base(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.below(2) == 0) base.add_edge(i, j);
  Graph line(base.edge_count());
  for (int v = 0; v < base.vertex_count(); ++v) {
    const auto& nb = base.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int a = nb[i].second, b = nb[j].second;
        line.add_edge(std::min(a, b), std::max(a, b));
      }
  }
  return line;
}

Graph gen_pm_random(int n, double p, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("planted matching needs even n >= 2");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0,1]");
  SplitMix64 rng(seed);
  auto threshold = static_cast<std::uint64_t>(std::llround(p * 1000.0));
  Graph g(n);
  for (int i = 0; i + 1 < n; i += 2) g.add_edge(i, i + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      if (rng.below(1000) < threshold) g.add_edge(i, j);
    }
  return g;
}

Graph gen_cactus_chain(int k) {
  if (k < 1) throw std::invalid_argument("chain needs k >= 1");
  // Cactus vertices 0..2k; triangle i = {2i, 2i+1, 2i+2}, so consecutive
  // triangles share the even vertices 2, 4, .., 2k-2.
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(2 * i, 2 * i + 1);
    g.add_edge(2 * i, 2 * i + 2);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  for (int v = 0; v <= 2 * k; ++v) {
    bool shared = v % 2 == 0 && v > 0 && v < 2 * k;
    if (shared) continue;
    int pendant = g.add_vertex();
    g.add_edge(v, pendant);
  }
  return g;
}

}  // namespace me2c
