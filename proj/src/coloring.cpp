#include "me2c/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "me2c/matching.hpp"

namespace me2c {

namespace {

int distinct_count(const std::vector<int>& color) {
  std::set<int> s(color.begin(), color.end());
  return static_cast<int>(s.size());
}

// A color value unused anywhere in the vector.
int fresh_color(const std::vector<int>& color) {
  int mx = -1;
  for (int c : color) mx = std::max(mx, c);
  return mx + 1;
}

}  // namespace

EdgeColoring EdgeColoring::canonicalized() const {
  EdgeColoring out;
  out.color.resize(color.size());
  std::map<int, int> relabel;
  for (size_t e = 0; e < color.size(); ++e) {
    auto [it, inserted] =
        relabel.try_emplace(color[e], static_cast<int>(relabel.size()));
    (void)inserted;
    out.color[e] = it->second;
  }
  out.colors = static_cast<int>(relabel.size());
  return out;
}

EdgeColoring make_coloring(std::vector<int> raw) {
  for (int c : raw) ME2C_CHECK(c >= 0);
  EdgeColoring tmp;
  tmp.color = std::move(raw);
  return tmp.canonicalized();
}

FeasibilityReport check_feasible(const Graph& g, const EdgeColoring& chi) {
  if (static_cast<int>(chi.color.size()) != g.edge_count())
    throw std::invalid_argument("coloring does not cover the edge set");
  for (int c : chi.color)
    if (c < 0) throw std::invalid_argument("coloring has a negative entry");
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::set<int> seen;
    for (const auto& [nb, e] : g.neighbors(v)) {
      (void)nb;
      seen.insert(chi.color[e]);
    }
    if (seen.size() > 2) {
      FeasibilityReport r;
      r.feasible = false;
      r.vertex = v;
      r.colors_seen.assign(seen.begin(), seen.end());
      return r;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Basic algorithm.

BasicRun run_basic_algorithm(const Graph& g) {
  Matching m = maximum_matching(g);
  std::vector<int> raw(g.edge_count(), -1);
  int next = 0;
  for (int e : m.edges) raw[e] = next++;  // ascending edge ids

  // One color per edge-containing component of the non-matching edges.
  std::vector<char> matched(g.edge_count(), 0);
  for (int e : m.edges) matched[e] = 1;
  std::vector<char> visited(g.vertex_count(), 0);
  int leftover = 0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (visited[start]) continue;
    std::vector<int> stack{start};
    std::vector<int> comp_edges;
    visited[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [nb, e] : g.neighbors(v)) {
        if (matched[e]) continue;
        if (raw[e] < 0) {
          raw[e] = -2;  // claimed by this component, colored below
          comp_edges.push_back(e);
        }
        if (!visited[nb]) {
          visited[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
    if (!comp_edges.empty()) {
      for (int e : comp_edges) raw[e] = next;
      ++next;
      ++leftover;
    }
  }

  BasicRun r;
  r.matching_size = m.size();
  r.leftover_components = leftover;
  r.coloring = make_coloring(std::move(raw));
  ME2C_CHECK(r.coloring.colors == r.matching_size + r.leftover_components);
  ME2C_CHECK(check_feasible(g, r.coloring).feasible);
  return r;
}

EdgeColoring basic_algorithm(const Graph& g) { return run_basic_algorithm(g).coloring; }

// ---------------------------------------------------------------------------
// Lifting.

namespace {

// Collapses the inherited edges of a contraction to a single color so the
// reversal can color both hub stars feasibly: two inherited colors are merged
// into one, and a pendant color colliding with the inherited color is moved
// to a fresh one. Count never drops.
void prepare_mod5_lift(std::vector<int>& cur, const Mod5Contract& d) {
  if (d.inherited.empty()) return;
  std::set<int> icolors;
  for (const auto& inh : d.inherited) icolors.insert(cur[inh.post_edge]);
  ME2C_CHECK(icolors.size() <= 2);
  int pendant = cur[d.e_u12v12];
  if (icolors.size() == 2) {
    int c1 = *icolors.begin();
    int c2 = *std::next(icolors.begin());
    for (int& c : cur)
      if (c == c2) c = c1;
    cur[d.e_u12v12] = c2;
  } else if (*icolors.begin() == pendant) {
    cur[d.e_u12v12] = fresh_color(cur);
  }
}

}  // namespace

EdgeColoring lift_coloring(const RewriteLog& log, const EdgeColoring& chi) {
  const Graph& final_graph = log.result();
  if (static_cast<int>(chi.color.size()) != final_graph.edge_count())
    throw std::invalid_argument("coloring does not fit the rewritten graph");
  if (!check_feasible(final_graph, chi).feasible)
    throw std::invalid_argument("coloring to lift is infeasible");

  std::vector<int> cur = chi.color;
  for (int i = static_cast<int>(log.steps.size()) - 1; i >= 0; --i) {
    const Graph& pre = (i == 0) ? log.original : log.states[i - 1];
    const RewriteStep& st = log.steps[i];
    ME2C_CHECK(static_cast<int>(st.edge_map.size()) == pre.edge_count());

    int before = distinct_count(cur);
    if (const auto* d5 = std::get_if<Mod5Contract>(&st.detail)) {
      prepare_mod5_lift(cur, *d5);
      ME2C_CHECK(distinct_count(cur) >= before);
      before = distinct_count(cur);
    }

    std::vector<int> prev(pre.edge_count(), -1);
    for (int e = 0; e < pre.edge_count(); ++e)
      if (st.edge_map[e] >= 0) prev[e] = cur[st.edge_map[e]];

    if (const auto* d = std::get_if<Mod1Leaf>(&st.detail)) {
      // The restored pendant edge takes the smallest color at its hub.
      int c = -1;
      for (const auto& [nb, e] : pre.neighbors(d->hub)) {
        (void)nb;
        if (e == d->removed_edge) continue;
        ME2C_CHECK(prev[e] >= 0);
        c = c < 0 ? prev[e] : std::min(c, prev[e]);
      }
      ME2C_CHECK(c >= 0);
      prev[d->removed_edge] = c;
    } else if (const auto* d = std::get_if<Mod2Split>(&st.detail)) {
      prev[d->e1] = cur[d->ne1];
      prev[d->e2] = cur[d->ne2];
    } else if (const auto* d = std::get_if<Mod3Cactus>(&st.detail)) {
      // Each triangle turns monochromatic in its replacement edge's color.
      for (const auto& t : d->triangles) {
        int c = cur[t.replacement_edge];
        for (int e : t.edges) prev[e] = c;
      }
    } else if (const auto* d = std::get_if<Mod4Bridge>(&st.detail)) {
      if (d->u1 >= 0) prev[d->eu1] = prev[d->eu2] = cur[d->u_link];
      if (d->v1 >= 0) prev[d->ev1] = prev[d->ev2] = cur[d->v_link];
    } else if (const auto* d = std::get_if<Mod5Contract>(&st.detail)) {
      for (const auto& inh : d->inherited) {
        if (inh.e_from_u1 >= 0) prev[inh.e_from_u1] = cur[inh.post_edge];
        if (inh.e_from_u2 >= 0) prev[inh.e_from_u2] = cur[inh.post_edge];
      }
      prev[d->e_u1v1] = cur[d->e_u12v12];
      prev[d->e_u2v2] = cur[d->e_w1w2];
      prev[d->e_u1u2] = d->inherited.empty()
                            ? fresh_color(cur)
                            : cur[d->inherited.front().post_edge];
    }

    for (int c : prev) ME2C_CHECK(c >= 0);
    EdgeColoring probe;
    probe.color = prev;
    ME2C_CHECK(check_feasible(pre, probe).feasible);
    ME2C_CHECK(distinct_count(prev) >= before);
    cur = std::move(prev);
  }
  EdgeColoring out = make_coloring(std::move(cur));
  ME2C_CHECK(out.colors >= chi.colors);
  return out;
}

// ---------------------------------------------------------------------------
// Pendant recoloring.

EdgeColoring make_pendant_colors_unique(const Graph& g, const EdgeColoring& chi) {
  if (!check_feasible(g, chi).feasible)
    throw std::invalid_argument("pendant recoloring requires a feasible coloring");
  std::vector<int> leaves_at(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) ++leaves_at[g.neighbors(v)[0].first];
  for (int v = 0; v < g.vertex_count(); ++v)
    if (leaves_at[v] > 1)
      throw std::invalid_argument("two leaves share a neighbor");

  std::vector<int> cur = chi.color;
  int baseline = distinct_count(cur);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge(e);
    if (g.degree(a) != 1 && g.degree(b) != 1) continue;
    int occurrences = 0;
    for (int c : cur)
      if (c == cur[e]) ++occurrences;
    if (occurrences == 1) continue;
    int hub = g.degree(a) == 1 ? b : a;
    std::set<int> at_hub;
    for (const auto& [nb, he] : g.neighbors(hub)) {
      (void)nb;
      at_hub.insert(cur[he]);
    }
    ME2C_CHECK(!at_hub.empty() && at_hub.size() <= 2);
    if (at_hub.size() == 1) {
      cur[e] = fresh_color(cur);
    } else {
      // Merge the hub's second class into the first; the freed color becomes
      // the pendant's own.
      int c1 = *at_hub.begin();
      int c2 = *std::next(at_hub.begin());
      for (int& c : cur)
        if (c == c2) c = c1;
      cur[e] = c2;
    }
  }

  EdgeColoring out = make_coloring(std::move(cur));
  ME2C_CHECK(out.colors >= baseline);
  ME2C_CHECK(check_feasible(g, out).feasible);
  return out;
}

// ---------------------------------------------------------------------------
// Character graphs.

CharacterGraph extract_character_graph(const Graph& g, const EdgeColoring& chi) {
  if (static_cast<int>(chi.color.size()) != g.edge_count())
    throw std::invalid_argument("coloring does not cover the edge set");
  CharacterGraph h;
  h.edge_of_color.assign(chi.colors, -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    int c = chi.color[e];
    if (c < 0 || c >= chi.colors)
      throw std::invalid_argument("coloring is not canonical");
    if (h.edge_of_color[c] < 0) h.edge_of_color[c] = e;  // smallest edge id
  }
  // Canonical form <=> first uses appear in ascending color order.
  for (int c = 0; c < chi.colors; ++c)
    if (h.edge_of_color[c] < 0 ||
        (c > 0 && h.edge_of_color[c] < h.edge_of_color[c - 1]))
      throw std::invalid_argument("coloring is not canonical");
  h.degree.assign(g.vertex_count(), 0);
  for (int rep : h.edge_of_color) {
    auto [u, v] = g.edge(rep);
    ++h.degree[u];
    ++h.degree[v];
  }
  for (int d : h.degree) ME2C_CHECK(d <= 2);
  return h;
}

namespace {

// Representative adjacency: vertex -> (neighbor, color) pairs.
std::vector<std::vector<std::pair<int, int>>> rep_adjacency(
    const Graph& g, const CharacterGraph& h) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (int c = 0; c < static_cast<int>(h.edge_of_color.size()); ++c) {
    auto [u, v] = g.edge(h.edge_of_color[c]);
    adj[u].push_back({v, c});
    adj[v].push_back({u, c});
  }
  return adj;
}

// Vertices of the representative cycle containing the smallest cycle vertex,
// or empty when the representative graph is acyclic. With max degree 2 a
// component is a cycle exactly when all its vertices have degree 2.
std::vector<int> find_rep_cycle(const Graph& g, const CharacterGraph& h) {
  auto adj = rep_adjacency(g, h);
  std::vector<char> visited(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (visited[s] || adj[s].empty()) continue;
    std::vector<int> comp, stack{s};
    visited[s] = 1;
    bool all_deg2 = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      if (adj[v].size() != 2) all_deg2 = false;
      for (auto [nb, c] : adj[v]) {
        (void)c;
        if (!visited[nb]) {
          visited[nb] = 1;
          stack.push_back(nb);
        }
      }
    }
    if (all_deg2) {
      std::sort(comp.begin(), comp.end());
      return comp;
    }
  }
  return {};
}

}  // namespace

CharacterGraph make_cycle_free(const Graph& g, const EdgeColoring& chi,
                               const CharacterGraph& h) {
  if (!is_normalized(g))
    throw PreconditionError("cycle elimination requires a normalized graph");
  ME2C_CHECK(static_cast<int>(h.edge_of_color.size()) == chi.colors);
  for (int c = 0; c < chi.colors; ++c)
    ME2C_CHECK(chi.color[h.edge_of_color[c]] == c);

  CharacterGraph cur = h;
  // Every swap joins two components without creating a cycle, so the cycle
  // count strictly drops; colors+2 passes is far beyond any possible count.
  for (int pass = 0;; ++pass) {
    ME2C_CHECK(pass <= chi.colors + 2);
    std::vector<int> cycle = find_rep_cycle(g, cur);
    if (cycle.empty()) break;
    std::vector<char> on_cycle(g.vertex_count(), 0);
    for (int v : cycle) on_cycle[v] = 1;
    int u = -1, v = -1;
    for (int cu : cycle) {
      int best = -1;
      for (const auto& [nb, e] : g.neighbors(cu)) {
        (void)e;
        if (!on_cycle[nb] && (best < 0 || nb < best)) best = nb;
      }
      if (best >= 0) {
        u = cu;
        v = best;
        break;
      }
    }
    // A normalized graph always offers an escape edge: a cycle chord would
    // force two representatives of one color.
    ME2C_CHECK(u >= 0);
    int e = g.find_edge(u, v);
    int c = chi.color[e];
    auto [ru, rv] = g.edge(cur.edge_of_color[c]);
    ME2C_CHECK(ru == u || rv == u);  // the old representative sits on the cycle at u
    --cur.degree[ru];
    --cur.degree[rv];
    cur.edge_of_color[c] = e;
    ++cur.degree[u];
    ++cur.degree[v];
    ME2C_CHECK(cur.degree[v] <= 2);
  }
  return cur;
}

bool character_acyclic(const Graph& g, const CharacterGraph& h) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int rep : h.edge_of_color) {
    auto [u, v] = g.edge(rep);
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

int character_components(const Graph& g, const CharacterGraph& h) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = g.vertex_count();
  for (int rep : h.edge_of_color) {
    auto [u, v] = g.edge(rep);
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Fractions and certificates.

Fraction::Fraction(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Fraction::str() const {
  std::ostringstream os;
  os << num << "/" << den;
  return os.str();
}

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Components: return "components";
    case BoundKind::Accounting: return "accounting";
  }
  ME2C_CHECK(false);
}

std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << "achieved " << c.achieved << "\n";
  os << "bound " << c.bound << "\n";
  os << "bound_kind " << bound_kind_name(c.bound_kind) << "\n";
  os << "ratio " << c.ratio.str() << "\n";
  return os.str();
}

Certificate upper_bound(const Graph& normalized, const NormalizeStats& stats,
                        Strategy strategy) {
  if (!is_normalized(normalized))
    throw PreconditionError("upper bound requires a normalized graph");
  Certificate cert;
  ComponentView cv = components(normalized);
  for (int i = 0; i < cv.count(); ++i) {
    const auto& info = cv.info[i];
    BoundPart part;
    part.n = info.vertices;
    part.m = info.edges;
    part.leaves = info.leaves;
    if (info.vertices == 1) {
      part.kind = PartKind::IsolatedVertex;
      part.value = 0;
    } else if (info.vertices == 2) {
      part.kind = PartKind::IsolatedEdge;
      part.value = 1;
    } else {
      part.kind = PartKind::MaxColors;
      part.value = static_cast<int>(floor_div(3LL * info.vertices - info.leaves, 4));
    }
    cert.components_bound += part.value;
    cert.parts.push_back(part);
  }
  if (strategy == Strategy::PerfectMatching) {
    long long num = 3LL * stats.n_original + stats.d2_plus - stats.d2_minus;
    cert.pm_accounting_exact = Fraction(num, 4);
    cert.pm_matching_lower = 2 * stats.d2_plus + stats.d2_minus;
    cert.pm_tracked_matching = stats.tracked_matching_size;
    cert.bound = static_cast<int>(floor_div(num, 4));
    cert.bound_kind = BoundKind::Accounting;
  } else {
    cert.bound = cert.components_bound;
    cert.bound_kind = BoundKind::Components;
  }
  return cert;
}

// ---------------------------------------------------------------------------
// End-to-end solve.

SolveResult solve(const Graph& g, Strategy strategy) {
  NormalizeResult nr = normalize(g, strategy);
  const Graph& h = nr.log.result();

  ComponentView cv = components(h);
  std::vector<int> raw(h.edge_count(), -1);
  int offset = 0;
  SolveResult out;
  for (int i = 0; i < cv.count(); ++i) {
    Subgraph sub = induced_component(h, cv, i);
    if (sub.graph.edge_count() == 0) continue;
    BasicRun br = run_basic_algorithm(sub.graph);
    for (int le = 0; le < sub.graph.edge_count(); ++le)
      raw[sub.edge_to_global[le]] = offset + br.coloring.color[le];
    offset += br.coloring.colors;
    out.matching_size += br.matching_size;
    out.leftover_components += br.leftover_components;
  }
  EdgeColoring chi_h = make_coloring(std::move(raw));
  ME2C_CHECK(chi_h.colors == offset);
  ME2C_CHECK(check_feasible(h, chi_h).feasible);

  EdgeColoring lifted = lift_coloring(nr.log, chi_h);
  ME2C_CHECK(check_feasible(g, lifted).feasible);
  ME2C_CHECK(lifted.colors >= chi_h.colors);

  Certificate cert = upper_bound(h, nr.stats, strategy);
  cert.achieved = lifted.colors;
  cert.multi_component = components(g).count() > 1;
  cert.ratio = cert.achieved > 0 ? Fraction(cert.bound, cert.achieved) : Fraction(1, 1);
  if (cert.achieved > cert.bound)
    throw CertificationError("achieved color count exceeds the certified bound",
                             cert, nr.stats);

  out.coloring = std::move(lifted);
  out.certificate = std::move(cert);
  out.stats = nr.stats;
  out.strategy = strategy;
  return out;
}

}  // namespace me2c
