#include "me2c/normalize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace me2c {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::General: return "general";
    case Strategy::Subcubic: return "subcubic";
    case Strategy::ClawFree: return "clawfree";
    case Strategy::PerfectMatching: return "pm";
  }
  ME2C_CHECK(false);
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  if (name == "general") return Strategy::General;
  if (name == "subcubic") return Strategy::Subcubic;
  if (name == "clawfree") return Strategy::ClawFree;
  if (name == "pm") return Strategy::PerfectMatching;
  return std::nullopt;
}

namespace {

// Builds a rewritten graph plus the identity maps of a RewriteStep. Usage:
// mark removals, finalize (surviving vertices and edges are compacted in
// pre-id order), then append fresh vertices and edges.
class StepBuilder {
 public:
  explicit StepBuilder(const Graph& pre) : pre_(pre) {
    vrem_.assign(pre.vertex_count(), 0);
    erem_.assign(pre.edge_count(), 0);
  }

  void remove_vertex(int v) { vrem_.at(v) = 1; }
  void remove_edge(int e) { erem_.at(e) = 1; }
  bool edge_removed(int e) const { return erem_.at(e) != 0; }

  void finalize() {
    ME2C_CHECK(!finalized_);
    finalized_ = true;
    vmap_.assign(pre_.vertex_count(), -1);
    emap_.assign(pre_.edge_count(), -1);
    for (int v = 0; v < pre_.vertex_count(); ++v) {
      if (vrem_[v]) {
        // A removed vertex must not leave dangling edges behind.
        for (const auto& [nb, e] : pre_.neighbors(v)) {
          (void)nb;
          ME2C_CHECK(erem_[e]);
        }
        continue;
      }
      vmap_[v] = post_.add_vertex();
    }
    for (int e = 0; e < pre_.edge_count(); ++e) {
      if (erem_[e]) continue;
      auto [u, v] = pre_.edge(e);
      ME2C_CHECK(vmap_[u] >= 0 && vmap_[v] >= 0);
      emap_[e] = post_.add_edge(vmap_[u], vmap_[v]);
    }
  }

  int add_vertex() {
    ME2C_CHECK(finalized_);
    return post_.add_vertex();
  }

  int add_edge(int post_u, int post_v) {
    ME2C_CHECK(finalized_);
    int e = post_.add_edge(post_u, post_v);
    added_.push_back({e, post_u, post_v});
    return e;
  }

  int vertex_post(int pre) const { return vmap_.at(pre); }
  int edge_post(int pre) const { return emap_.at(pre); }

  // Moves the maps into the step and returns the finished graph.
  Graph install(RewriteStep& st) {
    ME2C_CHECK(finalized_);
    st.vertex_map = std::move(vmap_);
    st.edge_map = std::move(emap_);
    st.post_vertex_count = post_.vertex_count();
    st.added_edges = std::move(added_);
    return std::move(post_);
  }

 private:
  const Graph& pre_;
  std::vector<char> vrem_, erem_;
  bool finalized_ = false;
  std::vector<int> vmap_, emap_;
  Graph post_;
  std::vector<AddedEdge> added_;
};

std::vector<int> pendant_neighbors(const Graph& g, int v) {
  std::vector<int> out;
  for (const auto& [nb, e] : g.neighbors(v)) {
    (void)e;
    if (g.degree(nb) == 1) out.push_back(nb);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int find_mod1_site(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3 && static_cast<int>(pendant_neighbors(g, v).size()) >= 2)
      return v;
  return -1;
}

int find_deg2(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) return v;
  return -1;
}

// matched == nullptr picks the smallest-id leaf to retain; otherwise a leaf
// matched to the hub is retained so the matching survives the removal.
std::pair<Graph, RewriteStep> apply_mod1_at(const Graph& g, int hub,
                                            const std::vector<char>* matched) {
  ME2C_CHECK(g.degree(hub) >= 3);
  std::vector<int> leaves = pendant_neighbors(g, hub);
  ME2C_CHECK(leaves.size() >= 2);
  int retained = leaves[0];
  if (matched) {
    for (int leaf : leaves) {
      int e = g.find_edge(hub, leaf);
      if ((*matched)[e]) {
        retained = leaf;
        break;  // at most one leaf can be matched to the hub
      }
    }
  }
  int removed = -1;
  for (int leaf : leaves)
    if (leaf != retained) {
      removed = leaf;
      break;
    }
  ME2C_CHECK(removed >= 0);
  int removed_edge = g.find_edge(hub, removed);
  if (matched) ME2C_CHECK(!(*matched)[removed_edge]);

  StepBuilder b(g);
  b.remove_edge(removed_edge);
  b.remove_vertex(removed);
  b.finalize();
  RewriteStep st;
  st.detail = Mod1Leaf{hub, removed, retained, removed_edge};
  Graph out = b.install(st);
  return {std::move(out), std::move(st)};
}

std::pair<Graph, RewriteStep> apply_mod2_at(const Graph& g, int v) {
  ME2C_CHECK(g.degree(v) == 2);
  int u1 = g.neighbors(v)[0].first, u2 = g.neighbors(v)[1].first;
  if (u1 > u2) std::swap(u1, u2);
  int e1 = g.find_edge(v, u1), e2 = g.find_edge(v, u2);

  StepBuilder b(g);
  b.remove_edge(e1);
  b.remove_edge(e2);
  b.remove_vertex(v);
  b.finalize();
  Mod2Split d;
  d.v = v;
  d.u1 = u1;
  d.u2 = u2;
  d.e1 = e1;
  d.e2 = e2;
  d.v1 = b.add_vertex();
  d.v2 = b.add_vertex();
  d.ne1 = b.add_edge(b.vertex_post(u1), d.v1);
  d.ne2 = b.add_edge(b.vertex_post(u2), d.v2);
  RewriteStep st;
  st.detail = d;
  Graph out = b.install(st);
  return {std::move(out), std::move(st)};
}

struct Mod3Out {
  Graph graph;
  RewriteStep step;
  std::vector<char> post_matched;  // only when a matching was supplied
};

Mod3Out mod3_impl(const Graph& g, const Cactus& c, const std::vector<char>* matched) {
  ME2C_CHECK(validate_cactus(g, c));
  StepBuilder b(g);
  Mod3Cactus payload;
  payload.pm_variant = matched != nullptr;
  payload.needles = c.needles;

  for (const auto& t : c.triangles) {
    Mod3Tri mt;
    mt.vertices = t;
    mt.edges = {g.find_edge(t[0], t[1]), g.find_edge(t[0], t[2]),
                g.find_edge(t[1], t[2])};
    if (matched) {
      for (int i = 0; i < 3; ++i)
        if ((*matched)[mt.edges[i]]) {
          ME2C_CHECK(mt.kept_edge_index < 0);  // a triangle holds <= 1 matched edge
          mt.kept_edge_index = i;
        }
    }
    for (int i = 0; i < 3; ++i)
      if (i != mt.kept_edge_index) b.remove_edge(mt.edges[i]);
    payload.triangles.push_back(mt);
  }

  // Corners whose every incident edge was a removed cactus edge vanish.
  std::vector<int> corners;
  for (const auto& t : c.triangles) corners.insert(corners.end(), t.begin(), t.end());
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  for (int v : corners) {
    bool isolated = true;
    for (const auto& [nb, e] : g.neighbors(v)) {
      (void)nb;
      if (!b.edge_removed(e)) isolated = false;
    }
    if (isolated) {
      b.remove_vertex(v);
      payload.discarded.push_back(v);
    }
  }

  b.finalize();
  for (auto& mt : payload.triangles) {
    if (mt.kept_edge_index >= 0) {
      mt.replacement_edge = b.edge_post(mt.edges[mt.kept_edge_index]);
    } else {
      mt.fresh_x = b.add_vertex();
      mt.fresh_y = b.add_vertex();
      mt.replacement_edge = b.add_edge(mt.fresh_x, mt.fresh_y);
    }
  }

  RewriteStep st;
  Mod3Out out;
  if (matched) {
    out.post_matched.assign(0, 0);
    std::vector<char> pm;
    // sized after install below; fill surviving memberships first via the maps
    // kept in st once installed.
    st.detail = payload;
    out.graph = b.install(st);
    pm.assign(out.graph.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
      if ((*matched)[e] && st.edge_map[e] >= 0) pm[st.edge_map[e]] = 1;
    for (const auto& mt : std::get<Mod3Cactus>(st.detail).triangles)
      if (mt.kept_edge_index < 0) pm[mt.replacement_edge] = 1;
    out.post_matched = std::move(pm);
    out.step = std::move(st);
    return out;
  }
  st.detail = payload;
  out.graph = b.install(st);
  out.step = std::move(st);
  return out;
}

bool one_pendant(const Graph& g, int v, int* pendant) {
  std::vector<int> p = pendant_neighbors(g, v);
  if (p.size() != 1) return false;
  *pendant = p[0];
  return true;
}

bool mod5_eligible(const Graph& g, int a, int b) {
  int pa = -1, pb = -1;
  if (a == b || !g.has_edge(a, b)) return false;
  if (!one_pendant(g, a, &pa) || !one_pendant(g, b, &pb)) return false;
  // Contracting two bare paths would drop the optimum; some hub must carry a
  // third edge.
  if (g.degree(a) == 2 && g.degree(b) == 2) return false;
  return true;
}

std::pair<Graph, RewriteStep> apply_mod5_at(const Graph& g, int u1, int u2) {
  ME2C_CHECK(u1 < u2 && mod5_eligible(g, u1, u2));
  Mod5Contract d;
  d.u1 = u1;
  d.u2 = u2;
  one_pendant(g, u1, &d.v1);
  one_pendant(g, u2, &d.v2);
  d.e_u1u2 = g.find_edge(u1, u2);
  d.e_u1v1 = g.find_edge(u1, d.v1);
  d.e_u2v2 = g.find_edge(u2, d.v2);

  std::vector<int> zs;
  for (const auto& [nb, e] : g.neighbors(u1)) {
    (void)e;
    if (nb != u2 && nb != d.v1) zs.push_back(nb);
  }
  for (const auto& [nb, e] : g.neighbors(u2)) {
    (void)e;
    if (nb != u1 && nb != d.v2) zs.push_back(nb);
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());

  StepBuilder b(g);
  b.remove_edge(d.e_u1u2);
  b.remove_edge(d.e_u1v1);
  b.remove_edge(d.e_u2v2);
  for (int z : zs) {
    Mod5Inherit inh;
    inh.z = z;
    inh.e_from_u1 = g.find_edge(u1, z);
    inh.e_from_u2 = g.find_edge(u2, z);
    if (inh.e_from_u1 >= 0) b.remove_edge(inh.e_from_u1);
    if (inh.e_from_u2 >= 0) b.remove_edge(inh.e_from_u2);
    d.inherited.push_back(inh);
  }
  b.remove_vertex(u1);
  b.remove_vertex(u2);
  b.remove_vertex(d.v1);
  b.remove_vertex(d.v2);
  b.finalize();
  d.u12 = b.add_vertex();
  d.v12 = b.add_vertex();
  d.w1 = b.add_vertex();
  d.w2 = b.add_vertex();
  for (auto& inh : d.inherited)
    inh.post_edge = b.add_edge(d.u12, b.vertex_post(inh.z));
  d.e_u12v12 = b.add_edge(d.u12, d.v12);
  d.e_w1w2 = b.add_edge(d.w1, d.w2);
  RewriteStep st;
  st.detail = d;
  Graph out = b.install(st);
  return {std::move(out), std::move(st)};
}

}  // namespace

std::optional<std::pair<Graph, RewriteStep>> apply_mod1(const Graph& g) {
  int hub = find_mod1_site(g);
  if (hub < 0) return std::nullopt;
  return apply_mod1_at(g, hub, nullptr);
}

std::optional<std::pair<Graph, RewriteStep>> apply_mod2(const Graph& g) {
  int v = find_deg2(g);
  if (v < 0) return std::nullopt;
  return apply_mod2_at(g, v);
}

std::pair<Graph, RewriteStep> apply_mod3(const Graph& g, const Cactus& c) {
  Mod3Out out = mod3_impl(g, c, nullptr);
  return {std::move(out.graph), std::move(out.step)};
}

Mod3PmResult apply_mod3_pm(const Graph& g, const Cactus& c, const Matching& m) {
  if (!is_perfect(m, g))
    throw PreconditionError("matching-aware cactus replacement requires a perfect matching");
  Mod3Out out = mod3_impl(g, c, &m.in);
  Mod3PmResult r;
  r.matching = matching_from_edges(out.graph, out.post_matched);
  r.graph = std::move(out.graph);
  r.step = std::move(out.step);
  return r;
}

std::optional<std::pair<Graph, RewriteStep>> apply_mod4(const Graph& g) {
  for (int e : find_bridges(g)) {
    auto [u, v] = g.edge(e);
    int du = g.degree(u), dv = g.degree(v);
    if ((du != 1 && du != 3) || (dv != 1 && dv != 3)) continue;
    if (du == 1 && dv == 1) continue;  // already an isolated edge, no effect

    Mod4Bridge d;
    d.u = u;
    d.v = v;
    d.bridge_edge = e;
    StepBuilder b(g);
    auto cut_side = [&](int w, int other, int& w1, int& w2, int& ew1, int& ew2) {
      if (g.degree(w) != 3) return;
      std::vector<int> nb;
      for (const auto& [x, ex] : g.neighbors(w)) {
        (void)ex;
        if (x != other) nb.push_back(x);
      }
      std::sort(nb.begin(), nb.end());
      w1 = nb[0];
      w2 = nb[1];
      ew1 = g.find_edge(w, w1);
      ew2 = g.find_edge(w, w2);
      b.remove_edge(ew1);
      b.remove_edge(ew2);
    };
    cut_side(u, v, d.u1, d.u2, d.eu1, d.eu2);
    cut_side(v, u, d.v1, d.v2, d.ev1, d.ev2);
    b.finalize();
    auto link_side = [&](int w1, int w2, int& link, bool& added) {
      if (w1 < 0) return;
      int pre = g.find_edge(w1, w2);
      if (pre >= 0) {
        link = b.edge_post(pre);
        added = false;
      } else {
        link = b.add_edge(b.vertex_post(w1), b.vertex_post(w2));
        added = true;
      }
    };
    link_side(d.u1, d.u2, d.u_link, d.u_link_added);
    link_side(d.v1, d.v2, d.v_link, d.v_link_added);
    RewriteStep st;
    st.detail = d;
    Graph out = b.install(st);
    return std::make_pair(std::move(out), std::move(st));
  }
  return std::nullopt;
}

std::optional<std::pair<Graph, RewriteStep>> apply_mod5(const Graph& g) {
  for (int a = 0; a < g.vertex_count(); ++a) {
    int pa = -1;
    if (!one_pendant(g, a, &pa)) continue;
    std::vector<int> nbs;
    for (const auto& [nb, e] : g.neighbors(a)) {
      (void)e;
      if (nb > a) nbs.push_back(nb);
    }
    std::sort(nbs.begin(), nbs.end());
    for (int nb : nbs)
      if (mod5_eligible(g, a, nb)) return apply_mod5_at(g, a, nb);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Simple cactus detection: gather candidate triangles (corner degrees 3/4),
// discard to a fixpoint every candidate whose degree-4 corner lacks its
// forced partner triangle, then grow the forced closure from each surviving
// seed and validate.

bool validate_cactus(const Graph& g, const Cactus& c) {
  if (c.triangles.empty()) return false;
  int t_count = static_cast<int>(c.triangles.size());
  std::map<int, int> tri_count;  // corner -> number of containing triangles
  std::vector<char> in_cactus_edge(g.edge_count(), 0);
  for (int i = 0; i < t_count; ++i) {
    const auto& t = c.triangles[i];
    if (!(t[0] < t[1] && t[1] < t[2])) return false;
    if (i > 0 && !(c.triangles[i - 1] < t)) return false;
    for (int k = 0; k < 3; ++k) {
      int d = g.degree(t[k]);
      if (d != 3 && d != 4) return false;
      ++tri_count[t[k]];
    }
    int es[3] = {g.find_edge(t[0], t[1]), g.find_edge(t[0], t[2]),
                 g.find_edge(t[1], t[2])};
    for (int e : es) {
      if (e < 0) return false;
      in_cactus_edge[e] = 1;
    }
  }
  for (const auto& [v, cnt] : tri_count) {
    if (cnt > 2) return false;
    if (g.degree(v) == 4 && cnt != 2) return false;  // two needles otherwise
    if (g.degree(v) == 3 && cnt != 1) return false;
  }
  // Tree structure over triangles: sharing pairs are single-vertex and number
  // exactly t_count - 1, and the sharing graph is connected.
  std::map<std::pair<int, int>, int> shared;
  for (int i = 0; i < t_count; ++i)
    for (int j = i + 1; j < t_count; ++j) {
      int cnt = 0;
      for (int a : c.triangles[i])
        for (int b : c.triangles[j])
          if (a == b) ++cnt;
      if (cnt > 1) return false;
      if (cnt == 1) shared[{i, j}] = 1;
    }
  if (static_cast<int>(shared.size()) != t_count - 1) return false;
  std::vector<std::vector<int>> tadj(t_count);
  for (const auto& [p, one] : shared) {
    (void)one;
    tadj[p.first].push_back(p.second);
    tadj[p.second].push_back(p.first);
  }
  std::vector<char> seen(t_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int o : tadj[t])
      if (!seen[o]) {
        seen[o] = 1;
        ++reached;
        stack.push_back(o);
      }
  }
  if (reached != t_count) return false;
  // Needles: every degree-3 corner has exactly one non-cactus edge.
  std::vector<std::pair<int, int>> expect;
  for (const auto& [v, cnt] : tri_count) {
    (void)cnt;
    if (g.degree(v) != 3) continue;
    int found = 0, other = -1;
    for (const auto& [nb, e] : g.neighbors(v))
      if (!in_cactus_edge[e]) {
        ++found;
        other = nb;
      }
    if (found != 1) return false;
    expect.push_back({v, other});
  }
  std::sort(expect.begin(), expect.end());
  std::vector<std::pair<int, int>> got = c.needles;
  std::sort(got.begin(), got.end());
  return got == expect;
}

std::optional<Cactus> find_simple_cactus(const Graph& g) {
  std::vector<std::array<int, 3>> cand;
  for (const auto& t : list_triangles(g)) {
    bool ok = true;
    for (int v : t) {
      int d = g.degree(v);
      if (d != 3 && d != 4) ok = false;
    }
    if (ok) cand.push_back(t);
  }
  if (cand.empty()) return std::nullopt;
  std::map<std::array<int, 3>, int> index;
  for (int i = 0; i < static_cast<int>(cand.size()); ++i) index[cand[i]] = i;
  std::vector<char> live(cand.size(), 1);

  // The partner of a degree-4 corner is forced: the triangle on its two
  // neighbors outside the current one.
  auto partner = [&](int ti, int corner) -> int {
    const auto& t = cand[ti];
    std::array<int, 3> p{corner, -1, -1};
    int k = 1;
    for (const auto& [nb, e] : g.neighbors(corner)) {
      (void)e;
      if (nb == t[0] || nb == t[1] || nb == t[2]) continue;
      if (k > 2) return -1;
      p[k++] = nb;
    }
    if (k != 3) return -1;
    std::sort(p.begin(), p.end());
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < static_cast<int>(cand.size()); ++i) {
      if (!live[i]) continue;
      for (int v : cand[i]) {
        if (g.degree(v) != 4) continue;
        int p = partner(i, v);
        if (p < 0 || !live[p]) {
          live[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }

  for (int seed = 0; seed < static_cast<int>(cand.size()); ++seed) {
    if (!live[seed]) continue;
    std::vector<int> members{seed};
    std::vector<char> in_members(cand.size(), 0);
    in_members[seed] = 1;
    bool ok = true;
    for (size_t qi = 0; qi < members.size() && ok; ++qi) {
      int ti = members[qi];
      for (int v : cand[ti]) {
        if (g.degree(v) != 4) continue;
        int p = partner(ti, v);
        if (p < 0 || !live[p]) {
          ok = false;
          break;
        }
        if (in_members[p]) continue;
        // The newcomer must touch exactly one member at exactly one vertex,
        // or the triangle tree would close a cycle.
        int touching = 0, shared_total = 0;
        for (int mi : members) {
          int cnt = 0;
          for (int a : cand[p])
            for (int b : cand[mi])
              if (a == b) ++cnt;
          if (cnt > 0) {
            ++touching;
            shared_total += cnt;
          }
        }
        if (touching != 1 || shared_total != 1) {
          ok = false;
          break;
        }
        in_members[p] = 1;
        members.push_back(p);
      }
    }
    if (!ok) continue;
    Cactus c;
    for (int mi : members) c.triangles.push_back(cand[mi]);
    std::sort(c.triangles.begin(), c.triangles.end());
    std::vector<char> in_cactus_edge(g.edge_count(), 0);
    for (const auto& t : c.triangles) {
      in_cactus_edge[g.find_edge(t[0], t[1])] = 1;
      in_cactus_edge[g.find_edge(t[0], t[2])] = 1;
      in_cactus_edge[g.find_edge(t[1], t[2])] = 1;
    }
    std::vector<int> corners;
    for (const auto& t : c.triangles) corners.insert(corners.end(), t.begin(), t.end());
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    for (int v : corners) {
      if (g.degree(v) != 3) continue;
      for (const auto& [nb, e] : g.neighbors(v))
        if (!in_cactus_edge[e]) c.needles.push_back({v, nb});
    }
    std::sort(c.needles.begin(), c.needles.end());
    if (validate_cactus(g, c)) return c;
  }
  return std::nullopt;
}

bool is_normalized(const Graph& g) {
  return find_deg2(g) < 0 && find_mod1_site(g) < 0 && !find_simple_cactus(g);
}

// ---------------------------------------------------------------------------
// Replay and traces.

Graph replay_step(const Graph& pre, const RewriteStep& st) {
  ME2C_CHECK(static_cast<int>(st.vertex_map.size()) == pre.vertex_count());
  ME2C_CHECK(static_cast<int>(st.edge_map.size()) == pre.edge_count());
  Graph post;
  int survivors = 0;
  for (int v = 0; v < pre.vertex_count(); ++v)
    if (st.vertex_map[v] >= 0) {
      ME2C_CHECK(st.vertex_map[v] == survivors);
      ++survivors;
    }
  for (int i = 0; i < st.post_vertex_count; ++i) post.add_vertex();
  int next_edge = 0;
  for (int e = 0; e < pre.edge_count(); ++e) {
    if (st.edge_map[e] < 0) continue;
    ME2C_CHECK(st.edge_map[e] == next_edge);
    auto [u, v] = pre.edge(e);
    ME2C_CHECK(st.vertex_map[u] >= 0 && st.vertex_map[v] >= 0);
    int got = post.add_edge(st.vertex_map[u], st.vertex_map[v]);
    ME2C_CHECK(got == next_edge);
    ++next_edge;
  }
  for (const auto& ae : st.added_edges) {
    int got = post.add_edge(ae.u, ae.v);
    ME2C_CHECK(got == ae.edge && ae.edge == next_edge);
    ++next_edge;
  }
  return post;
}

Graph replay(const RewriteLog& log) {
  Graph cur = log.original;
  ME2C_CHECK(log.steps.size() == log.states.size());
  for (size_t i = 0; i < log.steps.size(); ++i) {
    Graph next = replay_step(cur, log.steps[i]);
    ME2C_CHECK(next == log.states[i]);
    cur = std::move(next);
  }
  return cur;
}

std::string RewriteStep::trace_line() const {
  std::ostringstream os;
  if (const auto* d = std::get_if<Mod1Leaf>(&detail)) {
    os << "mod1 hub=" << d->hub << " removed=" << d->removed_leaf
       << " retained=" << d->retained_leaf;
  } else if (const auto* d = std::get_if<Mod2Split>(&detail)) {
    os << "mod2 v=" << d->v << " hubs=(" << d->u1 << "," << d->u2
       << ") pendants=(" << d->v1 << "," << d->v2 << ")";
  } else if (const auto* d = std::get_if<Mod3Cactus>(&detail)) {
    os << (d->pm_variant ? "mod3-pm" : "mod3") << " triangles=[";
    for (size_t i = 0; i < d->triangles.size(); ++i) {
      const auto& t = d->triangles[i];
      os << (i ? " " : "") << t.vertices[0] << "-" << t.vertices[1] << "-"
         << t.vertices[2];
      if (t.kept_edge_index >= 0) os << "*";
    }
    os << "] needles=" << d->needles.size()
       << " discarded=" << d->discarded.size();
  } else if (const auto* d = std::get_if<Mod4Bridge>(&detail)) {
    os << "mod4 bridge=(" << d->u << "," << d->v << ")";
    auto side = [&](int w1, int w2, bool added) {
      if (w1 < 0)
        os << "none";
      else
        os << "(" << w1 << "," << w2 << (added ? ",new)" : ",kept)");
    };
    os << " u_side=";
    side(d->u1, d->u2, d->u_link_added);
    os << " v_side=";
    side(d->v1, d->v2, d->v_link_added);
  } else if (const auto* d = std::get_if<Mod5Contract>(&detail)) {
    os << "mod5 hubs=(" << d->u1 << "," << d->u2 << ") pendants=(" << d->v1
       << "," << d->v2 << ") inherited=" << d->inherited.size();
  }
  return os.str();
}

std::string RewriteLog::trace() const {
  std::string out;
  for (const auto& st : steps) {
    out += st.trace_line();
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Strategy loops.

namespace {

// Moves matching membership and introduced-pendant marks across one step.
void transfer_marks(const RewriteStep& st, const Graph& post,
                    std::vector<char>* matched, std::vector<char>& in_s,
                    const std::vector<char>* mod3_post_matched) {
  if (matched) {
    if (mod3_post_matched) {
      *matched = *mod3_post_matched;
    } else {
      std::vector<char> next(post.edge_count(), 0);
      for (int e = 0; e < static_cast<int>(st.edge_map.size()); ++e)
        if ((*matched)[e] && st.edge_map[e] >= 0) next[st.edge_map[e]] = 1;
      if (const auto* d = std::get_if<Mod2Split>(&st.detail)) {
        if ((*matched)[d->e1]) next[d->ne1] = 1;
        if ((*matched)[d->e2]) next[d->ne2] = 1;
      }
      *matched = std::move(next);
    }
  }
  std::vector<char> next_s(post.vertex_count(), 0);
  for (int v = 0; v < static_cast<int>(st.vertex_map.size()); ++v)
    if (in_s[v] && st.vertex_map[v] >= 0) next_s[st.vertex_map[v]] = 1;
  if (const auto* d = std::get_if<Mod2Split>(&st.detail)) {
    next_s[d->v1] = 1;
    next_s[d->v2] = 1;
  }
  in_s = std::move(next_s);
}

}  // namespace

NormalizeResult normalize(const Graph& g, Strategy strategy) {
  switch (strategy) {
    case Strategy::General:
      break;
    case Strategy::Subcubic:
      if (!is_subcubic(g))
        throw PreconditionError("subcubic strategy requires max degree <= 3");
      break;
    case Strategy::ClawFree:
      if (!is_claw_free(g))
        throw PreconditionError("clawfree strategy requires a claw-free graph");
      break;
    case Strategy::PerfectMatching:
      break;  // checked below, the matching itself is needed
  }

  NormalizeResult r;
  r.log.original = g;
  r.stats.n_original = g.vertex_count();
  r.stats.m_original = g.edge_count();

  bool pm = strategy == Strategy::PerfectMatching;
  std::vector<char> matched, in_s;
  if (pm) {
    Matching m0 = maximum_matching(g);
    if (!is_perfect(m0, g))
      throw PreconditionError("pm strategy requires a graph with a perfect matching");
    matched = m0.in;
    in_s.assign(g.vertex_count(), 0);
  }

  Graph cur = g;
  const long long cap = 50LL * (g.vertex_count() + g.edge_count() + 2);
  long long steps = 0;

  auto push = [&](std::pair<Graph, RewriteStep>&& sr,
                  const std::vector<char>* mod3_matched = nullptr) {
    if (pm) transfer_marks(sr.second, sr.first, &matched, in_s, mod3_matched);
    cur = sr.first;
    r.log.steps.push_back(std::move(sr.second));
    r.log.states.push_back(std::move(sr.first));
    ++steps;
    ME2C_CHECK(steps <= cap);  // generous cap; must never trip
  };

  for (;;) {
    int v2 = find_deg2(cur);
    if (v2 >= 0) {
      if (pm)
        for (const auto& [nb, e] : cur.neighbors(v2)) {
          (void)e;
          if (cur.degree(nb) == 1 && in_s[nb]) r.stats.cascade = true;
        }
      auto split = apply_mod2_at(cur, v2);
      const auto& d = std::get<Mod2Split>(split.second.detail);
      int h1 = split.second.vertex_map[d.u1];
      int h2 = split.second.vertex_map[d.u2];
      ++r.stats.mod2;
      push(std::move(split));

      if (pm) {
        // One split event: the split plus immediate pendant cleanup at its
        // two hubs, classified by how many sides removed a pendant.
        int sides = 0;
        std::array<int, 2> hubs{h1, h2};
        std::array<int, 2> own{d.v1, d.v2};  // this event's pendants
        for (int side = 0; side < 2; ++side) {
          int removals = 0;
          while (true) {
            int h = hubs[side];
            if (cur.degree(h) < 3 ||
                static_cast<int>(pendant_neighbors(cur, h).size()) < 2)
              break;
            auto one = apply_mod1_at(cur, h, &matched);
            const auto& prune = std::get<Mod1Leaf>(one.second.detail);
            // Removing a pendant from an earlier event invalidates the census.
            if (in_s[prune.removed_leaf] && prune.removed_leaf != own[0] &&
                prune.removed_leaf != own[1])
              r.stats.cascade = true;
            ++r.stats.mod1;
            ++removals;
            for (int& hh : hubs) hh = one.second.vertex_map[hh];
            for (int& o : own)
              if (o >= 0) o = one.second.vertex_map[o];
            push(std::move(one));
          }
          if (removals > 0) ++sides;
        }
        if (sides == 0)
          ++r.stats.d2_plus;
        else if (sides == 1)
          ++r.stats.d2_minus;
        else {
          --r.stats.d2_plus;
          r.stats.d2_minus += 2;
        }
      } else if (strategy == Strategy::ClawFree) {
        // The split may have produced an adjacent pendant-carrying hub pair;
        // contract it right away.
        int a = std::min(h1, h2), b = std::max(h1, h2);
        if (mod5_eligible(cur, a, b)) {
          ++r.stats.mod5;
          push(apply_mod5_at(cur, a, b));
        }
      }
      continue;
    }

    int hub = find_mod1_site(cur);
    if (hub >= 0) {
      auto one = apply_mod1_at(cur, hub, pm ? &matched : nullptr);
      if (pm && in_s[std::get<Mod1Leaf>(one.second.detail).removed_leaf])
        r.stats.cascade = true;
      ++r.stats.mod1;
      push(std::move(one));
      continue;
    }

    if (auto cactus = find_simple_cactus(cur)) {
      ++r.stats.mod3;
      if (pm) {
        Mod3Out out = mod3_impl(cur, *cactus, &matched);
        std::vector<char> post_matched = std::move(out.post_matched);
        push({std::move(out.graph), std::move(out.step)}, &post_matched);
      } else {
        push(apply_mod3(cur, *cactus));
      }
      continue;
    }

    if (strategy == Strategy::Subcubic) {
      if (auto cut = apply_mod4(cur)) {
        ++r.stats.mod4;
        push(std::move(*cut));
        continue;
      }
    }
    break;
  }

  if (pm) {
    r.stats.tracked_matching_size =
        static_cast<int>(std::count(matched.begin(), matched.end(), 1));
    r.stats.surviving_introduced_pendants =
        static_cast<int>(std::count(in_s.begin(), in_s.end(), 1));
  }
  return r;
}

}  // namespace me2c
