#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "me2c/graph.hpp"
#include "me2c/matching.hpp"

namespace me2c {

// Thrown when an input violates a documented precondition of a public entry
// point (wrong graph class for a strategy, matching not perfect, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Strategy { General, Subcubic, ClawFree, PerfectMatching };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

// ---------------------------------------------------------------------------
// Rewrite step payloads. All vertex/edge ids refer to the graph BEFORE the
// step unless the field says otherwise. "post" ids refer to the graph after.

// Removes one of two pendant neighbors of a shared hub of degree >= 3.
struct Mod1Leaf {
  int hub = -1;            // pre id, degree >= 3 at application time
  int removed_leaf = -1;   // pre id
  int retained_leaf = -1;  // pre id
  int removed_edge = -1;   // pre id of hub-removed_leaf
};

// Splits a degree-2 vertex into two pendants, one per neighbor.
struct Mod2Split {
  int v = -1;            // pre id of the split vertex
  int u1 = -1, u2 = -1;  // pre ids of its neighbors, u1 < u2
  int e1 = -1, e2 = -1;  // pre edge ids v-u1, v-u2
  int v1 = -1, v2 = -1;  // post ids of the new pendants on u1, u2
  int ne1 = -1, ne2 = -1;  // post edge ids u1-v1, u2-v2
};

// One triangle of a replaced simple cactus.
struct Mod3Tri {
  std::array<int, 3> vertices{-1, -1, -1};  // pre ids, ascending
  std::array<int, 3> edges{-1, -1, -1};     // pre edge ids v0v1, v0v2, v1v2
  // Index into `edges` of a retained matched edge, or -1 when the triangle is
  // replaced by a fresh isolated edge.
  int kept_edge_index = -1;
  int fresh_x = -1, fresh_y = -1;  // post ids of the fresh endpoints, -1 if kept
  int replacement_edge = -1;       // post edge id carrying the triangle's color
};

// Replaces a simple cactus component by one edge per triangle.
struct Mod3Cactus {
  std::vector<Mod3Tri> triangles;
  std::vector<std::pair<int, int>> needles;  // (host, leaf) pre ids
  std::vector<int> discarded;                // pre vertex ids removed
  bool pm_variant = false;
};

// Detaches a bridge whose endpoints have degree 1 or 3 (at least one 3) by
// deleting the side edges and joining each endpoint's former neighbors.
struct Mod4Bridge {
  int u = -1, v = -1;     // pre ids of the bridge endpoints
  int bridge_edge = -1;   // pre id of uv
  int u1 = -1, u2 = -1;   // pre ids of u's other neighbors, u1 < u2; -1 if deg(u) == 1
  int eu1 = -1, eu2 = -1; // pre edge ids u-u1, u-u2
  int v1 = -1, v2 = -1;   // same for v
  int ev1 = -1, ev2 = -1;
  int u_link = -1;        // post edge id of the u1-u2 edge; -1 if deg(u) == 1
  bool u_link_added = false;  // false when u1-u2 already existed
  int v_link = -1;
  bool v_link_added = false;
};

// One merged neighbor of the contracted hub pair: z was adjacent to u1, u2 or
// both; exactly one post edge u12-z survives.
struct Mod5Inherit {
  int z = -1;          // pre id
  int e_from_u1 = -1;  // pre edge id u1-z, -1 if absent
  int e_from_u2 = -1;  // pre edge id u2-z, -1 if absent
  int post_edge = -1;  // post edge id u12-z
};

// Contracts two adjacent hubs that carry exactly one pendant each into a
// single hub with one pendant, plus a fresh isolated edge. Not applicable
// when both hubs have degree 2.
struct Mod5Contract {
  int u1 = -1, u2 = -1;  // pre ids of the hubs, u1 < u2
  int v1 = -1, v2 = -1;  // pre ids of their pendants
  int e_u1u2 = -1, e_u1v1 = -1, e_u2v2 = -1;  // pre edge ids
  std::vector<Mod5Inherit> inherited;          // ascending by z
  int u12 = -1, v12 = -1, w1 = -1, w2 = -1;    // post vertex ids
  int e_u12v12 = -1, e_w1w2 = -1;              // post edge ids
};

// ---------------------------------------------------------------------------
// Generic step record. vertex_map/edge_map send pre ids to post ids (-1 for
// removed); surviving vertices and edges are compacted in pre-id order, then
// fresh ones are appended. added_edges lists the appended edges so any step
// can be replayed without looking at the payload.

struct AddedEdge {
  int edge = -1;  // post edge id
  int u = -1, v = -1;  // post vertex ids
};

struct RewriteStep {
  std::variant<Mod1Leaf, Mod2Split, Mod3Cactus, Mod4Bridge, Mod5Contract> detail;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  int post_vertex_count = 0;
  std::vector<AddedEdge> added_edges;

  int kind() const { return static_cast<int>(detail.index()) + 1; }
  std::string trace_line() const;
};

// Reconstructs the post graph of a step from the maps alone.
Graph replay_step(const Graph& pre, const RewriteStep& step);

struct RewriteLog {
  Graph original;
  std::vector<RewriteStep> steps;
  std::vector<Graph> states;  // states[i] is the graph after steps[i]

  const Graph& result() const { return states.empty() ? original : states.back(); }
  std::string trace() const;
};

// Replays every step from the original and checks each intermediate graph
// against the stored states. Returns the final graph.
Graph replay(const RewriteLog& log);

struct NormalizeStats {
  int mod1 = 0, mod2 = 0, mod3 = 0, mod4 = 0, mod5 = 0;
  // Split-event classification (PerfectMatching strategy only). An event is
  // one Mod 2 split plus the immediate Mod 1 cleanup at its two hubs; it is
  // classified by how many sides removed at least one pendant.
  int d2_plus = 0, d2_minus = 0;
  // True when any rewrite consumed a pendant edge introduced by an earlier
  // split event: a split of its hub (the split vertex had an introduced
  // pendant neighbor) or a Mod 1 removal outside the event that created it.
  // The pendant census below is exact only on cascade-free runs; on cascade
  // runs 2*d2_plus + d2_minus can exceed the surviving pendant edges, so the
  // matching lower bound read off the counters is not valid there.
  bool cascade = false;
  // Pendant vertices introduced by splits and still present in the final
  // graph. Cascade-free, this equals the surviving introduced pendant edge
  // count (each such edge holds exactly one introduced endpoint); a cascade
  // split makes isolated edges out of two introduced pendants, so the vertex
  // and edge censuses diverge.
  int surviving_introduced_pendants = 0;
  int n_original = 0, m_original = 0;
  // Size of the transferred matching in the final graph; -1 outside the
  // PerfectMatching strategy. Never smaller than the initial matching.
  int tracked_matching_size = -1;
};

struct NormalizeResult {
  RewriteLog log;
  NormalizeStats stats;
};

// ---------------------------------------------------------------------------
// Simple cactus: a set of triangles whose vertices all have degree 3 or 4 in
// the whole graph, pairwise sharing at most one vertex, connected as a tree
// through shared vertices, every degree-3 member carrying a pendant (its
// needle) and every degree-4 member lying in exactly two of the triangles.
// Such a subgraph always spans its entire connected component.
struct Cactus {
  std::vector<std::array<int, 3>> triangles;  // each ascending; list ascending
  std::vector<std::pair<int, int>> needles;   // (host, leaf), ascending by host
};

bool validate_cactus(const Graph& g, const Cactus& c);
std::optional<Cactus> find_simple_cactus(const Graph& g);

// ---------------------------------------------------------------------------
// Single-step application. Each picks the first applicable site in identity
// order and returns the rewritten graph plus the step record, or nullopt when
// the modification does not apply anywhere.

std::optional<std::pair<Graph, RewriteStep>> apply_mod1(const Graph& g);
std::optional<std::pair<Graph, RewriteStep>> apply_mod2(const Graph& g);
std::pair<Graph, RewriteStep> apply_mod3(const Graph& g, const Cactus& c);
std::optional<std::pair<Graph, RewriteStep>> apply_mod4(const Graph& g);
std::optional<std::pair<Graph, RewriteStep>> apply_mod5(const Graph& g);

// Matching-aware cactus replacement: a triangle containing a matched edge
// retains that edge, every other triangle contributes a fresh matched edge.
// Requires m to be a perfect matching of g.
struct Mod3PmResult {
  Graph graph;
  RewriteStep step;
  Matching matching;
};
Mod3PmResult apply_mod3_pm(const Graph& g, const Cactus& c, const Matching& m);

// True when none of Modifications 1-3 applies: no degree-2 vertex, no hub
// with two pendants, no simple cactus.
bool is_normalized(const Graph& g);

// Runs the rewrite loop for the strategy until no modification applies.
// Throws PreconditionError when g is outside the strategy's graph class.
NormalizeResult normalize(const Graph& g, Strategy strategy);

}  // namespace me2c
