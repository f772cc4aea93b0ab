#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "me2c/graph.hpp"
#include "me2c/normalize.hpp"

namespace me2c {

// Thrown by solve when the achieved color count exceeds the certified upper
// bound; carries the offending certificate so callers can still report it.
struct Certificate;
struct CertificationError;

// ---------------------------------------------------------------------------
// Colorings. A coloring assigns every edge a color; it is feasible when no
// vertex sees more than 2 distinct colors. Canonical form relabels colors to
// 0..k-1 in order of first use by ascending edge id.

struct EdgeColoring {
  std::vector<int> color;  // per edge id
  int colors = 0;          // distinct color count; canonical form uses 0..colors-1

  EdgeColoring canonicalized() const;
};

// Canonicalizes a raw color vector (any non-negative ints) into an EdgeColoring.
EdgeColoring make_coloring(std::vector<int> raw);

struct FeasibilityReport {
  bool feasible = true;
  int vertex = -1;              // first vertex (ascending id) seeing > 2 colors
  std::vector<int> colors_seen; // its distinct colors, ascending
};

// Throws std::invalid_argument when chi is not total on g's edges or has a
// negative entry. Does not require canonical color ids.
FeasibilityReport check_feasible(const Graph& g, const EdgeColoring& chi);

// ---------------------------------------------------------------------------
// The matching-based coloring: one color per matching edge, one color per
// edge-containing component of the non-matching edges. Always feasible: a
// vertex sees at most one matching color, and all its non-matching edges lie
// in a single leftover component.

struct BasicRun {
  EdgeColoring coloring;       // canonical
  int matching_size = 0;
  int leftover_components = 0; // leftover components containing an edge
};

BasicRun run_basic_algorithm(const Graph& g);
EdgeColoring basic_algorithm(const Graph& g);

// ---------------------------------------------------------------------------
// Lifts a feasible coloring of the final graph of a rewrite log back to the
// original graph, replaying the steps in reverse. Never loses colors.
// Throws std::invalid_argument when chi does not fit the log's result graph
// or is infeasible on it.
EdgeColoring lift_coloring(const RewriteLog& log, const EdgeColoring& chi);

// Recolors so every pendant edge's color appears on no other edge, without
// reducing the color count: if the pendant's hub sees a second color class,
// that class is merged into the first and the freed color moves to the
// pendant; if the hub sees one color, the pendant is recolored fresh.
// Requires that no two leaves share a neighbor (throws std::invalid_argument).
EdgeColoring make_pendant_colors_unique(const Graph& g, const EdgeColoring& chi);

// ---------------------------------------------------------------------------
// Character graph: exactly one representative edge per color. Max degree 2.

struct CharacterGraph {
  std::vector<int> edge_of_color;  // color -> representative edge id
  std::vector<int> degree;         // per vertex: 0 free, 1 end, 2 inner
};

// Picks the smallest edge id of each color. Requires chi canonical.
CharacterGraph extract_character_graph(const Graph& g, const EdgeColoring& chi);

// Repeatedly breaks a representative cycle by swapping one cycle edge for an
// equally colored edge leaving the cycle (smallest cycle vertex with an
// outside neighbor, then its smallest outside neighbor). Requires g to be
// normalized, which guarantees the swap edge exists (throws PreconditionError
// otherwise).
CharacterGraph make_cycle_free(const Graph& g, const EdgeColoring& chi, const CharacterGraph& h);

bool character_acyclic(const Graph& g, const CharacterGraph& h);
// Component count of (V(g), representative edges), isolated vertices included.
int character_components(const Graph& g, const CharacterGraph& h);

// ---------------------------------------------------------------------------
// Exact rational arithmetic for bounds and ratios.

struct Fraction {
  long long num = 0;
  long long den = 1;  // reduced, den > 0

  Fraction() = default;
  Fraction(long long n, long long d);

  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
  bool operator<=(const Fraction& o) const { return num * o.den <= o.num * den; }
  std::string str() const;  // "num/den", reduced
};

// ---------------------------------------------------------------------------
// Certified upper bounds. Per component of a normalized graph: isolated
// vertex 0, isolated edge 1, otherwise floor((3n - leaves)/4). The
// PerfectMatching strategy instead certifies the global accounting bound
// floor((3n_original + d2plus - d2minus)/4); the per-component sum and the
// matching lower bound 2*d2plus + d2minus are kept alongside for audit.

enum class BoundKind { Components, Accounting };
const char* bound_kind_name(BoundKind k);

enum class PartKind { IsolatedVertex, IsolatedEdge, MaxColors };

struct BoundPart {
  PartKind kind = PartKind::MaxColors;
  int value = 0;
  int n = 0, m = 0, leaves = 0;  // the component it covers
};

struct Certificate {
  int achieved = 0;
  int bound = 0;
  BoundKind bound_kind = BoundKind::Components;
  Fraction ratio{1, 1};  // bound / achieved; 1/1 for edgeless graphs
  std::vector<BoundPart> parts;   // per component of the normalized graph
  int components_bound = 0;       // sum of parts
  std::optional<Fraction> pm_accounting_exact;  // unfloored accounting value
  std::optional<int> pm_matching_lower;         // 2*d2plus + d2minus
  std::optional<int> pm_tracked_matching;       // transferred matching size
  bool multi_component = false;   // original graph had more than one component
};

// Key-value text block: achieved, bound, bound_kind, ratio (exact fraction).
std::string certificate_text(const Certificate& c);

struct CertificationError : std::runtime_error {
  Certificate certificate;
  NormalizeStats stats;
  CertificationError(const std::string& what, Certificate cert, NormalizeStats st)
      : std::runtime_error(what), certificate(std::move(cert)), stats(st) {}
};

// Fills the bound fields of a Certificate (achieved/ratio are completed by
// solve). Requires a normalized graph (throws PreconditionError).
Certificate upper_bound(const Graph& normalized, const NormalizeStats& stats,
                        Strategy strategy);

// ---------------------------------------------------------------------------
// End-to-end solve: normalize, color each component of the normalized graph
// with the matching-based algorithm, lift back, certify.

struct SolveResult {
  EdgeColoring coloring;  // canonical, on the original graph
  Certificate certificate;
  NormalizeStats stats;
  Strategy strategy = Strategy::General;
  int matching_size = 0;        // summed over normalized components
  int leftover_components = 0;  // summed edge-containing leftover components
};

// Throws PreconditionError when g is outside the strategy's class and
// CertificationError when the self-check achieved <= bound fails.
SolveResult solve(const Graph& g, Strategy strategy);

}  // namespace me2c
