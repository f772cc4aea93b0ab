#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace me2c {

[[noreturn]] void check_failed(const char* expr, const char* file, int line);

// Always-on invariant check; failures throw std::logic_error in every build type.
#define ME2C_CHECK(expr)                                          \
  do {                                                            \
    if (!(expr)) ::me2c::check_failed(#expr, __FILE__, __LINE__); \
  } while (0)

// Input rejection with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Simple undirected graph. Vertex ids are dense 0..n-1; edge ids are dense
// 0..m-1 in insertion order and stay stable for the lifetime of the value.
// Rewrites build fresh graphs instead of mutating shared ones, so values can
// be shared across threads freely once constructed.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count) : adj_(vertex_count) {}

  // Edge-list document: "n m" header, then m lines "u v". '#' starts a
  // comment, blank lines are skipped. Rejects self-loops, duplicate edges,
  // out-of-range endpoints and malformed lines with their line number.
  static Graph parse(const std::string& text);
  std::string serialize() const;

  int add_vertex() {
    adj_.emplace_back();
    return static_cast<int>(adj_.size()) - 1;
  }

  // Returns the new edge id. Throws std::invalid_argument on self-loops,
  // duplicates and out-of-range endpoints.
  int add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int e) const { return edges_.at(e); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Incident (neighbor, edge id) pairs in edge-insertion order.
  const std::vector<std::pair<int, int>>& neighbors(int v) const {
    return adj_.at(v);
  }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  int find_edge(int u, int v) const;  // edge id, or -1 when absent
  bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

  bool operator==(const Graph& other) const {
    return vertex_count() == other.vertex_count() && edges_ == other.edges_;
  }

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Connected components in vertex-id discovery order (component 0 contains the
// smallest vertex id, and so on).
struct ComponentView {
  struct Info {
    int vertices = 0;
    int edges = 0;
    int leaves = 0;                   // degree-1 vertices
    std::vector<int> members;         // ascending vertex ids
    bool trivial() const { return vertices <= 2; }
  };
  std::vector<int> component;         // vertex id -> component index
  std::vector<Info> info;
  int count() const { return static_cast<int>(info.size()); }
};

ComponentView components(const Graph& g);

// A component extracted as a standalone graph with dense local ids plus the
// translation back to the host graph.
struct Subgraph {
  Graph graph;
  std::vector<int> vertex_to_global;
  std::vector<int> edge_to_global;
};

Subgraph induced_component(const Graph& g, const ComponentView& cv, int comp);

// Bridge edge ids in ascending order (lowlink search). An edge is a bridge
// exactly when deleting it increases the component count; isolated edges
// qualify.
std::vector<int> find_bridges(const Graph& g);

bool is_subcubic(const Graph& g);  // max degree <= 3

// Naive per-vertex neighbor-triple scan, O(sum deg(v)^3): returns false as
// soon as a vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);

// All 3-cliques as sorted triples, in lexicographic order.
std::vector<std::array<int, 3>> list_triangles(const Graph& g);

long long floor_div(long long a, long long b);  // b > 0, rounds toward -inf

}  // namespace me2c
