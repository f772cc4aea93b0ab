#include "me2c/graph.hpp"

#include <algorithm>
#include <sstream>

namespace me2c {

void check_failed(const char* expr, const char* file, int line) {
  std::ostringstream out;
  out << "invariant failed: " << expr << " at " << file << ":" << line;
  throw std::logic_error(out.str());
}

long long floor_div(long long a, long long b) {
  ME2C_CHECK(b > 0);
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");
  int id = static_cast<int>(edges_.size());
  edges_.emplace_back(u, v);
  adj_[u].emplace_back(v, id);
  adj_[v].emplace_back(u, id);
  return id;
}

int Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return -1;
  const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& [to, e] : shorter)
    if (to == other) return e;
  return -1;
}

namespace {

// Strips comments and reports content tokens line by line.
struct LineReader {
  std::istringstream in;
  int line_no = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Returns false at end of input; otherwise fills tokens of the next
  // non-blank content line and its line number.
  bool next(std::vector<std::string>& tokens, int& no) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (!tokens.empty()) {
        no = line_no;
        return true;
      }
    }
    return false;
  }
};

int parse_int(const std::string& tok, int line, const char* what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  return value;
}

}  // namespace

Graph Graph::parse(const std::string& text) {
  LineReader reader(text);
  std::vector<std::string> tokens;
  int no = 0;
  if (!reader.next(tokens, no))
    throw ParseError(reader.line_no + 1, "missing 'n m' header");
  if (tokens.size() != 2)
    throw ParseError(no, "header must be 'n m'");
  int n = parse_int(tokens[0], no, "vertex count");
  int m = parse_int(tokens[1], no, "edge count");
  if (n < 0 || m < 0) throw ParseError(no, "negative header value");

  Graph g(n);
  for (int i = 0; i < m; ++i) {
    if (!reader.next(tokens, no))
      throw ParseError(reader.line_no + 1, "unexpected end of input: expected " +
                                               std::to_string(m) + " edges, got " +
                                               std::to_string(i));
    if (tokens.size() != 2) throw ParseError(no, "edge line must be 'u v'");
    int u = parse_int(tokens[0], no, "endpoint");
    int v = parse_int(tokens[1], no, "endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(no, "endpoint out of range");
    if (u == v) throw ParseError(no, "self-loop");
    if (g.has_edge(u, v)) throw ParseError(no, "duplicate edge");
    g.add_edge(u, v);
  }
  if (reader.next(tokens, no))
    throw ParseError(no, "trailing content after last edge");
  return g;
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << vertex_count() << ' ' << edge_count() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

ComponentView components(const Graph& g) {
  int n = g.vertex_count();
  ComponentView view;
  view.component.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (view.component[s] >= 0) continue;
    int idx = view.count();
    view.info.emplace_back();
    std::vector<int> stack{s};
    view.component[s] = idx;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      view.info[idx].members.push_back(v);
      for (const auto& [to, e] : g.neighbors(v)) {
        (void)e;
        if (view.component[to] < 0) {
          view.component[to] = idx;
          stack.push_back(to);
        }
      }
    }
  }
  for (auto& info : view.info) {
    std::sort(info.members.begin(), info.members.end());
    info.vertices = static_cast<int>(info.members.size());
    for (int v : info.members)
      if (g.degree(v) == 1) ++info.leaves;
  }
  for (int e = 0; e < g.edge_count(); ++e)
    ++view.info[view.component[g.edge(e).first]].edges;
  return view;
}

Subgraph induced_component(const Graph& g, const ComponentView& cv, int comp) {
  Subgraph sub;
  sub.vertex_to_global = cv.info.at(comp).members;
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(sub.vertex_to_global.size()); ++i)
    local[sub.vertex_to_global[i]] = i;
  sub.graph = Graph(static_cast<int>(sub.vertex_to_global.size()));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (cv.component[u] != comp) continue;
    sub.graph.add_edge(local[u], local[v]);
    sub.edge_to_global.push_back(e);
  }
  return sub;
}

std::vector<int> find_bridges(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> bridges;
  int timer = 0;
  // Iterative lowlink DFS; frame = (vertex, incoming edge id, adjacency index).
  struct Frame {
    int v;
    int parent_edge;
    size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.neighbors(f.v).size()) {
        auto [to, e] = g.neighbors(f.v)[f.next++];
        if (e == f.parent_edge) continue;
        if (disc[to] < 0) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, e});
        } else {
          low[f.v] = std::min(low[f.v], disc[to]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) bridges.push_back(pe);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool is_subcubic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 3) return false;
  return true;
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.has_edge(nb[i].first, nb[j].first)) continue;
        for (int k = j + 1; k < d; ++k) {
          if (!g.has_edge(nb[i].first, nb[k].first) &&
              !g.has_edge(nb[j].first, nb[k].first))
            return false;
        }
      }
  }
  return true;
}

std::vector<std::array<int, 3>> list_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [v, e1] : g.neighbors(u)) {
      (void)e1;
      if (v <= u) continue;
      for (const auto& [w, e2] : g.neighbors(v)) {
        (void)e2;
        if (w <= v) continue;
        if (g.has_edge(u, w)) out.push_back({u, v, w});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace me2c
