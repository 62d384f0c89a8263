#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ggbench/errors.hpp"

namespace ggbench {

using Edge = std::pair<int, int>;  // stored with first < second

// Node counts above this are rejected by the text parser; everything the
// harness handles is tiny, and the cap keeps hostile model output from
// driving per-node allocations.
inline constexpr int kMaxParsedNodes = 1'000'000;

// Undirected simple graph on nodes 1..n with a sorted edge list.
class Graph {
 public:
  Graph(int node_count, std::vector<Edge> edges) : n_(node_count), edges_(std::move(edges)) {
    if (n_ < 1) throw MalformedSyntax("node count must be positive, got " + std::to_string(n_));
    for (auto& [u, v] : edges_) {
      if (u > v) std::swap(u, v);
      if (u == v) throw SelfLoop("self-loop at node " + std::to_string(u));
      if (u < 1 || v > n_)
        throw EndpointOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                 ") outside 1.." + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                  std::to_string(dup->second) + ")");
  }

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  // degree per node, index 1..n (index 0 unused)
  std::vector<int> degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : edges_) {
      ++deg[u];
      ++deg[v];
    }
    return deg;
  }

  // adjacency lists, index 1..n; neighbor lists sorted
  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_) + 1);
    for (auto [u, v] : edges_) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }

  // subgraph induced on `nodes`, relabeled 1..|nodes| in ascending node order
  Graph induced(const std::vector<int>& nodes) const {
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> sub;
    for (auto [u, v] : edges_) {
      auto iu = std::lower_bound(sorted.begin(), sorted.end(), u);
      auto iv = std::lower_bound(sorted.begin(), sorted.end(), v);
      if (iu != sorted.end() && *iu == u && iv != sorted.end() && *iv == v)
        sub.emplace_back(static_cast<int>(iu - sorted.begin()) + 1,
                         static_cast<int>(iv - sorted.begin()) + 1);
    }
    return Graph(static_cast<int>(sorted.size()), std::move(sub));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator<(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.edges_ < b.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
};

struct ParseWarnings {
  bool duplicate_edges_collapsed = false;
  bool zero_indexed_shifted = false;
  bool any() const { return duplicate_edges_collapsed || zero_indexed_shifted; }
};

struct ParsedGraph {
  Graph graph;
  ParseWarnings warnings;
};

namespace detail {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (done() || s[i] != c) return false;
    ++i;
    return true;
  }
  std::optional<long long> eat_int() {
    skip_ws();
    if (done() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    long long v = 0;
    std::size_t digits = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      if (digits < 15) v = v * 10 + (s[i] - '0');
      ++digits;
      ++i;
    }
    if (digits > 10) return std::nullopt;  // absurdly large token
    return v;
  }
};

// True when position i looks like the start of a graph tuple: "( int , [".
inline bool looks_like_tuple(std::string_view s, std::size_t i) {
  Cursor c{s, i};
  if (!c.eat('(')) return false;
  if (!c.eat_int()) return false;
  if (!c.eat(',')) return false;
  return c.eat('[');
}

}  // namespace detail

// Parses one "(n, [(u, v), ...])" expression starting at `start`. On success
// returns the graph and the index one past the closing ')'. Throws
// MalformedSyntax / EndpointOutOfRange / SelfLoop.
inline std::pair<ParsedGraph, std::size_t> parse_graph_tuple(std::string_view text, std::size_t start) {
  detail::Cursor c{text, start};
  if (!c.eat('(')) throw MalformedSyntax("expected '('");
  auto n = c.eat_int();
  if (!n) throw MalformedSyntax("expected node count");
  if (*n < 1) throw MalformedSyntax("node count must be positive");
  if (*n > kMaxParsedNodes) throw MalformedSyntax("node count exceeds parser limit");
  if (!c.eat(',')) throw MalformedSyntax("expected ',' after node count");
  if (!c.eat('[')) throw MalformedSyntax("expected '[' opening the edge list");

  std::vector<Edge> edges;
  c.skip_ws();
  if (!c.eat(']')) {
    for (;;) {
      if (!c.eat('(')) throw MalformedSyntax("expected '(' starting an edge");
      auto u = c.eat_int();
      if (!u) throw MalformedSyntax("expected integer edge endpoint");
      if (!c.eat(',')) throw MalformedSyntax("expected ',' inside an edge");
      auto v = c.eat_int();
      if (!v) throw MalformedSyntax("expected integer edge endpoint");
      if (!c.eat(')')) throw MalformedSyntax("expected ')' closing an edge");
      edges.emplace_back(static_cast<int>(*u), static_cast<int>(*v));
      if (c.eat(',')) continue;
      if (c.eat(']')) break;
      throw MalformedSyntax("expected ',' or ']' in the edge list");
    }
  }
  if (!c.eat(')')) throw MalformedSyntax("expected ')' closing the tuple");

  ParseWarnings warn;
  int node_count = static_cast<int>(*n);

  // Models sometimes number nodes 0..n-1; shift when the ids are unambiguous
  // about it (some id is 0 and everything fits the 0-based window).
  bool has_zero = false, fits_zero_based = true;
  for (auto [u, v] : edges) {
    if (u == 0 || v == 0) has_zero = true;
    if (u > node_count - 1 || v > node_count - 1) fits_zero_based = false;
    if (u < 0 || v < 0) fits_zero_based = false;
  }
  if (has_zero && fits_zero_based) {
    for (auto& [u, v] : edges) {
      ++u;
      ++v;
    }
    warn.zero_indexed_shifted = true;
  }

  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u == v) throw SelfLoop("self-loop at node " + std::to_string(u));
    if (u < 1 || v > node_count)
      throw EndpointOutOfRange("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") outside 1.." + std::to_string(node_count));
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  if (last != edges.end()) {
    warn.duplicate_edges_collapsed = true;
    edges.erase(last, edges.end());
  }
  return {ParsedGraph{Graph(node_count, std::move(edges)), warn}, c.i};
}

// Parses text containing exactly one graph tuple, optionally preceded by a
// label ("Graph 3: (...)") and followed by whitespace.
inline ParsedGraph parse_graph_text(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && !detail::looks_like_tuple(text, i)) ++i;
  if (i >= text.size()) throw MalformedSyntax("no graph tuple found");
  auto [parsed, end] = parse_graph_tuple(text, i);
  detail::Cursor rest{text, end};
  rest.skip_ws();
  if (!rest.done()) throw MalformedSyntax("trailing content after the graph tuple");
  return parsed;
}

// "(n, [(u, v), (u, v)])" with edges in sorted order; inverse of the parser.
inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << '(' << g.node_count() << ", [";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out << ", ";
    first = false;
    out << '(' << u << ", " << v << ')';
  }
  out << "])";
  return out.str();
}

// Connected components as sorted node sets, ordered by smallest member.
inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(static_cast<std::size_t>(g.node_count()) + 1, 0);
  std::vector<std::vector<int>> comps;
  std::vector<int> stack;
  for (int s = 1; s <= g.node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// Line-oriented graph files: one serialized graph per line, '#' comments and
// blank lines ignored.
inline std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileUnreadable("cannot open " + path);
  std::vector<Graph> graphs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv = line;
    auto hash = sv.find('#');
    if (hash != std::string_view::npos) sv = sv.substr(0, hash);
    bool blank = sv.find_first_not_of(" \t\r\n") == std::string_view::npos;
    if (blank) continue;
    try {
      graphs.push_back(parse_graph_text(sv).graph);
    } catch (const Error& e) {
      throw MalformedSyntax(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

inline void write_graph_file(const std::string& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw FileUnreadable("cannot open " + path + " for writing");
  for (const auto& g : graphs) out << serialize_graph(g) << '\n';
}

}  // namespace ggbench
