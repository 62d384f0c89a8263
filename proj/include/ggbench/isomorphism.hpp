#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ggbench/errors.hpp"
#include "ggbench/graph.hpp"

namespace ggbench {

inline constexpr int kIsoNodeLimit = 32;

namespace iso_detail {

// adjacency rows as bitmasks over 0-based node indices; graphs here are <= 32 nodes
inline std::vector<std::uint64_t> adjacency_bits(const Graph& g) {
  std::vector<std::uint64_t> adj(g.node_count(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u - 1] |= 1ULL << (v - 1);
    adj[v - 1] |= 1ULL << (u - 1);
  }
  return adj;
}

// One round of colour refinement; colours are canonical (assigned by the
// sorted order of signature values), so they are comparable across graphs.
// `colors` is 0-based, values 0..C-1. Iterates to a fixpoint.
inline std::vector<int> refine_colors(const std::vector<std::uint64_t>& adj, std::vector<int> colors) {
  const int n = static_cast<int>(adj.size());
  int classes = 0;
  for (int c : colors) classes = std::max(classes, c + 1);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.push_back(colors[v]);
      std::uint64_t nb = adj[v];
      while (nb) {
        int w = __builtin_ctzll(nb);
        nb &= nb - 1;
        sig.push_back(colors[w]);
      }
      std::sort(sig.begin() + 1, sig.end());
      sigs[v] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int>, int>> order = sigs;
    std::sort(order.begin(), order.end());
    std::vector<int> next(n);
    int next_classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && order[i].first != order[i - 1].first) ++next_classes;
      next[order[i].second] = next_classes;
    }
    ++next_classes;
    if (next_classes == classes) return next;
    colors = std::move(next);
    classes = next_classes;
  }
}

inline std::vector<int> initial_refinement(const std::vector<std::uint64_t>& adj) {
  return refine_colors(adj, std::vector<int>(adj.size(), 0));
}

// sorted (color, class size) histogram, comparable across graphs
inline std::vector<std::pair<int, int>> color_histogram(const std::vector<int>& colors) {
  std::map<int, int> counts;
  for (int c : colors) ++counts[c];
  return {counts.begin(), counts.end()};
}

// Encodes the upper-triangle adjacency matrix under the labeling implied by
// `position` (position[v] = 0-based slot of node v). Smaller is "more canonical".
inline std::string encode_under(const std::vector<std::uint64_t>& adj, const std::vector<int>& position) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> node_at(n);
  for (int v = 0; v < n; ++v) node_at[position[v]] = v;
  std::string out;
  out.push_back(static_cast<char>(n));
  int bit = 7;
  unsigned char cur = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool e = (adj[node_at[i]] >> node_at[j]) & 1ULL;
      if (e) cur |= static_cast<unsigned char>(1u << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur));
        cur = 0;
        bit = 7;
      }
    }
  if (bit != 7) out.push_back(static_cast<char>(cur));
  return out;
}

// A partition is homogeneous when every cell induces an empty or complete
// subgraph and every cell pair is empty or complete bipartite; then any
// within-cell ordering yields the same encoding and no branching is needed.
inline bool is_homogeneous(const std::vector<std::uint64_t>& adj, const std::vector<int>& colors) {
  const int n = static_cast<int>(adj.size());
  int classes = 0;
  for (int c : colors) classes = std::max(classes, c + 1);
  std::vector<long long> size(classes, 0);
  for (int c : colors) ++size[c];
  std::map<std::pair<int, int>, long long> between;
  for (int u = 0; u < n; ++u) {
    std::uint64_t nb = adj[u];
    while (nb) {
      int v = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (v <= u) continue;
      auto key = std::minmax(colors[u], colors[v]);
      ++between[{key.first, key.second}];
    }
  }
  for (int a = 0; a < classes; ++a)
    for (int b = a; b < classes; ++b) {
      long long full = (a == b) ? size[a] * (size[a] - 1) / 2 : size[a] * size[b];
      auto it = between.find({a, b});
      long long have = it == between.end() ? 0 : it->second;
      if (have != 0 && have != full) return false;
    }
  return true;
}

struct CanonSearch {
  const std::vector<std::uint64_t>& adj;
  std::string best;
  long long leaves = 0;
  static constexpr long long kLeafBudget = 500'000;

  void leaf(const std::vector<int>& colors) {
    if (++leaves > kLeafBudget)
      throw SizeLimitExceeded("canonical labeling search budget exceeded");
    std::string enc = encode_under(adj, colors);
    if (best.empty() || enc < best) best = std::move(enc);
  }

  // completes a homogeneous partition: order within cells by node id
  void homogeneous_leaf(const std::vector<int>& colors) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::pair<int, int>> order(n);
    for (int v = 0; v < n; ++v) order[v] = {colors[v], v};
    std::sort(order.begin(), order.end());
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i].second] = i;
    if (++leaves > kLeafBudget)
      throw SizeLimitExceeded("canonical labeling search budget exceeded");
    std::string enc = encode_under(adj, position);
    if (best.empty() || enc < best) best = std::move(enc);
  }

  void run(std::vector<int> colors) {
    const int n = static_cast<int>(adj.size());
    colors = refine_colors(adj, colors);
    int classes = 0;
    for (int c : colors) classes = std::max(classes, c + 1);
    if (classes == n) {  // discrete: colors are positions
      leaf(colors);
      return;
    }
    if (is_homogeneous(adj, colors)) {
      homogeneous_leaf(colors);
      return;
    }
    // target: smallest non-singleton class, lowest colour on ties
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < classes; ++c)
      if (size[c] > 1 && (target == -1 || size[c] < size[target])) target = c;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> child = colors;
      child[v] = classes;  // individualize v
      run(std::move(child));
    }
  }
};

}  // namespace iso_detail

// Canonical byte string: equal for two graphs iff they are isomorphic.
inline std::string canonical_key(const Graph& g) {
  if (g.node_count() > kIsoNodeLimit)
    throw SizeLimitExceeded("canonical_key supports at most " + std::to_string(kIsoNodeLimit) +
                            " nodes, got " + std::to_string(g.node_count()));
  auto adj = iso_detail::adjacency_bits(g);
  iso_detail::CanonSearch search{adj, {}, 0};
  search.run(std::vector<int>(adj.size(), 0));
  return search.best;
}

// Direct backtracking isomorphism test (refinement-guided), independent of
// canonical_key so the two routes can cross-check each other.
inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() > kIsoNodeLimit || h.node_count() > kIsoNodeLimit)
    throw SizeLimitExceeded("is_isomorphic supports at most " + std::to_string(kIsoNodeLimit) + " nodes");
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  const int n = g.node_count();
  if (n == 0) return true;
  auto adjg = iso_detail::adjacency_bits(g);
  auto adjh = iso_detail::adjacency_bits(h);
  auto cg = iso_detail::initial_refinement(adjg);
  auto ch = iso_detail::initial_refinement(adjh);
  if (iso_detail::color_histogram(cg) != iso_detail::color_histogram(ch)) return false;

  // map g-nodes in order of ascending class size (most constrained first)
  std::vector<int> class_size(n, 0);
  for (int c : cg) ++class_size[c];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[cg[a]] != class_size[cg[b]]) return class_size[cg[a]] < class_size[cg[b]];
    if (cg[a] != cg[b]) return cg[a] < cg[b];
    return a < b;
  });

  std::vector<int> image(n, -1);
  std::uint64_t used_h = 0, mapped_g = 0;

  auto backtrack = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int gv = order[depth];
    for (int hv = 0; hv < n; ++hv) {
      if ((used_h >> hv) & 1ULL) continue;
      if (ch[hv] != cg[gv]) continue;
      // adjacency with already-mapped nodes must match exactly
      std::uint64_t gnb = adjg[gv] & mapped_g;
      std::uint64_t want = 0;
      std::uint64_t bits = gnb;
      bool ok = true;
      while (bits) {
        int gu = __builtin_ctzll(bits);
        bits &= bits - 1;
        want |= 1ULL << image[gu];
      }
      if ((adjh[hv] & used_h) != want) ok = false;
      if (!ok) continue;
      image[gv] = hv;
      used_h |= 1ULL << hv;
      mapped_g |= 1ULL << gv;
      if (self(self, depth + 1)) return true;
      image[gv] = -1;
      used_h &= ~(1ULL << hv);
      mapped_g &= ~(1ULL << gv);
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace ggbench
