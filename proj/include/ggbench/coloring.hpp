#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ggbench/errors.hpp"
#include "ggbench/graph.hpp"

namespace ggbench {

// Exact k-colorability. Colors are 0..k-1, returned per node (index 1..n,
// index 0 unused). Greedy when k exceeds the maximum degree (always
// succeeds), saturation-ordered backtracking otherwise; the graphs this
// harness sees (tens of nodes) decide instantly.
inline std::optional<std::vector<int>> find_k_coloring(const Graph& g, int k) {
  const int n = g.node_count();
  if (k < 1) return std::nullopt;
  auto adj = g.adjacency();
  int max_deg = 0;
  for (int v = 1; v <= n; ++v) max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));

  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
  if (k > max_deg) {  // a free color always exists
    for (int v = 1; v <= n; ++v) {
      std::vector<char> used(adj[v].size() + 1, 0);
      for (int w : adj[v])
        if (color[w] >= 0 && color[w] < static_cast<int>(used.size())) used[color[w]] = 1;
      int c = 0;
      while (used[c]) ++c;
      color[v] = c;
    }
    return color;
  }

  if (k > 62)
    throw SizeLimitExceeded("k-coloring supports k <= 62 unless k exceeds the maximum degree");

  // forbidden[v] = bitmask of colors used by v's neighbors
  std::vector<std::uint64_t> forbidden(static_cast<std::size_t>(n) + 1, 0);
  auto popcount = [](std::uint64_t x) { return __builtin_popcountll(x); };

  auto solve = [&](auto&& self, int remaining, int max_used) -> bool {
    if (remaining == 0) return true;
    // most saturated uncolored node, ties by degree
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 1; v <= n; ++v) {
      if (color[v] != -1) continue;
      int sat = popcount(forbidden[v]);
      int deg = static_cast<int>(adj[v].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int cap = std::min(k - 1, max_used + 1);  // at most one brand-new color
    for (int c = 0; c <= cap; ++c) {
      if ((forbidden[pick] >> c) & 1u) continue;
      color[pick] = c;
      std::vector<int> touched;
      bool dead = false;
      for (int w : adj[pick]) {
        if (color[w] != -1) continue;
        if (!((forbidden[w] >> c) & 1u)) {
          forbidden[w] |= 1ULL << c;
          touched.push_back(w);
          if (popcount(forbidden[w]) >= k) dead = true;
        }
      }
      if (!dead && self(self, remaining - 1, std::max(max_used, c))) return true;
      for (int w : touched) forbidden[w] &= ~(1ULL << c);
      color[pick] = -1;
    }
    return false;
  };

  if (!solve(solve, n, -1)) return std::nullopt;
  return color;
}

inline bool is_k_colorable(const Graph& g, int k) { return find_k_coloring(g, k).has_value(); }

}  // namespace ggbench
