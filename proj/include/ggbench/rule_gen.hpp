#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ggbench/errors.hpp"
#include "ggbench/graph.hpp"
#include "ggbench/rng.hpp"
#include "ggbench/rules.hpp"

namespace ggbench {

inline constexpr int kGenerationBudget = 10'000;  // rejection-sampling tries

namespace gen_detail {

// uniform labeled tree on nodes offset+1..offset+n via a random Prufer sequence
inline void append_random_tree(std::vector<Edge>& out, int n, int offset, Rng& rng) {
  if (n <= 1) return;
  if (n == 2) {
    out.emplace_back(offset + 1, offset + 2);
    return;
  }
  std::vector<int> prufer(n - 2);
  for (auto& p : prufer) p = rng.range(1, n);
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int p : prufer) ++degree[p];
  std::vector<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push_back(v);
  std::make_heap(leaves.begin(), leaves.end(), std::greater<>());
  for (int p : prufer) {
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<>());
    int leaf = leaves.back();
    leaves.pop_back();
    out.emplace_back(offset + std::min(leaf, p), offset + std::max(leaf, p));
    if (--degree[p] == 1) {
      leaves.push_back(p);
      std::push_heap(leaves.begin(), leaves.end(), std::greater<>());
    }
  }
  std::pop_heap(leaves.begin(), leaves.end(), std::greater<>());
  int a = leaves.back();
  leaves.pop_back();
  int b = leaves.front();
  out.emplace_back(offset + std::min(a, b), offset + std::max(a, b));
}

// cycle through all of offset+1..offset+n in a random order
inline void append_random_cycle(std::vector<Edge>& out, int n, int offset, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), offset + 1);
  rng.shuffle(order);
  for (int i = 0; i < n; ++i) {
    int u = order[i], v = order[(i + 1) % n];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
}

// uniform over graphs on n nodes with exactly m edges (Floyd's sampling)
inline Graph random_gnm(int n, int m, Rng& rng) {
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<long long> chosen;
  for (long long j = total - m; j < total; ++j) {
    long long t = static_cast<long long>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) t = j;
    chosen.push_back(t);
  }
  std::vector<Edge> edges;
  for (long long idx : chosen) {
    // unrank pair index: row u has n-u slots
    long long rest = idx;
    int u = 1;
    while (rest >= n - u) {
      rest -= n - u;
      ++u;
    }
    edges.emplace_back(u, u + 1 + static_cast<int>(rest));
  }
  return Graph(n, std::move(edges));
}

// configuration-model attempt at a k-regular graph; nullopt on collision
inline std::optional<Graph> try_pairing_regular(int n, int k, Rng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * k);
  for (int v = 1; v <= n; ++v)
    for (int i = 0; i < k; ++i) stubs.push_back(v);
  rng.shuffle(stubs);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return std::nullopt;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
  return Graph(n, std::move(edges));
}

inline Graph random_permuted(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.node_count());
  std::iota(perm.begin(), perm.end(), 1);
  rng.shuffle(perm);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = perm[u - 1], b = perm[v - 1];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(g.node_count(), std::move(edges));
}

// n split into k parts, each >= 1, uniform over compositions
inline std::vector<int> random_composition(int n, int k, Rng& rng) {
  std::vector<int> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  rng.shuffle(cuts);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> sizes;
  int prev = 0;
  for (int c : cuts) {
    sizes.push_back(c - prev);
    prev = c;
  }
  sizes.push_back(n - prev);
  return sizes;
}

// max edge count of a k-colorable graph on n nodes (balanced k-partite)
inline long long turan_bound(int n, int k) {
  long long total = 0;
  std::vector<int> part(k, n / k);
  for (int i = 0; i < n % k; ++i) ++part[i];
  long long sum_sq = 0;
  for (int p : part) sum_sq += static_cast<long long>(p) * p;
  total = (static_cast<long long>(n) * n - sum_sq) / 2;
  return total;
}

}  // namespace gen_detail

// Throws Unsatisfiable when no graph can meet the spec.
inline void check_satisfiable(const RuleSpec& spec) {
  check_spec(spec);
  auto nogood = [&](const std::string& why) {
    throw Unsatisfiable(std::string(rule_kind_name(spec.kind)) + ": " + why);
  };
  switch (spec.kind) {
    case RuleKind::KRegular:
      if ((static_cast<long long>(spec.n) * *spec.k) % 2 != 0) nogood("n*k is odd");
      break;
    case RuleKind::Planar:
      if (spec.n >= 3 && *spec.m > 3 * spec.n - 6) nogood("too many edges for a planar graph");
      if (spec.n < 3 && *spec.m > spec.n - 1) nogood("too many edges for a planar graph");
      break;
    case RuleKind::KColor:
      if (spec.m && *spec.m > gen_detail::turan_bound(spec.n, *spec.k))
        nogood("too many edges for a k-colorable graph");
      break;
    default:
      break;
  }
}

// Deterministic rule-satisfying sample for few-shot prompts. The sampling
// schemes are simple rather than uniform over the satisfying set: trees are
// uniform (Prufer), cycles/wheels are random relabelings, k-regular uses the
// pairing model, planar/k-color reject uniform G(n,m) draws, components
// builds per-part connected graphs, bipartite draws edges across fixed parts
// at probability 1/2.
inline Graph generate_exemplar(const RuleSpec& spec, std::uint64_t seed) {
  using namespace gen_detail;
  check_satisfiable(spec);
  Rng rng(derive_seed(seed, "exemplar", static_cast<std::uint64_t>(spec.kind)));
  const int n = spec.n;

  switch (spec.kind) {
    case RuleKind::Tree: {
      std::vector<Edge> edges;
      append_random_tree(edges, n, 0, rng);
      return Graph(n, std::move(edges));
    }
    case RuleKind::Cycle: {
      std::vector<Edge> edges;
      append_random_cycle(edges, n, 0, rng);
      return Graph(n, std::move(edges));
    }
    case RuleKind::Components: {
      auto sizes = random_composition(n, *spec.k, rng);
      std::vector<int> ids(n);
      std::iota(ids.begin(), ids.end(), 1);
      rng.shuffle(ids);
      std::vector<Edge> edges;
      int used = 0;
      for (int s : sizes) {
        std::vector<Edge> local;
        append_random_tree(local, s, 0, rng);
        // sprinkle extra in-part edges to vary beyond bare trees
        for (int a = 1; a <= s; ++a)
          for (int b = a + 1; b <= s; ++b) {
            Edge e{a, b};
            bool in_tree = std::find(local.begin(), local.end(), e) != local.end();
            if (!in_tree && rng.bernoulli(0.15)) local.push_back(e);
          }
        for (auto [a, b] : local) {
          int u = ids[used + a - 1], v = ids[used + b - 1];
          edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        used += s;
      }
      return Graph(n, std::move(edges));
    }
    case RuleKind::Planar: {
      for (int tries = 0; tries < kGenerationBudget; ++tries) {
        Graph g = random_gnm(n, *spec.m, rng);
        if (is_planar(g)) return g;
      }
      throw GenerationTimeout("planar: rejection budget exhausted");
    }
    case RuleKind::KRegular: {
      for (int tries = 0; tries < kGenerationBudget; ++tries) {
        if (auto g = try_pairing_regular(n, *spec.k, rng)) return *g;
      }
      throw GenerationTimeout("k_regular: rejection budget exhausted");
    }
    case RuleKind::Wheel: {
      std::vector<Edge> edges;
      for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
      for (int v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(2, n);
      return random_permuted(Graph(n, std::move(edges)), rng);
    }
    case RuleKind::Bipartite: {
      int u_size = spec.part_sizes->first;
      std::vector<Edge> edges;
      for (int a = 1; a <= u_size; ++a)
        for (int b = u_size + 1; b <= n; ++b)
          if (rng.bernoulli(0.5)) edges.emplace_back(a, b);
      return random_permuted(Graph(n, std::move(edges)), rng);
    }
    case RuleKind::KColor: {
      for (int tries = 0; tries < kGenerationBudget; ++tries) {
        Graph g = random_gnm(n, spec.m ? *spec.m : n, rng);
        if (is_k_colorable(g, *spec.k)) return g;
      }
      throw GenerationTimeout("k_color: rejection budget exhausted");
    }
  }
  throw Unsatisfiable("unknown rule kind");
}

struct ProbabilityEstimate {
  double p = 0.0;
  double std_error = 0.0;
  int samples = 0;
};

// Edge count a uniform random graph gets in the difficulty calibration: the
// rule-implied count where the rule fixes one, otherwise every edge is drawn
// at probability 1/2.
inline std::optional<int> calibration_edge_count(const RuleSpec& spec) {
  switch (spec.kind) {
    case RuleKind::Tree: return spec.n - 1;
    case RuleKind::Cycle: return spec.n;
    case RuleKind::Wheel: return 2 * (spec.n - 1);
    case RuleKind::KRegular: return static_cast<int>((static_cast<long long>(spec.n) * *spec.k) / 2);
    case RuleKind::Planar: return *spec.m;
    case RuleKind::KColor: return spec.m;
    default: return std::nullopt;  // Components, Bipartite
  }
}

// Monte-Carlo estimate of the probability that a uniform random graph with
// the spec's size satisfies the rule.
inline ProbabilityEstimate estimate_random_valid_prob(const RuleSpec& spec, int samples,
                                                      std::uint64_t seed) {
  check_spec(spec);
  Rng rng(derive_seed(seed, "calibration"));
  auto fixed_m = calibration_edge_count(spec);
  int hits = 0;
  for (int i = 0; i < samples; ++i) {
    Graph g = fixed_m ? gen_detail::random_gnm(spec.n, *fixed_m, rng) : [&] {
      std::vector<Edge> edges;
      for (int u = 1; u <= spec.n; ++u)
        for (int v = u + 1; v <= spec.n; ++v)
          if (rng.bernoulli(0.5)) edges.emplace_back(u, v);
      return Graph(spec.n, std::move(edges));
    }();
    if (validate_rule(spec, g).valid) ++hits;
  }
  double p = samples > 0 ? static_cast<double>(hits) / samples : 0.0;
  double se = samples > 0 ? std::sqrt(p * (1.0 - p) / samples) : 0.0;
  return {p, se, samples};
}

}  // namespace ggbench
