#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ggbench/errors.hpp"
#include "ggbench/graph.hpp"
#include "ggbench/isomorphism.hpp"
#include "ggbench/rng.hpp"
#include "ggbench/rule_gen.hpp"

namespace ggbench {

enum class DistributionTask { TreesOrCycles, UnionOfComponents, Motif };

inline const char* distribution_task_name(DistributionTask t) {
  switch (t) {
    case DistributionTask::TreesOrCycles: return "trees_or_cycles";
    case DistributionTask::UnionOfComponents: return "union_of_components";
    case DistributionTask::Motif: return "motif";
  }
  return "?";
}

inline std::optional<DistributionTask> distribution_task_from_name(const std::string& s) {
  for (DistributionTask t : {DistributionTask::TreesOrCycles, DistributionTask::UnionOfComponents,
                             DistributionTask::Motif})
    if (s == distribution_task_name(t)) return t;
  return std::nullopt;
}

// base sizes used by the motif task sampler
struct MotifBaseConfig {
  std::vector<int> tree_sizes{7, 13};  // full binary (7) or full ternary (13)
  int ladder_rail = 4;                 // 2x4 ladder, 8 nodes
  int wheel_nodes = 7;
};

struct DistributionSpec {
  DistributionTask task = DistributionTask::TreesOrCycles;
  double p = 0.5;
  std::pair<int, int> size_range{5, 7};  // per tree/cycle/component
  int set_size = 10;
  MotifBaseConfig motif_bases;
};

inline void check_spec(const DistributionSpec& spec) {
  if (spec.p < 0.0 || spec.p > 1.0) throw SpecMismatch("distribution: p outside [0, 1]");
  if (spec.size_range.first < 3 || spec.size_range.second < spec.size_range.first)
    throw SpecMismatch("distribution: bad size range");
  if (spec.set_size < 1) throw SpecMismatch("distribution: set size must be >= 1");
}

enum class TCLabel { Tree, Cycle, Neither };
enum class BaseKind { Tree = 0, Ladder = 1, Wheel = 2 };
enum class MotifKind { Cycle = 0, House = 1, Crane = 2 };

inline const char* base_kind_name(BaseKind b) {
  switch (b) {
    case BaseKind::Tree: return "tree";
    case BaseKind::Ladder: return "ladder";
    case BaseKind::Wheel: return "wheel";
  }
  return "?";
}
inline const char* motif_kind_name(MotifKind m) {
  switch (m) {
    case MotifKind::Cycle: return "cycle";
    case MotifKind::House: return "house";
    case MotifKind::Crane: return "crane";
  }
  return "?";
}

// the three fixed 5-node motif templates
inline const Graph& motif_template(MotifKind kind) {
  static const Graph cycle(5, {{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  static const Graph house(5, {{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
  static const Graph crane(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  switch (kind) {
    case MotifKind::Cycle: return cycle;
    case MotifKind::House: return house;
    case MotifKind::Crane: return crane;
  }
  return cycle;
}

// --- base family construction and recognition ---

// perfect tree: every internal node has exactly `arity` children, all leaves
// at the same depth
inline Graph build_full_tree(int arity, int depth) {
  std::vector<Edge> edges;
  int next = 2;
  std::vector<int> frontier{1};
  for (int d = 0; d < depth; ++d) {
    std::vector<int> child_frontier;
    for (int parent : frontier)
      for (int c = 0; c < arity; ++c) {
        edges.emplace_back(parent, next);
        child_frontier.push_back(next++);
      }
    frontier = std::move(child_frontier);
  }
  return Graph(next - 1, std::move(edges));
}

inline Graph build_ladder(int rail_len) {
  std::vector<Edge> edges;
  for (int i = 1; i < rail_len; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(rail_len + i, rail_len + i + 1);
  }
  for (int i = 1; i <= rail_len; ++i) edges.emplace_back(i, rail_len + i);
  return Graph(2 * rail_len, std::move(edges));
}

inline Graph build_wheel(int n) {
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  for (int v = 2; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(2, n);
  return Graph(n, std::move(edges));
}

// Base graph with a randomized labeling. `size_param` means: node count for
// Tree (a full binary/ternary count: 3, 7, 15, ... or 4, 13, 40, ...) and
// Wheel, rail length for Ladder.
inline Graph build_base(BaseKind kind, int size_param, std::uint64_t seed) {
  Rng rng(derive_seed(seed, "base", static_cast<std::uint64_t>(kind)));
  Graph g = [&]() -> Graph {
    switch (kind) {
      case BaseKind::Tree: {
        for (int arity : {2, 3}) {
          int nodes = 1, layer = 1, depth = 0;
          while (nodes < size_param) {
            layer *= arity;
            nodes += layer;
            ++depth;
          }
          if (nodes == size_param && depth >= 1) return build_full_tree(arity, depth);
        }
        throw SpecMismatch("tree base size must be a full binary/ternary node count");
      }
      case BaseKind::Ladder:
        if (size_param < 2) throw SpecMismatch("ladder rail length must be >= 2");
        return build_ladder(size_param);
      case BaseKind::Wheel:
        if (size_param < 4) throw SpecMismatch("wheel base needs >= 4 nodes");
        return build_wheel(size_param);
    }
    throw SpecMismatch("unknown base kind");
  }();
  return gen_detail::random_permuted(g, rng);
}

inline bool is_full_arity_tree(const Graph& g, int arity) {
  const int n = g.node_count();
  if (n < arity + 1) return false;
  if (g.edge_count() != n - 1 || !is_connected(g)) return false;
  auto adj = g.adjacency();
  for (int root = 1; root <= n; ++root) {
    if (static_cast<int>(adj[root].size()) != arity) continue;
    // BFS from root: every non-leaf must have exactly `arity` children and
    // all leaves must share one depth
    std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> queue{root};
    depth[root] = 0;
    bool ok = true;
    std::optional<int> leaf_depth;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      int u = queue[qi];
      int children = 0;
      for (int w : adj[u])
        if (depth[w] == -1) {
          depth[w] = depth[u] + 1;
          queue.push_back(w);
          ++children;
        }
      if (children == 0) {
        if (leaf_depth && *leaf_depth != depth[u]) ok = false;
        leaf_depth = depth[u];
      } else if (children != arity) {
        ok = false;
      }
    }
    if (ok && leaf_depth && *leaf_depth >= 1) return true;
  }
  return false;
}

inline bool is_base_tree(const Graph& g) {
  return is_full_arity_tree(g, 2) || is_full_arity_tree(g, 3);
}

inline bool is_base_ladder(const Graph& g) {
  const int n = g.node_count();
  if (n < 4 || n % 2 != 0) return false;
  int rail = n / 2;
  if (g.edge_count() != 3 * rail - 2) return false;
  return is_isomorphic(g, build_ladder(rail));
}

inline bool is_base_wheel(const Graph& g) {
  const int n = g.node_count();
  if (n < 4 || g.edge_count() != 2 * (n - 1)) return false;
  return rules_detail::find_wheel_hub(g).has_value();
}

inline std::optional<BaseKind> match_base(const Graph& g) {
  bool tree = is_base_tree(g);
  bool ladder = is_base_ladder(g);
  bool wheel = is_base_wheel(g);
  int matches = int(tree) + int(ladder) + int(wheel);
  if (matches != 1) return std::nullopt;  // families are disjoint; 0 or ambiguous fails
  if (tree) return BaseKind::Tree;
  if (ladder) return BaseKind::Ladder;
  return BaseKind::Wheel;
}

inline std::optional<MotifKind> match_motif(const Graph& g) {
  if (g.node_count() != 5) return std::nullopt;
  for (MotifKind k : {MotifKind::Cycle, MotifKind::House, MotifKind::Crane})
    if (g.edge_count() == motif_template(k).edge_count() && is_isomorphic(g, motif_template(k)))
      return k;
  return std::nullopt;
}

// --- classification ---

struct UnrecognizedLabel {};
using UnionLabel = std::pair<TCLabel, TCLabel>;
using MotifLabel = std::pair<BaseKind, MotifKind>;
using StructureLabel = std::variant<TCLabel, UnionLabel, MotifLabel, UnrecognizedLabel>;

inline TCLabel classify_tree_or_cycle(const Graph& g) {
  const int n = g.node_count();
  const int m = g.edge_count();
  if (m == n - 1 && is_connected(g)) return TCLabel::Tree;
  if (m == n) {
    auto deg = g.degrees();
    bool all_two = true;
    for (int v = 1; v <= n; ++v)
      if (deg[v] != 2) all_two = false;
    if (all_two && is_connected(g)) return TCLabel::Cycle;
  }
  return TCLabel::Neither;
}

// exactly two components, each a tree or a cycle (order: by smallest node id)
inline std::optional<UnionLabel> classify_union(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() != 2) return std::nullopt;
  TCLabel a = classify_tree_or_cycle(g.induced(comps[0]));
  TCLabel b = classify_tree_or_cycle(g.induced(comps[1]));
  if (a == TCLabel::Neither || b == TCLabel::Neither) return std::nullopt;
  return UnionLabel{a, b};
}

// Decomposes into base + 5-node motif joined by one removable edge. When
// several removals work, the one with the lexicographically smallest motif
// node set wins; label conflicts at that set mean Unrecognized.
inline std::optional<MotifLabel> classify_motif(const Graph& g) {
  const int n = g.node_count();
  if (n < 8) return std::nullopt;  // smallest base (3-node full binary tree) + motif
  struct Candidate {
    std::vector<int> motif_nodes;
    MotifLabel label;
  };
  std::vector<Candidate> candidates;
  for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
    std::vector<Edge> rest = g.edges();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(ei));
    Graph cut(n, std::move(rest));
    auto comps = connected_components(cut);
    if (comps.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      const auto& motif_side = comps[side];
      const auto& base_side = comps[1 - side];
      if (motif_side.size() != 5) continue;
      auto mk = match_motif(cut.induced(motif_side));
      if (!mk) continue;
      auto bk = match_base(cut.induced(base_side));
      if (!bk) continue;
      candidates.push_back({motif_side, {*bk, *mk}});
    }
  }
  if (candidates.empty()) return std::nullopt;
  auto best = std::min_element(candidates.begin(), candidates.end(),
                               [](const Candidate& a, const Candidate& b) {
                                 return a.motif_nodes < b.motif_nodes;
                               });
  for (const auto& c : candidates)
    if (c.motif_nodes == best->motif_nodes && !(c.label == best->label))
      return std::nullopt;  // conflicting labels on the chosen decomposition
  return best->label;
}

inline StructureLabel classify(DistributionTask task, const Graph& g) {
  switch (task) {
    case DistributionTask::TreesOrCycles:
      return classify_tree_or_cycle(g);
    case DistributionTask::UnionOfComponents: {
      auto u = classify_union(g);
      if (u) return *u;
      return UnrecognizedLabel{};
    }
    case DistributionTask::Motif: {
      auto m = classify_motif(g);
      if (m) return *m;
      return UnrecognizedLabel{};
    }
  }
  return UnrecognizedLabel{};
}

// --- sampling ---

struct InputSet {
  std::vector<Graph> graphs;
  std::vector<StructureLabel> labels;  // hidden ground truth, parallel to graphs
};

namespace dist_detail {

inline Graph sample_tree_or_cycle(TCLabel kind, int size, Rng& rng) {
  std::vector<Edge> edges;
  if (kind == TCLabel::Tree)
    gen_detail::append_random_tree(edges, size, 0, rng);
  else
    gen_detail::append_random_cycle(edges, size, 0, rng);
  return Graph(size, std::move(edges));
}

}  // namespace dist_detail

inline InputSet sample_input_set(const DistributionSpec& spec, std::uint64_t seed) {
  check_spec(spec);
  Rng rng(derive_seed(seed, "input_set", static_cast<std::uint64_t>(spec.task)));
  auto size = [&] { return rng.range(spec.size_range.first, spec.size_range.second); };
  InputSet out;

  for (int i = 0; i < spec.set_size; ++i) {
    switch (spec.task) {
      case DistributionTask::TreesOrCycles: {
        TCLabel kind = rng.bernoulli(spec.p) ? TCLabel::Tree : TCLabel::Cycle;
        out.graphs.push_back(dist_detail::sample_tree_or_cycle(kind, size(), rng));
        out.labels.push_back(kind);
        break;
      }
      case DistributionTask::UnionOfComponents: {
        TCLabel first = rng.bernoulli(0.5) ? TCLabel::Tree : TCLabel::Cycle;
        bool same = rng.bernoulli(spec.p);
        TCLabel second = same ? first : (first == TCLabel::Tree ? TCLabel::Cycle : TCLabel::Tree);
        int s1 = size(), s2 = size();
        std::vector<Edge> edges;
        if (first == TCLabel::Tree)
          gen_detail::append_random_tree(edges, s1, 0, rng);
        else
          gen_detail::append_random_cycle(edges, s1, 0, rng);
        if (second == TCLabel::Tree)
          gen_detail::append_random_tree(edges, s2, s1, rng);
        else
          gen_detail::append_random_cycle(edges, s2, s1, rng);
        out.graphs.emplace_back(s1 + s2, std::move(edges));
        // order the hidden label by smallest node id, matching classify_union
        out.labels.push_back(UnionLabel{first, second});
        break;
      }
      case DistributionTask::Motif: {
        auto base_kind = static_cast<BaseKind>(rng.below(3));
        MotifKind motif_kind;
        if (rng.bernoulli(spec.p)) {
          motif_kind = static_cast<MotifKind>(static_cast<int>(base_kind));
        } else {
          int other = rng.bernoulli(0.5) ? 1 : 2;
          motif_kind = static_cast<MotifKind>((static_cast<int>(base_kind) + other) % 3);
        }
        int base_param = 0;
        switch (base_kind) {
          case BaseKind::Tree: {
            const auto& sizes = spec.motif_bases.tree_sizes;
            base_param = sizes[static_cast<std::size_t>(rng.below(sizes.size()))];
            break;
          }
          case BaseKind::Ladder: base_param = spec.motif_bases.ladder_rail; break;
          case BaseKind::Wheel: base_param = spec.motif_bases.wheel_nodes; break;
        }
        Graph base = build_base(base_kind, base_param, rng.next());
        const Graph& motif = motif_template(motif_kind);
        int nb = base.node_count();
        std::vector<Edge> edges = base.edges();
        for (auto [u, v] : motif.edges()) edges.emplace_back(nb + u, nb + v);
        int anchor_base = rng.range(1, nb);
        int anchor_motif = nb + rng.range(1, 5);
        edges.emplace_back(anchor_base, anchor_motif);
        out.graphs.emplace_back(nb + 5, std::move(edges));
        out.labels.push_back(MotifLabel{base_kind, motif_kind});
        break;
      }
    }
  }
  return out;
}

// --- p_gen ---

struct PGenResult {
  double p_gen = 0.0;
  double valid_fraction = 0.0;
  int classifiable = 0;
  int total = 0;
};

inline bool same_label_pair(const MotifLabel& l) {
  return static_cast<int>(l.first) == static_cast<int>(l.second);
}

inline PGenResult estimate_p_gen(DistributionTask task, const std::vector<Graph>& graphs) {
  PGenResult res;
  res.total = static_cast<int>(graphs.size());
  int hits = 0;
  for (const auto& g : graphs) {
    StructureLabel label = classify(task, g);
    switch (task) {
      case DistributionTask::TreesOrCycles: {
        TCLabel tc = std::get<TCLabel>(label);
        if (tc == TCLabel::Neither) continue;
        ++res.classifiable;
        if (tc == TCLabel::Tree) ++hits;
        break;
      }
      case DistributionTask::UnionOfComponents: {
        if (!std::holds_alternative<UnionLabel>(label)) continue;
        auto [a, b] = std::get<UnionLabel>(label);
        ++res.classifiable;
        if (a == b) ++hits;
        break;
      }
      case DistributionTask::Motif: {
        if (!std::holds_alternative<MotifLabel>(label)) continue;
        ++res.classifiable;
        if (same_label_pair(std::get<MotifLabel>(label))) ++hits;
        break;
      }
    }
  }
  if (res.classifiable == 0)
    throw NoClassifiableGraphs("no graph fits the " +
                               std::string(distribution_task_name(task)) + " structure");
  res.p_gen = static_cast<double>(hits) / res.classifiable;
  res.valid_fraction = res.total > 0 ? static_cast<double>(res.classifiable) / res.total : 0.0;
  return res;
}

}  // namespace ggbench
