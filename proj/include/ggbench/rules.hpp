#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ggbench/coloring.hpp"
#include "ggbench/errors.hpp"
#include "ggbench/graph.hpp"
#include "ggbench/planar.hpp"

namespace ggbench {

enum class RuleKind { Tree, Cycle, Components, Planar, KRegular, Wheel, Bipartite, KColor };

inline const char* rule_kind_name(RuleKind k) {
  switch (k) {
    case RuleKind::Tree: return "tree";
    case RuleKind::Cycle: return "cycle";
    case RuleKind::Components: return "components";
    case RuleKind::Planar: return "planar";
    case RuleKind::KRegular: return "k_regular";
    case RuleKind::Wheel: return "wheel";
    case RuleKind::Bipartite: return "bipartite";
    case RuleKind::KColor: return "k_color";
  }
  return "?";
}

inline std::optional<RuleKind> rule_kind_from_name(const std::string& s) {
  for (RuleKind k : {RuleKind::Tree, RuleKind::Cycle, RuleKind::Components, RuleKind::Planar,
                     RuleKind::KRegular, RuleKind::Wheel, RuleKind::Bipartite, RuleKind::KColor})
    if (s == rule_kind_name(k)) return k;
  return std::nullopt;
}

struct RuleSpec {
  RuleKind kind;
  int n = 0;                                       // node count
  std::optional<int> m;                            // edge count (Planar; KColor optional)
  std::optional<int> k;                            // components / regular degree / colors
  std::optional<std::pair<int, int>> part_sizes;   // Bipartite (|U|, |V|)
};

inline RuleSpec tree_spec(int n) { return {RuleKind::Tree, n, {}, {}, {}}; }
inline RuleSpec cycle_spec(int n) { return {RuleKind::Cycle, n, {}, {}, {}}; }
inline RuleSpec components_spec(int n, int k) { return {RuleKind::Components, n, {}, k, {}}; }
inline RuleSpec planar_spec(int n, int m) { return {RuleKind::Planar, n, m, {}, {}}; }
inline RuleSpec k_regular_spec(int n, int k) { return {RuleKind::KRegular, n, {}, k, {}}; }
inline RuleSpec wheel_spec(int n) { return {RuleKind::Wheel, n, {}, {}, {}}; }
inline RuleSpec bipartite_spec(int u, int v) {
  return {RuleKind::Bipartite, u + v, {}, {}, std::pair<int, int>{u, v}};
}
inline RuleSpec k_color_spec(int n, std::optional<int> m, int k) {
  return {RuleKind::KColor, n, m, k, {}};
}

// Throws SpecMismatch when the parameters are incoherent for the rule kind.
// Satisfiability questions (e.g. odd n*k for k-regular) are left to the
// generator, which reports Unsatisfiable.
inline void check_spec(const RuleSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw SpecMismatch(std::string(rule_kind_name(spec.kind)) + ": " + why);
  };
  if (spec.n < 1) fail("node count must be positive");
  long long max_edges = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
  switch (spec.kind) {
    case RuleKind::Tree:
      break;
    case RuleKind::Cycle:
      if (spec.n < 3) fail("a cycle needs at least 3 nodes");
      break;
    case RuleKind::Components:
      if (!spec.k) fail("component count required");
      if (*spec.k < 1 || *spec.k > spec.n) fail("component count must be in 1..n");
      break;
    case RuleKind::Planar:
      if (!spec.m) fail("edge count required");
      if (*spec.m < 0 || *spec.m > max_edges) fail("edge count outside 0..n(n-1)/2");
      break;
    case RuleKind::KRegular:
      if (!spec.k) fail("degree required");
      if (*spec.k < 0 || *spec.k >= spec.n) fail("degree must be in 0..n-1");
      break;
    case RuleKind::Wheel:
      if (spec.n < 4) fail("a wheel needs at least 4 nodes");
      break;
    case RuleKind::Bipartite:
      if (!spec.part_sizes) fail("partition sizes required");
      if (spec.part_sizes->first < 0 || spec.part_sizes->second < 0) fail("partition sizes must be nonnegative");
      if (spec.part_sizes->first + spec.part_sizes->second != spec.n) fail("partition sizes must sum to n");
      break;
    case RuleKind::KColor:
      if (!spec.k) fail("color count required");
      if (*spec.k < 1) fail("color count must be positive");
      if (spec.m && (*spec.m < 0 || *spec.m > max_edges)) fail("edge count outside 0..n(n-1)/2");
      break;
  }
}

struct Bipartition {
  std::vector<int> u, v;  // sorted node lists
};

// Witness payload when a rule holds: a proper coloring, a bipartition, or a
// wheel hub.
using RuleWitness = std::variant<std::monostate, std::vector<int>, Bipartition, int>;

struct ValidityReport {
  bool valid = false;
  std::string reason;  // "ok" or a short failure code
  RuleWitness witness;
};

namespace rules_detail {

inline ValidityReport ok(RuleWitness w = std::monostate{}) { return {true, "ok", std::move(w)}; }
inline ValidityReport bad(std::string reason) { return {false, std::move(reason), std::monostate{}}; }

// hub of degree n-1 whose removal leaves a cycle on the rest
inline std::optional<int> find_wheel_hub(const Graph& g) {
  const int n = g.node_count();
  if (n < 4 || g.edge_count() != 2 * (n - 1)) return std::nullopt;
  auto deg = g.degrees();
  for (int hub = 1; hub <= n; ++hub) {
    if (deg[hub] != n - 1) continue;
    std::vector<int> rim;
    for (int v = 1; v <= n; ++v)
      if (v != hub) rim.push_back(v);
    Graph rest = g.induced(rim);
    if (rest.edge_count() != n - 1) continue;
    auto rest_deg = rest.degrees();
    bool all_two = true;
    for (int v = 1; v <= rest.node_count(); ++v)
      if (rest_deg[v] != 2) all_two = false;
    if (all_two && is_connected(rest)) return hub;
  }
  return std::nullopt;
}

// Searches for a 2-coloring with exact class sizes (|U|, |V|). Components fix
// their two class sizes up to swap; isolated nodes go either way. A subset-sum
// over the choices hits the target size, and the choices are walked back to
// build the witness.
inline std::optional<Bipartition> find_sized_bipartition(const Graph& g, int size_u, int size_v) {
  const int n = g.node_count();
  if (size_u + size_v != n) return std::nullopt;
  auto adj = g.adjacency();
  auto comps = connected_components(g);

  struct CompSides {
    std::vector<int> side0, side1;  // nodes in each color class
  };
  std::vector<CompSides> sides;
  for (const auto& comp : comps) {
    CompSides cs;
    std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> stack{comp[0]};
    color[comp[0]] = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      (color[u] == 0 ? cs.side0 : cs.side1).push_back(u);
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          stack.push_back(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
    sides.push_back(std::move(cs));
  }

  // reach[c][s] = true when the first c components can put s nodes into U
  const int comp_count = static_cast<int>(sides.size());
  std::vector<std::vector<char>> reach(comp_count + 1, std::vector<char>(size_u + 1, 0));
  reach[0][0] = 1;
  for (int c = 0; c < comp_count; ++c) {
    int a = static_cast<int>(sides[c].side0.size());
    int b = static_cast<int>(sides[c].side1.size());
    for (int s = 0; s <= size_u; ++s) {
      if (!reach[c][s]) continue;
      if (s + a <= size_u) reach[c + 1][s + a] = 1;
      if (s + b <= size_u) reach[c + 1][s + b] = 1;
    }
  }
  if (!reach[comp_count][size_u]) return std::nullopt;

  Bipartition part;
  int s = size_u;
  for (int c = comp_count - 1; c >= 0; --c) {
    int a = static_cast<int>(sides[c].side0.size());
    int b = static_cast<int>(sides[c].side1.size());
    if (s - a >= 0 && reach[c][s - a]) {
      part.u.insert(part.u.end(), sides[c].side0.begin(), sides[c].side0.end());
      part.v.insert(part.v.end(), sides[c].side1.begin(), sides[c].side1.end());
      s -= a;
    } else {
      part.u.insert(part.u.end(), sides[c].side1.begin(), sides[c].side1.end());
      part.v.insert(part.v.end(), sides[c].side0.begin(), sides[c].side0.end());
      s -= b;
    }
  }
  std::sort(part.u.begin(), part.u.end());
  std::sort(part.v.begin(), part.v.end());
  return part;
}

}  // namespace rules_detail

inline ValidityReport validate_rule(const RuleSpec& spec, const Graph& g) {
  using namespace rules_detail;
  check_spec(spec);
  if (g.node_count() != spec.n) return bad("node_count_mismatch");
  const int n = g.node_count();
  const int m = g.edge_count();

  switch (spec.kind) {
    case RuleKind::Tree: {
      if (m != n - 1) return bad("edge_count_mismatch");
      if (!is_connected(g)) return bad("not_connected");
      return ok();
    }
    case RuleKind::Cycle: {
      if (m != n) return bad("edge_count_mismatch");
      auto deg = g.degrees();
      for (int v = 1; v <= n; ++v)
        if (deg[v] != 2) return bad("degree_not_two");
      if (!is_connected(g)) return bad("not_connected");
      return ok();
    }
    case RuleKind::Components: {
      auto comps = connected_components(g);
      if (static_cast<int>(comps.size()) != *spec.k) return bad("component_count_mismatch");
      return ok();
    }
    case RuleKind::Planar: {
      if (m != *spec.m) return bad("edge_count_mismatch");
      if (!is_planar(g)) return bad("not_planar");
      return ok();
    }
    case RuleKind::KRegular: {
      if (2LL * m != static_cast<long long>(n) * *spec.k) return bad("edge_count_mismatch");
      auto deg = g.degrees();
      for (int v = 1; v <= n; ++v)
        if (deg[v] != *spec.k) return bad("degree_not_k");
      return ok();
    }
    case RuleKind::Wheel: {
      if (m != 2 * (n - 1)) return bad("edge_count_mismatch");
      auto hub = find_wheel_hub(g);
      if (!hub) return bad("no_hub_with_cycle");
      return ok(*hub);
    }
    case RuleKind::Bipartite: {
      auto part = find_sized_bipartition(g, spec.part_sizes->first, spec.part_sizes->second);
      if (!part) return bad("no_bipartition_with_sizes");
      return ok(std::move(*part));
    }
    case RuleKind::KColor: {
      if (spec.m && m != *spec.m) return bad("edge_count_mismatch");
      auto coloring = find_k_coloring(g, *spec.k);
      if (!coloring) return bad("not_k_colorable");
      return ok(std::move(*coloring));
    }
  }
  return bad("unknown_rule");
}

// --- appendix size presets ---

enum class SizeLabel { Small, Medium, Large };

inline const char* size_label_name(SizeLabel s) {
  switch (s) {
    case SizeLabel::Small: return "small";
    case SizeLabel::Medium: return "medium";
    case SizeLabel::Large: return "large";
  }
  return "?";
}

// Medium is the default benchmark setting for all eight rules; Small/Large
// exist only for the three rules with a published size ablation.
inline RuleSpec preset_spec(RuleKind kind, SizeLabel size = SizeLabel::Medium) {
  if (size == SizeLabel::Medium) {
    switch (kind) {
      case RuleKind::Tree: return tree_spec(15);
      case RuleKind::Cycle: return cycle_spec(15);
      case RuleKind::Components: return components_spec(15, 5);
      case RuleKind::Planar: return planar_spec(15, 24);
      case RuleKind::KRegular: return k_regular_spec(16, 3);
      case RuleKind::Wheel: return wheel_spec(15);
      case RuleKind::Bipartite: return bipartite_spec(5, 5);
      case RuleKind::KColor: return k_color_spec(15, 32, 3);
    }
  }
  if (kind == RuleKind::Cycle) return cycle_spec(size == SizeLabel::Small ? 10 : 20);
  if (kind == RuleKind::KRegular) return k_regular_spec(size == SizeLabel::Small ? 12 : 20, 3);
  if (kind == RuleKind::KColor)
    return size == SizeLabel::Small ? k_color_spec(10, 20, 3) : k_color_spec(18, 39, 3);
  throw SpecMismatch(std::string(rule_kind_name(kind)) + ": no " +
                     size_label_name(size) + " preset");
}

}  // namespace ggbench
