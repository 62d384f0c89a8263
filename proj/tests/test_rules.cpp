#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ggbench/rule_gen.hpp"
#include "ggbench/rules.hpp"
#include "rule_oracles.hpp"
#include "test_util.hpp"

using namespace ggbench;
using testutil::random_graph;

namespace {

bool oracle_valid(const RuleSpec& spec, const Graph& g) {
  if (g.node_count() != spec.n) return false;
  switch (spec.kind) {
    case RuleKind::Tree: return oracle::is_tree(g);
    case RuleKind::Cycle: return oracle::is_cycle(g);
    case RuleKind::Components: return oracle::component_count(g) == *spec.k;
    case RuleKind::Planar: return g.edge_count() == *spec.m && oracle::is_planar(g);
    case RuleKind::KRegular: return oracle::is_k_regular(g, *spec.k);
    case RuleKind::Wheel: return oracle::is_wheel(g);
    case RuleKind::Bipartite:
      return oracle::is_bipartite_with_sizes(g, spec.part_sizes->first, spec.part_sizes->second);
    case RuleKind::KColor:
      return (!spec.m || g.edge_count() == *spec.m) && oracle::is_k_colorable(g, *spec.k);
  }
  return false;
}

// the spec battery exercised against every small graph
std::vector<RuleSpec> spec_battery(int n) {
  std::vector<RuleSpec> specs;
  specs.push_back(tree_spec(n));
  if (n >= 3) specs.push_back(cycle_spec(n));
  if (n >= 4) specs.push_back(wheel_spec(n));
  for (int k = 1; k <= n; ++k) specs.push_back(components_spec(n, k));
  for (int k = 0; k < n; ++k) specs.push_back(k_regular_spec(n, k));
  for (int a = 0; a <= n; ++a) specs.push_back(bipartite_spec(a, n - a));
  for (int k = 1; k <= 4; ++k) specs.push_back(k_color_spec(n, std::nullopt, k));
  return specs;
}

void check_witness(const RuleSpec& spec, const Graph& g, const ValidityReport& report) {
  if (!report.valid) return;
  switch (spec.kind) {
    case RuleKind::KColor: {
      const auto& coloring = std::get<std::vector<int>>(report.witness);
      for (auto [u, v] : g.edges()) REQUIRE(coloring[u] != coloring[v]);
      for (int v = 1; v <= g.node_count(); ++v) {
        REQUIRE(coloring[v] >= 0);
        REQUIRE(coloring[v] < *spec.k);
      }
      break;
    }
    case RuleKind::Bipartite: {
      const auto& part = std::get<Bipartition>(report.witness);
      REQUIRE(static_cast<int>(part.u.size()) == spec.part_sizes->first);
      REQUIRE(static_cast<int>(part.v.size()) == spec.part_sizes->second);
      std::set<int> u_set(part.u.begin(), part.u.end());
      for (auto [a, b] : g.edges()) REQUIRE(u_set.count(a) != u_set.count(b));
      break;
    }
    case RuleKind::Wheel: {
      int hub = std::get<int>(report.witness);
      REQUIRE(g.degrees()[hub] == g.node_count() - 1);
      break;
    }
    default:
      break;
  }
}

}  // namespace

TEST_CASE("validate_rule fixtures") {
  REQUIRE(validate_rule(tree_spec(3), testutil::path_graph(3)).valid);
  REQUIRE_FALSE(validate_rule(planar_spec(5, 10), testutil::complete_graph(5)).valid);
  REQUIRE(validate_rule(k_regular_spec(4, 3), testutil::complete_graph(4)).valid);

  Graph wheel5(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {2, 5}});
  REQUIRE(validate_rule(wheel_spec(5), wheel5).valid);

  REQUIRE_FALSE(validate_rule(bipartite_spec(2, 2), testutil::cycle_graph(5)).valid);
  REQUIRE_FALSE(validate_rule(k_color_spec(4, 6, 3), testutil::complete_graph(4)).valid);
  REQUIRE(validate_rule(components_spec(4, 3), Graph(4, {{1, 2}})).valid);

  // K4 is the degenerate wheel
  REQUIRE(validate_rule(wheel_spec(4), testutil::complete_graph(4)).valid);

  REQUIRE_THROWS_AS(validate_rule(k_regular_spec(4, 4), testutil::complete_graph(4)), SpecMismatch);
  REQUIRE_THROWS_AS(validate_rule(components_spec(4, 5), Graph(4, {})), SpecMismatch);
  REQUIRE_THROWS_AS(validate_rule(bipartite_spec(2, 3), Graph(4, {})), SpecMismatch);
}

TEST_CASE("validators agree with oracles on every graph with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all_pairs;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all_pairs.emplace_back(u, v);
    auto specs = spec_battery(n);
    for (std::uint32_t mask = 0; mask < (1u << all_pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all_pairs.size(); ++i)
        if ((mask >> i) & 1u) edges.push_back(all_pairs[i]);
      Graph g(n, std::move(edges));
      RuleSpec planar = planar_spec(n, g.edge_count());
      REQUIRE(validate_rule(planar, g).valid == oracle_valid(planar, g));
      for (const auto& spec : specs) {
        auto report = validate_rule(spec, g);
        INFO(rule_kind_name(spec.kind) << " n=" << n << " mask=" << mask);
        REQUIRE(report.valid == oracle_valid(spec, g));
        check_witness(spec, g, report);
      }
    }
  }
}

TEST_CASE("validators agree with oracles on random graphs with n <= 7") {
  Rng rng(20240604);
  for (int trial = 0; trial < 10'000; ++trial) {
    int n = rng.range(1, 7);
    Graph g = random_graph(rng, n, rng.uniform01());
    // one spec of each kind with parameters tied to the sampled graph
    std::vector<RuleSpec> specs = {tree_spec(n), components_spec(n, rng.range(1, n)),
                                   planar_spec(n, g.edge_count()),
                                   k_regular_spec(n, n > 1 ? rng.range(0, n - 1) : 0),
                                   bipartite_spec(rng.range(0, n), 0),
                                   k_color_spec(n, g.edge_count(), rng.range(1, 3))};
    specs[4].part_sizes->second = n - specs[4].part_sizes->first;
    if (n >= 3) specs.push_back(cycle_spec(n));
    if (n >= 4) specs.push_back(wheel_spec(n));
    for (const auto& spec : specs) {
      INFO(rule_kind_name(spec.kind) << " trial=" << trial);
      REQUIRE(validate_rule(spec, g).valid == oracle_valid(spec, g));
    }
  }
}

TEST_CASE("node count mismatches are always invalid") {
  Graph g = testutil::cycle_graph(5);
  REQUIRE(validate_rule(cycle_spec(6), g).reason == "node_count_mismatch");
  REQUIRE(validate_rule(tree_spec(4), g).reason == "node_count_mismatch");
}

TEST_CASE("generated exemplars always satisfy their rule") {
  const RuleKind kinds[] = {RuleKind::Tree,     RuleKind::Cycle, RuleKind::Components,
                            RuleKind::Planar,   RuleKind::KRegular, RuleKind::Wheel,
                            RuleKind::Bipartite, RuleKind::KColor};
  for (RuleKind kind : kinds) {
    RuleSpec spec = preset_spec(kind);
    int trials = (kind == RuleKind::Planar || kind == RuleKind::KColor) ? 2000 : 10'000;
    for (int t = 0; t < trials; ++t) {
      Graph g = generate_exemplar(spec, 1000 + static_cast<std::uint64_t>(t));
      INFO(rule_kind_name(kind) << " seed=" << 1000 + t);
      REQUIRE(validate_rule(spec, g).valid);
    }
  }
}

TEST_CASE("generation is deterministic per (spec, seed) and varies with the seed") {
  for (RuleKind kind : {RuleKind::Tree, RuleKind::Planar, RuleKind::Bipartite}) {
    RuleSpec spec = preset_spec(kind);
    REQUIRE(generate_exemplar(spec, 42) == generate_exemplar(spec, 42));
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      seen.insert(generate_exemplar(spec, seed).edges());
    REQUIRE(seen.size() > 10);  // successive seeds yield varied graphs
  }
}

TEST_CASE("generator rejects unsatisfiable specs") {
  REQUIRE_THROWS_AS(generate_exemplar(k_regular_spec(5, 3), 1), Unsatisfiable);
  REQUIRE_THROWS_AS(generate_exemplar(planar_spec(15, 40), 1), Unsatisfiable);
  REQUIRE_THROWS_AS(generate_exemplar(k_color_spec(4, 6, 2), 1), Unsatisfiable);
}

TEST_CASE("size presets match the benchmark settings") {
  auto medium_planar = preset_spec(RuleKind::Planar);
  REQUIRE(medium_planar.n == 15);
  REQUIRE(*medium_planar.m == 24);
  auto medium_kcolor = preset_spec(RuleKind::KColor);
  REQUIRE(medium_kcolor.n == 15);
  REQUIRE(*medium_kcolor.m == 32);
  REQUIRE(*medium_kcolor.k == 3);
  REQUIRE(preset_spec(RuleKind::Tree).n == 15);
  REQUIRE(preset_spec(RuleKind::Components).n == 15);
  REQUIRE(*preset_spec(RuleKind::Components).k == 5);
  REQUIRE(preset_spec(RuleKind::KRegular).n == 16);
  REQUIRE(*preset_spec(RuleKind::KRegular).k == 3);
  REQUIRE(preset_spec(RuleKind::Bipartite).part_sizes->first == 5);
  REQUIRE(preset_spec(RuleKind::Bipartite).part_sizes->second == 5);

  REQUIRE(preset_spec(RuleKind::Cycle, SizeLabel::Small).n == 10);
  REQUIRE(preset_spec(RuleKind::Cycle, SizeLabel::Large).n == 20);
  REQUIRE(preset_spec(RuleKind::KRegular, SizeLabel::Small).n == 12);
  REQUIRE(preset_spec(RuleKind::KRegular, SizeLabel::Large).n == 20);
  REQUIRE(preset_spec(RuleKind::KColor, SizeLabel::Small).n == 10);
  REQUIRE(*preset_spec(RuleKind::KColor, SizeLabel::Small).m == 20);
  REQUIRE(preset_spec(RuleKind::KColor, SizeLabel::Large).n == 18);
  REQUIRE(*preset_spec(RuleKind::KColor, SizeLabel::Large).m == 39);

  REQUIRE_THROWS_AS(preset_spec(RuleKind::Tree, SizeLabel::Small), SpecMismatch);
  REQUIRE_THROWS_AS(preset_spec(RuleKind::Wheel, SizeLabel::Large), SpecMismatch);
}

TEST_CASE("difficulty calibration behaves sanely on a smaller budget") {
  auto planar = estimate_random_valid_prob(preset_spec(RuleKind::Planar), 2000, 7);
  REQUIRE(planar.p > 0.05);
  REQUIRE(planar.p < 0.40);
  auto kcolor = estimate_random_valid_prob(preset_spec(RuleKind::KColor), 2000, 7);
  REQUIRE(kcolor.p > 0.05);
  REQUIRE(kcolor.p < 0.40);
  REQUIRE(planar.std_error == Catch::Approx(std::sqrt(planar.p * (1 - planar.p) / 2000)));
}

TEST_CASE("difficulty calibration golden value for trees") {
  // G(15, 14) rarely lands on a spanning tree; frozen from a pinned-seed run
  auto est = estimate_random_valid_prob(tree_spec(15), 10'000, 123);
  REQUIRE(est.samples == 10'000);
  REQUIRE(est.p == Catch::Approx(0.0262).margin(1e-12));
}
