#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <set>

#include "ggbench/graph.hpp"
#include "ggbench/isomorphism.hpp"
#include "ggbench/rng.hpp"
#include "test_util.hpp"

using namespace ggbench;
using testutil::brute_force_isomorphic;
using testutil::random_graph;

namespace {
const char* kCycle5Text = "(5, [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)])";
}

TEST_CASE("parse_graph_text accepts the standard tuple form") {
  auto parsed = parse_graph_text(kCycle5Text);
  REQUIRE(parsed.graph.node_count() == 5);
  REQUIRE(parsed.graph.edge_count() == 5);
  auto deg = parsed.graph.degrees();
  for (int v = 1; v <= 5; ++v) REQUIRE(deg[v] == 2);
  REQUIRE(is_connected(parsed.graph));
  REQUIRE_FALSE(parsed.warnings.any());

  auto empty = parse_graph_text("(3, [])");
  REQUIRE(empty.graph.node_count() == 3);
  REQUIRE(empty.graph.edge_count() == 0);
}

TEST_CASE("parse_graph_text error cases") {
  REQUIRE_THROWS_AS(parse_graph_text("(4, [(1, 5)])"), EndpointOutOfRange);
  REQUIRE_THROWS_AS(parse_graph_text("(4, [(2, 2)])"), SelfLoop);
  REQUIRE_THROWS_AS(parse_graph_text("(4, [(1, 2)"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("(4, [(1, 2]))"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("(a, [])"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("(4, [(1, -2)])"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("no graphs here"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("(0, [])"), MalformedSyntax);
  REQUIRE_THROWS_AS(parse_graph_text("(3, []) and then junk"), MalformedSyntax);
}

TEST_CASE("parse_graph_text tolerates labels, whitespace and duplicates") {
  auto labeled = parse_graph_text("Graph 3: (3, [(1, 2)])");
  REQUIRE(labeled.graph.edge_count() == 1);

  auto spaced = parse_graph_text("  ( 3 ,\n [ ( 1 , 2 ) , ( 2 , 3 ) ] )  ");
  REQUIRE(spaced.graph.edge_count() == 2);

  auto dup = parse_graph_text("(3, [(1, 2), (2, 1), (2, 3)])");
  REQUIRE(dup.graph.edge_count() == 2);
  REQUIRE(dup.warnings.duplicate_edges_collapsed);

  // 0-based ids are shifted up when unambiguous
  auto zero = parse_graph_text("(3, [(0, 1), (1, 2)])");
  REQUIRE(zero.warnings.zero_indexed_shifted);
  REQUIRE(zero.graph.has_edge(1, 2));
  REQUIRE(zero.graph.has_edge(2, 3));
}

TEST_CASE("serialize_graph is deterministic and sorted") {
  Graph triangle(3, {{2, 3}, {1, 2}, {1, 3}});
  REQUIRE(serialize_graph(triangle) == "(3, [(1, 2), (1, 3), (2, 3)])");
  Graph empty2(2, {});
  REQUIRE(serialize_graph(empty2) == "(2, [])");
  REQUIRE(serialize_graph(parse_graph_text(kCycle5Text).graph) == kCycle5Text);
}

TEST_CASE("round-trip: parse(serialize(g)) == g for 10k random graphs") {
  Rng rng(20240601);
  for (int trial = 0; trial < 10'000; ++trial) {
    int n = rng.range(1, 20);
    Graph g = random_graph(rng, n, rng.uniform01());
    REQUIRE(parse_graph_text(serialize_graph(g)).graph == g);
  }
}

TEST_CASE("connected_components basics") {
  Graph g(4, {{1, 2}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[0] == std::vector<int>{1, 2});
  REQUIRE(comps[1] == std::vector<int>{3});
  REQUIRE(comps[2] == std::vector<int>{4});

  REQUIRE(connected_components(testutil::cycle_graph(5)).size() == 1);

  Graph two_triangles(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  REQUIRE(connected_components(two_triangles).size() == 2);
}

TEST_CASE("connected_components is a partition, order-independent") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.range(1, 15);
    Graph g = random_graph(rng, n, 0.2);
    auto comps = connected_components(g);
    std::set<int> all;
    for (const auto& comp : comps)
      for (int v : comp) {
        REQUIRE(all.insert(v).second);  // no node twice
      }
    REQUIRE(static_cast<int>(all.size()) == n);
    // reversed edge list gives the same partition
    std::vector<Edge> rev(g.edges().rbegin(), g.edges().rend());
    std::reverse(rev.begin(), rev.end());
    Graph g2(n, rev);
    REQUIRE(connected_components(g2) == comps);
  }
}

TEST_CASE("is_isomorphic fixtures") {
  auto c5 = testutil::cycle_graph(5);
  Rng rng(99);
  REQUIRE(is_isomorphic(c5, testutil::random_relabel(rng, c5)));
  REQUIRE_FALSE(is_isomorphic(c5, testutil::path_graph(5)));

  // house and crane motif templates are not isomorphic (checked by brute force too)
  Graph house(5, {{1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}});
  Graph crane(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  REQUIRE_FALSE(is_isomorphic(house, crane));
  REQUIRE_FALSE(brute_force_isomorphic(house, crane));

  Graph big(kIsoNodeLimit + 1, {});
  REQUIRE_THROWS_AS(is_isomorphic(big, big), SizeLimitExceeded);
  REQUIRE_THROWS_AS(canonical_key(big), SizeLimitExceeded);
}

TEST_CASE("is_isomorphic agrees with the all-permutations oracle on n <= 7") {
  Rng rng(20240602);
  for (int trial = 0; trial < 3000; ++trial) {
    int n = rng.range(1, 7);
    Graph g = random_graph(rng, n, rng.uniform01());
    Graph h = rng.bernoulli(0.5) ? testutil::random_relabel(rng, g) : random_graph(rng, n, rng.uniform01());
    REQUIRE(is_isomorphic(g, h) == brute_force_isomorphic(g, h));
  }
}

TEST_CASE("canonical_key equality matches is_isomorphic") {
  Rng rng(20240603);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = rng.range(1, 7);
    Graph g = random_graph(rng, n, rng.uniform01());
    Graph h = rng.bernoulli(0.5) ? testutil::random_relabel(rng, g) : random_graph(rng, n, rng.uniform01());
    REQUIRE((canonical_key(g) == canonical_key(h)) == is_isomorphic(g, h));
  }
}

TEST_CASE("canonical_key handles highly symmetric graphs") {
  Rng rng(5);
  // complete, empty, complete bipartite, long cycles: the usual refinement-proof cases
  auto k15 = testutil::complete_graph(15);
  REQUIRE(canonical_key(k15) == canonical_key(testutil::random_relabel(rng, k15)));
  Graph empty20(20, {});
  REQUIRE(canonical_key(empty20) == canonical_key(Graph(20, {})));
  std::vector<Edge> kbb;
  for (int u = 1; u <= 5; ++u)
    for (int v = 6; v <= 10; ++v) kbb.emplace_back(u, v);
  Graph k55(10, kbb);
  REQUIRE(canonical_key(k55) == canonical_key(testutil::random_relabel(rng, k55)));
  auto c20 = testutil::cycle_graph(20);
  REQUIRE(canonical_key(c20) == canonical_key(testutil::random_relabel(rng, c20)));
  REQUIRE(canonical_key(c20) != canonical_key(testutil::path_graph(20)));
}

TEST_CASE("graph file round trip with comments") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ggbench_graph_io_test";
  fs::create_directories(dir);
  auto path = (dir / "graphs.txt").string();

  std::vector<Graph> graphs = {testutil::cycle_graph(5), Graph(3, {}), testutil::path_graph(4)};
  write_graph_file(path, graphs);
  {
    std::ofstream app(path, std::ios::app);
    app << "# trailing comment\n\n";
  }
  auto back = read_graph_file(path);
  REQUIRE(back == graphs);
  fs::remove_all(dir);
}
