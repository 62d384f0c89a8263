#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "ggbench/graph.hpp"

namespace ggbench {

// Complete planarity decision via Boyer-Myrvold; cross-checked against an
// exhaustive Kuratowski-subdivision oracle in the test suite.
inline bool is_planar(const Graph& g) {
  // quick Euler bound
  const long long n = g.node_count(), m = g.edge_count();
  if (n >= 3 && m > 3 * n - 6) return false;
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) boost::add_edge(u - 1, v - 1, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace ggbench
