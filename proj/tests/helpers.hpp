#pragma once

#include <random>
#include <vector>

#include "mcd/generate.hpp"
#include "mcd/graph.hpp"

namespace mcd::test {

// Small named fixtures used across suites.
inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

// K1,k with center 0 and leaves 1..k.
inline Graph star_graph(int k) {
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.push_back({0, i});
  return Graph(k + 1, e);
}

// Random connected graph: random labeled tree plus `extra` distinct edges.
inline Graph random_connected_graph(int n, int extra, std::mt19937_64& rng) {
  GenParams p;
  p.n = n;
  p.requests = 0;
  p.extra_edges = extra;
  return generate_instance(GenKind::TreeGraph, p, rng()).graph;
}

}  // namespace mcd::test
