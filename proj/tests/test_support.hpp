#pragma once

// Shared helpers for the test suites.

#include <vector>

#include "netdecomp/generators.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp::testsupport {

inline SimConfig seeded(std::uint64_t seed) {
  SimConfig cfg;
  cfg.seed = seed;
  return cfg;
}

/// G(n,p) with a test-local stream so suites can vary instances cheaply.
inline Graph randomGraph(int n, double p, std::uint64_t seed) {
  return genGnp(n, p, seeded(seed));
}

/// Random bipartite graph: sides 1..left and left+1..left+right, each cross
/// pair drawn independently.
inline Graph randomBipartite(int left, int right, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  for (int u = 1; u <= left; ++u)
    for (int v = left + 1; v <= left + right; ++v)
      if (rngFor(seed, "test-bipartite", u, v).bernoulli(p)) edges.emplace_back(u, v);
  return Graph::fromEdges(left + right, edges);
}

/// The Petersen graph: outer 5-cycle 1..5, inner 5-star 6..10, spokes.
inline Graph petersen() {
  std::vector<Edge> edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                          {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6},
                          {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10}};
  return Graph::fromEdges(10, edges);
}

inline VertexSet wholeVertexSet(const Graph& g) {
  std::vector<Vertex> all(g.vertexCount());
  for (Vertex v = 1; v <= g.vertexCount(); ++v) all[v - 1] = v;
  return VertexSet(std::move(all));
}

}  // namespace netdecomp::testsupport
