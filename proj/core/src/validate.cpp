#include "netdecomp/validate.hpp"

#include <algorithm>
#include <set>

namespace netdecomp {

namespace {

std::string pairWitness(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

ValidationReport validateDecomposition(const Graph& g, const NetworkDecomposition& q,
                                       DiameterMode mode) {
  ValidationReport report;
  const int n = g.vertexCount();

  std::vector<int> owner(n + 1, 0);
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    if (q.clusters[ci].empty()) {
      report.fail("partition-cover", "empty cluster " + std::to_string(ci));
      continue;
    }
    for (Vertex v : q.clusters[ci]) {
      if (v < 1 || v > n) {
        report.fail("partition-cover", "vertex out of range " + std::to_string(v));
        continue;
      }
      if (owner[v] != 0)
        report.fail("partition-cover", "vertex in two clusters: " + std::to_string(v));
      owner[v] = ci + 1;
    }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (owner[v] == 0) report.fail("partition-cover", "uncovered vertex " + std::to_string(v));

  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    auto diam = mode == DiameterMode::Strong ? strongDiameter(g, q.clusters[ci])
                                             : weakDiameter(g, q.clusters[ci]);
    if (!diam) {
      report.fail("cluster-diameter", "cluster " + std::to_string(ci) + " disconnected");
    } else if (*diam > q.cert.diameter) {
      report.fail("cluster-diameter", "cluster " + std::to_string(ci) + " diameter " +
                                          std::to_string(*diam) + " > " +
                                          std::to_string(q.cert.diameter));
    }
  }

  // Label properness on the contracted supergraph.
  if (report.passed) {
    auto sg = contract(g, q.clusters, q.leaders);
    for (const auto& [a, b] : sg.graph.edges())
      if (q.labels[a - 1] == q.labels[b - 1])
        report.fail("proper-labels", "adjacent clusters share label: " + pairWitness(a, b));
  }

  std::set<int> used(q.labels.begin(), q.labels.end());
  if (static_cast<int>(used.size()) > q.cert.labelCount)
    report.fail("label-count", std::to_string(used.size()) + " labels > cert " +
                                   std::to_string(q.cert.labelCount));
  for (int label : q.labels)
    if (label < 1) report.fail("label-count", "non-positive label " + std::to_string(label));

  // Equal-label clusters must be >= sigma apart (sigma = 2 is properness).
  if (q.cert.separation > 2) {
    for (int ci = 0; ci < q.clusterCount(); ++ci) {
      auto d = bfsDistances(g, std::span<const Vertex>(q.clusters[ci].items()));
      for (int cj = ci + 1; cj < q.clusterCount(); ++cj) {
        if (q.labels[ci] != q.labels[cj]) continue;
        for (Vertex v : q.clusters[cj]) {
          if (d[v] != -1 && d[v] < q.cert.separation) {
            report.fail("separation", "clusters " + pairWitness(ci, cj) + " at distance " +
                                          std::to_string(d[v]));
            break;
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validateHPartition(const Graph& g, const HPartition& h) {
  ValidationReport report;
  const int n = g.vertexCount();
  std::vector<int> band(n + 1, 0);
  for (size_t bi = 0; bi < h.bands.size(); ++bi) {
    for (Vertex v : h.bands[bi]) {
      if (v < 1 || v > n) {
        report.fail("bands-partition", "vertex out of range " + std::to_string(v));
        continue;
      }
      if (band[v] != 0) report.fail("bands-partition", "vertex in two bands: " + std::to_string(v));
      band[v] = static_cast<int>(bi) + 1;
    }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (band[v] == 0) report.fail("bands-partition", "uncovered vertex " + std::to_string(v));
  if (!report.passed) return report;

  for (Vertex v = 1; v <= n; ++v) {
    int forward = 0;
    for (Vertex u : g.neighbors(v))
      if (band[u] >= band[v]) ++forward;
    if (forward > h.degreeBound)
      report.fail("forward-degree", "vertex " + std::to_string(v) + " has " +
                                        std::to_string(forward) + " forward neighbors > " +
                                        std::to_string(h.degreeBound));
  }
  return report;
}

ValidationReport validateRulingSet(const Graph& g, const RulingSet& rs) {
  ValidationReport report;
  for (Vertex w : rs.members) {
    auto d = bfsDistances(g, w);
    for (Vertex w2 : rs.members)
      if (w2 > w && d[w2] != -1 && d[w2] < rs.sep)
        report.fail("pairwise-separation", pairWitness(w, w2) + " at distance " +
                                               std::to_string(d[w2]));
  }
  if (!rs.members.empty()) {
    auto d = bfsDistances(g, std::span<const Vertex>(rs.members.items()));
    for (Vertex u : rs.universe)
      if (d[u] == -1 || d[u] > rs.dom)
        report.fail("domination", "universe vertex " + std::to_string(u) + " beyond radius");
  } else if (!rs.universe.empty()) {
    report.fail("domination", "empty ruling set with non-empty universe");
  }
  return report;
}

StretchReport validateStretch(const Graph& g, std::span<const Edge> spannerEdges, int stretch) {
  StretchReport out;
  for (const auto& [u, v] : spannerEdges) {
    if (!g.hasEdge(u, v)) {
      out.report.fail("subgraph", "spanner edge not in graph: " + pairWitness(u, v));
      return out;
    }
  }
  Graph h = Graph::fromEdges(g.vertexCount(), spannerEdges);
  for (const auto& [u, v] : g.edges()) {
    auto d = dist(h, u, v);
    if (!d) {
      out.report.fail("stretch", "edge " + pairWitness(u, v) + " disconnected in spanner");
      continue;
    }
    out.maxStretch = std::max(out.maxStretch, *d);
    if (*d > stretch)
      out.report.fail("stretch", "edge " + pairWitness(u, v) + " stretched to " +
                                     std::to_string(*d));
  }
  return out;
}

ValidationReport validateLowIntersecting(const Graph& g, const LowIntersectingPartition& p) {
  ValidationReport report;
  const int n = g.vertexCount();
  std::vector<int> owner(n + 1, 0);
  for (size_t ci = 0; ci < p.clusters.size(); ++ci)
    for (Vertex v : p.clusters[ci]) owner[v] = static_cast<int>(ci) + 1;

  for (size_t ci = 0; ci < p.clusters.size(); ++ci) {
    auto diam = strongDiameter(g, p.clusters[ci]);
    if (!diam || *diam > p.alpha * p.gamma)
      report.fail("cluster-diameter",
                  "cluster " + std::to_string(ci) + " exceeds alpha*gamma");
  }
  for (Vertex v = 1; v <= n; ++v) {
    auto b = ball(g, v, p.gamma);
    std::set<int> touched;
    for (Vertex u : b)
      if (owner[u] != 0) touched.insert(owner[u]);
    if (static_cast<int>(touched.size()) > p.beta)
      report.fail("ball-intersection", "ball around " + std::to_string(v) + " meets " +
                                           std::to_string(touched.size()) + " clusters > beta");
  }
  return report;
}

}  // namespace netdecomp
