#include "netdecomp/applications.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace netdecomp {

namespace {

VertexSet closedNeighborhood(const Graph& g, const VertexSet& c) {
  std::vector<Vertex> members(c.begin(), c.end());
  for (Vertex v : c)
    for (Vertex u : g.neighbors(v)) members.push_back(u);
  return VertexSet(std::move(members));
}

// Exact minimum dominating set of `cluster` drawn from its closed
// neighborhood, by subset enumeration in increasing size.
VertexSet exactClusterMds(const Graph& g, const VertexSet& cluster) {
  auto candidates = closedNeighborhood(g, cluster);
  if (candidates.size() > kClusterMdsCap)
    throw SizeCapError("approxMds: cluster neighborhood exceeds the exact-solver cap; "
                       "use the greedy solver");
  const auto& cand = candidates.items();
  const int m = static_cast<int>(cand.size());
  const int target = cluster.size();

  std::vector<int> position(g.vertexCount() + 1, -1);
  {
    int idx = 0;
    for (Vertex v : cluster) position[v] = idx++;
  }
  std::vector<std::uint32_t> cover(m);
  for (int i = 0; i < m; ++i) {
    std::uint32_t mask = 0;
    Vertex v = cand[i];
    if (position[v] >= 0) mask |= 1u << position[v];
    for (Vertex u : g.neighbors(v))
      if (position[u] >= 0) mask |= 1u << position[u];
    cover[i] = mask;
  }
  const std::uint32_t all = target == 32 ? ~0u : (1u << target) - 1;

  std::vector<int> pick;
  for (int size = 0; size <= m; ++size) {
    pick.assign(size, 0);
    for (int i = 0; i < size; ++i) pick[i] = i;
    if (size > m) break;
    for (;;) {
      std::uint32_t covered = 0;
      for (int i : pick) covered |= cover[i];
      if (covered == all) {
        std::vector<Vertex> members;
        for (int i : pick) members.push_back(cand[i]);
        return VertexSet(std::move(members));
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("approxMds: cluster admits no dominating set");
}

// The 3-separated decomposition behind the MDS pipelines.
NetworkDecomposition separatedDecompositionFor(const Graph& g, int k, MdsPipeline pipeline,
                                               const SimConfig& cfg, RoundLedger& ledger) {
  if (k == 1) return componentDecomposition(g, 3);
  if (pipeline == MdsPipeline::Randomized) {
    SepDecomposeOptions opt;
    opt.k = k;
    opt.sigma = 3;
    auto dec = sepDecompose(g, opt, cfg);
    ledger.absorb(dec.ledger);
    return std::move(dec.decomposition);
  }
  // Deterministic: ruling-set recursion, then a seed-free recoloring of the
  // squared cluster supergraph to reach separation 3.
  RsDecomposeOptions opt;
  opt.k = k;
  opt.method = RulingMethod::AglpDeterministic;
  opt.variant = DecSmallVariant::AlwaysLinial;
  auto dec = rsDecompose(g, opt, cfg);
  ledger.absorb(dec.ledger);
  if (dec.decomposition.clusterCount() > 0) {
    auto ch = extractHPartition(dec.trace, dec.decomposition);
    auto relabel = relabelDecomposition(g, dec.decomposition, ch, RelabelScheme::ArbLinial,
                                        0.5, kUntilFixpoint, cfg, 3);
    dec.decomposition.labels = relabel.labels;
    dec.decomposition.cert.labelCount = relabel.labelCount;
    ledger.absorb(relabel.ledger);
  }
  dec.decomposition.cert.separation = 3;
  return std::move(dec.decomposition);
}

}  // namespace

double harmonic(int m) {
  double h = 0;
  for (int j = 1; j <= m; ++j) h += 1.0 / j;
  return h;
}

NetworkDecomposition componentDecomposition(const Graph& g, int sigma) {
  NetworkDecomposition q;
  q.cert.separation = sigma;
  q.cert.labelCount = 1;
  for (auto& comp : connectedComponents(g)) {
    auto diam = strongDiameter(g, comp);
    q.cert.diameter = std::max(q.cert.diameter, diam.value_or(0));
    q.leaders.push_back(comp.items().front());
    q.labels.push_back(1);
    q.level.push_back(1);
    q.clusters.push_back(std::move(comp));
  }
  return q;
}

ApproxResult<Coloring> approxMinColoring(const Graph& g, int k, const SimConfig& cfg) {
  ApproxResult<Coloring> out;
  DecomposeOptions opt;
  opt.k = k;
  auto dec = decompose(g, opt, cfg);
  out.ledger.absorb(dec.ledger);
  out.decomposition = std::move(dec.decomposition);
  const auto& q = out.decomposition;

  // Optimal coloring inside every cluster, by the exhaustive oracle.
  std::vector<Coloring> local(q.clusterCount());
  int maxLocalPalette = 1;
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    auto sub = induced(g, q.clusters[ci]);
    local[ci] = bruteOptimalColoring(sub.graph);
    maxLocalPalette = std::max(maxLocalPalette, local[ci].palette);
  }
  out.ledger.charge("min-coloring/local-solve", 2, q.cert.diameter + 1);

  int maxLabel = 0;
  for (int label : q.labels) maxLabel = std::max(maxLabel, label);
  out.value.palette = maxLabel * maxLocalPalette;
  out.value.colors.assign(g.vertexCount() + 1, 0);
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    auto sub = induced(g, q.clusters[ci]);
    for (Vertex lv = 1; lv <= sub.graph.vertexCount(); ++lv)
      out.value.colors[sub.toBase[lv]] =
          (q.labels[ci] - 1) * maxLocalPalette + local[ci].colors[lv];
  }
  if (!isProperColoring(g, out.value))
    throw std::logic_error("approxMinColoring: produced an improper coloring");
  out.bound = q.distinctLabelCount();
  return out;
}

ApproxResult<Coloring> colorTriangleFree(const Graph& g, double epsilon, const SimConfig& cfg) {
  if (epsilon <= 0 || epsilon > 1)
    throw std::invalid_argument("colorTriangleFree: epsilon in (0,1] required");
  if (auto t = findTriangle(g))
    throw std::invalid_argument("colorTriangleFree: graph has a triangle at vertex " +
                                std::to_string((*t)[0]));

  ApproxResult<Coloring> out;
  DecomposeOptions opt;
  opt.k = std::min(2, std::max(1, static_cast<int>(std::log2(std::max(2, g.vertexCount())))));
  auto dec = decompose(g, opt, cfg);
  out.ledger.absorb(dec.ledger);
  out.decomposition = std::move(dec.decomposition);
  const auto& q = out.decomposition;
  out.value.colors.assign(g.vertexCount() + 1, 0);
  out.value.palette = 1;
  if (q.clusterCount() == 0) return out;

  // Every cluster must be a star rooted at its leader with independent
  // leaves; triangle-freeness guarantees the independence.
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    for (Vertex v : q.clusters[ci])
      if (v != q.leaders[ci] && !g.hasEdge(v, q.leaders[ci]))
        throw std::logic_error("colorTriangleFree: non-star cluster");
  }

  auto ch = extractHPartition(dec.trace, q);
  int bandDegree = 0;
  {
    const Graph& sg = ch.quotient.graph;
    std::vector<int> band(sg.vertexCount() + 1, 0);
    for (size_t bi = 0; bi < ch.partition.bands.size(); ++bi)
      for (Vertex v : ch.partition.bands[bi]) band[v] = static_cast<int>(bi) + 1;
    for (Vertex v = 1; v <= sg.vertexCount(); ++v) {
      int fwd = 0;
      for (Vertex u : sg.neighbors(v))
        if (band[u] >= band[v]) ++fwd;
      bandDegree = std::max(bandDegree, fwd);
    }
  }

  const int n = g.vertexCount();
  const int clusterPalette =
      std::max(1, static_cast<int>(std::ceil(bandDegree * std::pow(n, epsilon))));
  std::vector<Vertex> ids(q.clusterCount() + 1, 0);
  for (int i = 0; i < q.clusterCount(); ++i) ids[i + 1] = q.leaders[i];
  auto run = hPartitionRandomColor(ch.quotient.graph, ch.partition, epsilon, cfg,
                                   clusterPalette, ids, "tf-color");
  out.ledger.absorb(run.ledger, q.cert.diameter + 1);

  // Two colors per cluster: one for the center, one for the leaves.
  out.value.palette = 2 * clusterPalette;
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    int c = run.coloring.colors[ci + 1];
    for (Vertex v : q.clusters[ci])
      out.value.colors[v] = v == q.leaders[ci] ? 2 * c - 1 : 2 * c;
  }
  if (!isProperColoring(g, out.value))
    throw std::logic_error("colorTriangleFree: produced an improper coloring");
  out.bound = 2.0 * std::max(1, bandDegree) * std::ceil(std::pow(n, epsilon));
  return out;
}

ApproxResult<Coloring> colorHighGirth(const Graph& g, int girthParam, double epsilon,
                                      const SimConfig& cfg) {
  if (girthParam < 4 || girthParam % 2 != 0)
    throw std::invalid_argument("colorHighGirth: girth parameter must be even and >= 4");
  if (epsilon <= 0 || epsilon > 1)
    throw std::invalid_argument("colorHighGirth: epsilon in (0,1] required");
  auto realized = girth(g);
  if (realized && *realized <= girthParam)
    throw std::invalid_argument("colorHighGirth: girth " + std::to_string(*realized) +
                                " not above " + std::to_string(girthParam));

  const int kg = girthParam / 2;
  const int n = g.vertexCount();
  const int arb = std::max(1, static_cast<int>(std::ceil(std::pow(n, 1.0 / kg))));

  ApproxResult<Coloring> out;
  auto h = peelHPartition(g, arb, epsilon);
  auto run = hPartitionRandomColor(g, h, epsilon, cfg, 0, {}, "girth-color");
  out.ledger.absorb(run.ledger);
  out.value = std::move(run.coloring);
  if (!isProperColoring(g, out.value))
    throw std::logic_error("colorHighGirth: produced an improper coloring");
  out.bound = std::ceil((2.0 + epsilon) * arb * std::pow(n, epsilon));
  return out;
}

ApproxResult<VertexSet> approxMds(const Graph& g, int k, MdsSolver solver, MdsPipeline pipeline,
                                  const SimConfig& cfg) {
  ApproxResult<VertexSet> out;
  out.decomposition = separatedDecompositionFor(g, k, pipeline, cfg, out.ledger);
  const auto& q = out.decomposition;

  std::vector<Vertex> unionMembers;
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    VertexSet dc = solver == MdsSolver::Exact ? exactClusterMds(g, q.clusters[ci])
                                              : greedyClusterMds(g, q.clusters[ci]);
    for (Vertex v : dc) unionMembers.push_back(v);
  }
  out.ledger.charge("mds/local-solve", 2, q.cert.diameter + 1);
  out.value = VertexSet(std::move(unionMembers));

  std::vector<Vertex> everyVertex(g.vertexCount());
  for (Vertex v = 1; v <= g.vertexCount(); ++v) everyVertex[v - 1] = v;
  if (!dominates(g, out.value, VertexSet(std::move(everyVertex))))
    throw std::logic_error("approxMds: output does not dominate the graph");

  out.bound = q.distinctLabelCount();
  if (solver == MdsSolver::Greedy) out.bound *= harmonic(g.maxDegree() + 1);
  return out;
}

VertexSet greedyClusterMds(const Graph& g, const VertexSet& cluster) {
  if (cluster.empty()) throw std::invalid_argument("greedyClusterMds: empty cluster");
  auto candidates = closedNeighborhood(g, cluster);

  std::vector<char> covered(g.vertexCount() + 1, 0);
  std::vector<char> dominated(g.vertexCount() + 1, 0);  // inside closed nbhd of D
  int uncovered = cluster.size();
  std::vector<Vertex> chosen;

  while (uncovered > 0) {
    Vertex best = 0;
    int bestGain = -1;
    bool bestDominated = false;
    for (Vertex v : candidates) {
      int gain = 0;
      if (cluster.contains(v) && !covered[v]) ++gain;
      for (Vertex u : g.neighbors(v))
        if (cluster.contains(u) && !covered[u]) ++gain;
      bool dom = dominated[v];
      // Max gain; ties prefer already-dominated candidates, then smaller id.
      if (gain > bestGain || (gain == bestGain && dom && !bestDominated)) {
        best = v;
        bestGain = gain;
        bestDominated = dom;
      }
    }
    if (bestGain <= 0) throw std::logic_error("greedyClusterMds: no progress");
    chosen.push_back(best);
    if (cluster.contains(best) && !covered[best]) --uncovered;
    covered[best] = 1;
    dominated[best] = 1;
    for (Vertex u : g.neighbors(best)) {
      if (cluster.contains(u) && !covered[u]) --uncovered;
      covered[u] = 1;
      dominated[u] = 1;
    }
  }
  return VertexSet(std::move(chosen));
}

ApproxResult<SpannerValue> approxTSpanner(const Graph& g, int stretch, int k,
                                          const SimConfig& cfg) {
  if (stretch < 2) throw std::invalid_argument("approxTSpanner: stretch must be >= 2");
  if (connectedComponents(g).size() > 1)
    throw std::invalid_argument("approxTSpanner: graph must be connected");

  ApproxResult<SpannerValue> out;
  const int sigma = 2 * stretch - 1;
  if (k == 1) {
    out.decomposition = componentDecomposition(g, sigma);
  } else {
    SepDecomposeOptions opt;
    opt.k = k;
    opt.sigma = sigma;
    auto dec = sepDecompose(g, opt, cfg);
    out.ledger.absorb(dec.ledger);
    out.decomposition = std::move(dec.decomposition);
  }
  const auto& q = out.decomposition;

  auto sg = contract(g, q.clusters, q.leaders);
  std::vector<Edge> chosen;
  std::vector<Edge> crossing;
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    // The ball of radius stretch-1 around the cluster supplies the candidate
    // edges; required are the cluster's own edges.
    auto d = bfsDistances(g, std::span<const Vertex>(q.clusters[ci].items()));
    std::vector<Vertex> ballMembers;
    for (Vertex v = 1; v <= g.vertexCount(); ++v)
      if (d[v] != -1 && d[v] <= stretch - 1) ballMembers.push_back(v);
    VertexSet hat(std::move(ballMembers));

    std::vector<Edge> candidates;
    std::vector<Edge> required;
    for (const auto& [u, v] : g.edges()) {
      if (hat.contains(u) && hat.contains(v)) candidates.emplace_back(u, v);
      if (q.clusters[ci].contains(u) && q.clusters[ci].contains(v)) required.emplace_back(u, v);
    }
    if (static_cast<int>(candidates.size()) > kClusterSpannerCap)
      throw SizeCapError("approxTSpanner: candidate edges exceed the exact-solver cap");
    auto solved = bruteMinSpannerCover(g, candidates, required, stretch);
    for (const auto& e : solved.witness) chosen.push_back(e);
  }
  for (const auto& [u, v] : g.edges())
    if (sg.clusterOf[u] != sg.clusterOf[v]) crossing.emplace_back(u, v);

  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  out.value.intraEdges = static_cast<int>(chosen.size());
  out.value.crossingEdges = static_cast<int>(crossing.size());
  std::vector<Edge> all = chosen;
  all.insert(all.end(), crossing.begin(), crossing.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  out.value.edges = std::move(all);

  out.ledger.charge("spanner/local-solve", 2, q.cert.diameter + 1);
  out.ledger.charge("spanner/explore", stretch);
  out.bound = q.distinctLabelCount();
  return out;
}

}  // namespace netdecomp
