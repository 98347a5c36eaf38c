#include "netdecomp/separated.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "decompose_engine.hpp"

namespace netdecomp {

namespace {

Vertex stableId(std::span<const Vertex> ids, Vertex local) {
  return ids.empty() ? local : ids[local];
}

std::string levelPhase(std::string_view base, int level) {
  std::string s(base);
  s += "#L";
  s += std::to_string(level);
  return s;
}

// Maximal independent set by Luby's algorithm: every active vertex draws a
// priority and joins when it beats all active neighbors; winners and their
// neighbors retire. Returns (members, rounds).
std::pair<std::vector<Vertex>, int> lubyMis(const Graph& g, const SimConfig& cfg,
                                            std::span<const Vertex> ids,
                                            std::string_view scope) {
  const int n = g.vertexCount();
  std::vector<char> active(n + 1, 1);
  std::vector<char> inMis(n + 1, 0);
  std::vector<double> prio(n + 1, 0);
  int remaining = n;
  int rounds = 0;
  while (remaining > 0) {
    ++rounds;
    for (Vertex v = 1; v <= n; ++v)
      if (active[v]) prio[v] = rngFor(cfg.seed, scope, stableId(ids, v), rounds).nextUnit();
    std::vector<Vertex> winners;
    for (Vertex v = 1; v <= n; ++v) {
      if (!active[v]) continue;
      bool wins = true;
      for (Vertex u : g.neighbors(v)) {
        if (!active[u]) continue;
        if (prio[u] < prio[v] ||
            (prio[u] == prio[v] && stableId(ids, u) < stableId(ids, v))) {
          wins = false;
          break;
        }
      }
      if (wins) winners.push_back(v);
    }
    for (Vertex v : winners) {
      inMis[v] = 1;
      if (active[v]) {
        active[v] = 0;
        --remaining;
      }
      for (Vertex u : g.neighbors(v)) {
        if (active[u]) {
          active[u] = 0;
          --remaining;
        }
      }
    }
  }
  std::vector<Vertex> members;
  for (Vertex v = 1; v <= n; ++v)
    if (inMis[v]) members.push_back(v);
  return {members, rounds};
}

// Seed-free ruling set: recursively merge halves split on identity bit
// `bit`, dropping right-half rulers within distance < sep of the left half.
std::vector<Vertex> bitMergeRulingSet(const Graph& g, const std::vector<Vertex>& candidates,
                                      int bit, int sep, std::span<const Vertex> ids) {
  if (candidates.size() <= 1 || bit < 0) return candidates;
  std::vector<Vertex> lo, hi;
  for (Vertex v : candidates)
    ((stableId(ids, v) >> bit) & 1 ? hi : lo).push_back(v);
  auto w0 = bitMergeRulingSet(g, lo, bit - 1, sep, ids);
  auto w1 = bitMergeRulingSet(g, hi, bit - 1, sep, ids);
  if (w0.empty()) return w1;
  if (w1.empty()) return w0;
  auto d = bfsDistances(g, std::span<const Vertex>(w0));
  for (Vertex w : w1)
    if (d[w] == -1 || d[w] >= sep) w0.push_back(w);
  std::sort(w0.begin(), w0.end());
  return w0;
}

// Closest-source clustering with ties to the smaller source identity, up to
// the given radius. Returns per-vertex source index (-1 = unreached).
std::vector<int> closestSourceAssignment(const Graph& g, const std::vector<Vertex>& sources,
                                         int radius, std::span<const Vertex> ids) {
  const int n = g.vertexCount();
  std::vector<int> origin(n + 1, -1);
  std::vector<int> depth(n + 1, -1);
  std::vector<Vertex> frontier;
  for (size_t i = 0; i < sources.size(); ++i) {
    origin[sources[i]] = static_cast<int>(i);
    depth[sources[i]] = 0;
    frontier.push_back(sources[i]);
  }
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex u : g.neighbors(v)) {
        if (depth[u] == -1) {
          depth[u] = d + 1;
          origin[u] = origin[v];
          next.push_back(u);
        } else if (depth[u] == d + 1) {
          Vertex cur = stableId(ids, sources[origin[u]]);
          Vertex cand = stableId(ids, sources[origin[v]]);
          if (cand < cur) origin[u] = origin[v];
        }
      }
    }
    frontier = std::move(next);
  }
  return origin;
}

}  // namespace

RulingSetResult rulingSet(const Graph& g, const VertexSet& universe, int sep,
                          RulingMethod method, const SimConfig& cfg,
                          std::span<const Vertex> stableIds, int level) {
  if (sep < 2) throw std::invalid_argument("rulingSet: sep must be >= 2");
  if (universe.empty()) throw std::invalid_argument("rulingSet: empty universe");
  for (Vertex v : universe) g.neighbors(v);

  RulingSetResult out;
  out.set.sep = sep;
  out.set.universe = universe;
  int domBound = 0;

  if (method == RulingMethod::LubyPower) {
    Graph power = sep == 2 ? g : powerGraph(g, sep - 1);
    auto sub = induced(power, universe);
    std::vector<Vertex> subIds(sub.toBase.size(), 0);
    for (size_t i = 1; i < sub.toBase.size(); ++i)
      subIds[i] = stableId(stableIds, sub.toBase[i]);
    auto [localMembers, rounds] =
        lubyMis(sub.graph, cfg, subIds, levelPhase("ruling-set", level));
    std::vector<Vertex> members;
    for (Vertex lv : localMembers) members.push_back(sub.toBase[lv]);
    out.set.members = VertexSet(std::move(members));
    domBound = sep - 1;
    out.ledger.charge(levelPhase("ruling-set/luby-power", level), rounds, sep - 1);
  } else {
    Vertex maxId = 0;
    for (Vertex v : universe) maxId = std::max(maxId, stableId(stableIds, v));
    int bits = 0;
    while ((1 << bits) <= maxId) ++bits;
    auto members = bitMergeRulingSet(g, universe.items(), bits - 1, sep, stableIds);
    out.set.members = VertexSet(std::move(members));
    domBound = sep * std::max(1, bits);
    out.ledger.charge(levelPhase("ruling-set/aglp", level),
                      static_cast<std::int64_t>(std::max(1, bits)) * (sep - 1) + 1);
  }

  // Audit both invariants before returning.
  auto domDist = bfsDistances(g, std::span<const Vertex>(out.set.members.items()));
  int realized = 0;
  for (Vertex u : universe) {
    if (domDist[u] == -1 || domDist[u] > domBound)
      throw std::logic_error("rulingSet: domination audit failed");
    realized = std::max(realized, domDist[u]);
  }
  for (Vertex w : out.set.members) {
    auto d = bfsDistances(g, w);
    for (Vertex w2 : out.set.members)
      if (w2 != w && d[w2] != -1 && d[w2] < sep)
        throw std::logic_error("rulingSet: separation audit failed");
  }
  out.set.dom = realized;
  return out;
}

PartitionResult rsPartitionSplit(const Graph& g, double q, int sep, RulingMethod method,
                                 const SimConfig& cfg, std::span<const Vertex> stableIds,
                                 int level) {
  if (q < 1) throw std::invalid_argument("rsPartition: q must be >= 1");
  if (sep < 3) throw std::invalid_argument("rsPartition: sep must be >= 3");
  const int n = g.vertexCount();

  std::vector<Vertex> high;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) >= q) high.push_back(v);

  PartitionResult out;
  if (high.empty()) {
    std::vector<Vertex> all(n);
    for (Vertex v = 1; v <= n; ++v) all[v - 1] = v;
    out.aSide = VertexSet(std::move(all));
    out.bSide = contract(g, {}, {});
    out.exploreRadius = 1;
    out.ledger.charge(levelPhase("rs-partition", level), 1);
    return out;
  }

  auto rs = rulingSet(g, VertexSet(high), sep, method, cfg, stableIds, level);
  out.ledger.absorb(rs.ledger);

  // Explore far enough to cover the universe while keeping each ruler's
  // whole neighborhood in its own cluster (needed for the |B| <= |V|/q count).
  const int radius = std::max(1, rs.set.dom);
  const auto& rulers = rs.set.members.items();
  auto origin = closestSourceAssignment(g, rulers, radius, stableIds);

  std::vector<std::vector<Vertex>> members(rulers.size());
  std::vector<Vertex> aMembers;
  for (Vertex v = 1; v <= n; ++v) {
    if (origin[v] >= 0)
      members[origin[v]].push_back(v);
    else
      aMembers.push_back(v);
  }
  std::vector<VertexSet> clusters;
  clusters.reserve(members.size());
  for (auto& m : members) clusters.emplace_back(std::move(m));
  out.aSide = VertexSet(std::move(aMembers));
  out.bSide = contract(g, std::move(clusters), rulers);
  out.exploreRadius = radius;
  out.ledger.charge(levelPhase("rs-partition/explore", level), radius);

  for (Vertex v : out.aSide)
    if (g.degree(v) >= q) throw std::logic_error("rsPartition: unclustered high-degree vertex");
  if (static_cast<double>(out.bSide.clusterCount()) > n / q)
    throw std::logic_error("rsPartition: supernode count bound violated");
  return out;
}

DecomposeResult rsDecompose(const Graph& g, const RsDecomposeOptions& opt, const SimConfig& cfg) {
  detail::EngineOptions eo;
  eo.k = opt.k;
  eo.epsilon = opt.epsilon;
  eo.roundBudget = opt.roundBudget;
  eo.variant = opt.variant;
  eo.terminalOnRealized = true;
  auto out = detail::runDecomposition(
      g, eo,
      [&](const Graph& level, double q, const SimConfig& c, std::span<const Vertex> ids,
          int levelIndex) { return rsPartitionSplit(level, q, 3, opt.method, c, ids, levelIndex); },
      cfg);
  out.trace.hDegreeBound = static_cast<int>(std::ceil(out.trace.q));
  return out;
}

DecomposeResult sepDecompose(const Graph& g, const SepDecomposeOptions& opt, const SimConfig& cfg) {
  if (opt.sigma < 2) throw std::invalid_argument("sepDecompose: sigma must be >= 2");
  detail::EngineOptions eo;
  eo.k = opt.k;
  eo.epsilon = opt.epsilon > 0 ? opt.epsilon : 1.0 / opt.k;
  eo.roundBudget = opt.roundBudget;
  eo.labelPerLevel = false;
  auto out = detail::runDecomposition(
      g, eo,
      [&](const Graph& level, double q, const SimConfig& c, std::span<const Vertex> ids,
          int levelIndex) { return sepPartitionSplit(level, q, opt.sigma, c, ids, levelIndex); },
      cfg);
  const int n = g.vertexCount();
  out.trace.hDegreeBound = static_cast<int>(
      std::ceil(cfg.cDegree * out.trace.q * std::log(std::max(2, n))));
  out.decomposition.cert.separation = opt.sigma;

  if (out.decomposition.clusterCount() > 0) {
    auto ch = extractHPartition(out.trace, out.decomposition);
    auto relabel = relabelDecomposition(g, out.decomposition, ch, opt.scheme, eo.epsilon,
                                        opt.roundBudget, cfg, opt.sigma);
    out.decomposition.labels = relabel.labels;
    out.decomposition.cert.labelCount = relabel.labelCount;
    out.ledger.absorb(relabel.ledger);
  }
  return out;
}

DecomposeResult weakSepDecompose(const Graph& g, const DecomposeOptions& opt, int sigma,
                                 const SimConfig& cfg) {
  if (sigma < 2) throw std::invalid_argument("weakSepDecompose: sigma must be >= 2");
  Graph power = sigma == 2 ? g : powerGraph(g, sigma - 1);
  auto out = decompose(power, opt, cfg);
  out.decomposition.cert.diameter = (sigma - 1) * out.decomposition.cert.diameter;
  out.decomposition.cert.separation = sigma;
  return out;
}

LowIntersectingPartition lowIntersecting(const Graph& g, int k, int gamma, const SimConfig& cfg) {
  if (gamma < 1) throw std::invalid_argument("lowIntersecting: gamma must be >= 1");
  SepDecomposeOptions opt;
  opt.k = k;
  opt.sigma = 2 * gamma + 1;
  auto dec = sepDecompose(g, opt, cfg);

  LowIntersectingPartition out;
  out.gamma = gamma;
  out.alpha = (dec.decomposition.cert.diameter + gamma - 1) / gamma;
  out.beta = dec.decomposition.distinctLabelCount();
  out.clusters = dec.decomposition.clusters;
  out.ledger = std::move(dec.ledger);
  out.source = std::move(dec.decomposition);
  return out;
}

SkeletonSpanner skeletonSpanner(const Graph& g, const NetworkDecomposition& q) {
  SkeletonSpanner out;
  std::vector<Edge> edges;

  // One BFS tree per cluster, rooted at the leader.
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    auto sub = induced(g, q.clusters[ci]);
    Vertex root = sub.fromBase[q.leaders[ci]];
    if (root == 0) throw std::invalid_argument("skeletonSpanner: leader outside cluster");
    std::vector<int> parent(sub.graph.vertexCount() + 1, 0);
    std::vector<int> depth(sub.graph.vertexCount() + 1, -1);
    std::deque<Vertex> queue{root};
    depth[root] = 0;
    int reached = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : sub.graph.neighbors(v)) {
        if (depth[u] == -1) {
          depth[u] = depth[v] + 1;
          parent[u] = v;
          ++reached;
          queue.push_back(u);
        }
      }
    }
    if (reached != sub.graph.vertexCount())
      throw std::invalid_argument("skeletonSpanner: cluster induces a disconnected subgraph");
    for (Vertex v = 1; v <= sub.graph.vertexCount(); ++v) {
      if (v == root) continue;
      Vertex a = sub.toBase[v], b = sub.toBase[parent[v]];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }

  // Exactly one (lexicographically least) base edge per adjacent cluster pair.
  auto sg = contract(g, q.clusters, q.leaders);
  std::vector<std::pair<std::pair<int, int>, Edge>> crossing;
  for (const auto& [u, v] : g.edges()) {
    int cu = sg.clusterOf[u], cv = sg.clusterOf[v];
    if (cu == 0 || cv == 0 || cu == cv) continue;
    crossing.push_back({{std::min(cu, cv), std::max(cu, cv)}, {u, v}});
  }
  std::sort(crossing.begin(), crossing.end());
  for (size_t i = 0; i < crossing.size(); ++i)
    if (i == 0 || crossing[i].first != crossing[i - 1].first)
      edges.push_back(crossing[i].second);

  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  // Measure the realized stretch over all base edges.
  Graph spanner = Graph::fromEdges(g.vertexCount(), edges);
  int maxStretch = 0;
  for (const auto& [u, v] : g.edges()) {
    auto d = dist(spanner, u, v);
    if (!d) throw std::logic_error("skeletonSpanner: base edge disconnected in the skeleton");
    maxStretch = std::max(maxStretch, *d);
  }
  out.edges = std::move(edges);
  out.maxStretch = maxStretch;
  return out;
}

}  // namespace netdecomp
