#include "netdecomp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
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

}  // namespace

int NetworkDecomposition::distinctLabelCount() const {
  std::set<int> used(labels.begin(), labels.end());
  return static_cast<int>(used.size());
}

DecSmallResult decSmall(const Graph& g, int nOrig, int degreeBound, double epsilon,
                        int roundBudget, DecSmallVariant variant, const SimConfig& cfg,
                        std::span<const Vertex> stableIds, int level) {
  if (degreeBound < 0) throw std::invalid_argument("decSmall: negative degree bound");
  if (g.maxDegree() > degreeBound)
    throw std::invalid_argument("decSmall: graph degree exceeds the stated bound");
  bool useLinial;
  switch (variant) {
    case DecSmallVariant::AlwaysLinial: useLinial = true; break;
    case DecSmallVariant::AlwaysRandom: useLinial = false; break;
    default: useLinial = degreeBound <= std::pow(nOrig, epsilon); break;
  }
  DecSmallResult out;
  if (useLinial || degreeBound == 0) {
    auto run = linialColor(g, roundBudget);
    out.coloring = std::move(run.coloring);
    out.ledger.absorb(run.ledger);
  } else {
    int palette = std::max(1, static_cast<int>(std::ceil(degreeBound * std::pow(nOrig, epsilon))));
    auto run = randomColorWithPalette(g, palette, cfg, stableIds,
                                      levelPhase("random-color", level));
    out.coloring = std::move(run.coloring);
    out.ledger.absorb(run.ledger);
  }
  return out;
}

PartitionResult partitionSplit(const Graph& g, double q, const SimConfig& cfg,
                               std::span<const Vertex> stableIds, int level) {
  return sepPartitionSplit(g, q, 2, cfg, stableIds, level);
}

PartitionResult sepPartitionSplit(const Graph& g, double q, int sigma, const SimConfig& cfg,
                                  std::span<const Vertex> stableIds, int level) {
  if (q < 1) throw std::invalid_argument("partition: q must be >= 1");
  if (sigma < 2) throw std::invalid_argument("partition: sigma must be >= 2");
  const int n = g.vertexCount();
  const int radius = sigma - 1;

  std::vector<Vertex> dominators;
  for (Vertex v = 1; v <= n; ++v)
    if (rngFor(cfg.seed, "partition", stableId(stableIds, v), level).bernoulli(1.0 / q))
      dominators.push_back(v);

  // Closest-originator assignment with ties to the smaller identity:
  // propagate (distance, origin id) level by level up to the explore radius.
  std::vector<int> originIndex(n + 1, -1);
  std::vector<int> depth(n + 1, -1);
  std::vector<Vertex> frontier;
  for (size_t i = 0; i < dominators.size(); ++i) {
    originIndex[dominators[i]] = static_cast<int>(i);
    depth[dominators[i]] = 0;
    frontier.push_back(dominators[i]);
  }
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex u : g.neighbors(v)) {
        if (depth[u] == -1) {
          depth[u] = d + 1;
          originIndex[u] = originIndex[v];
          next.push_back(u);
        } else if (depth[u] == d + 1) {
          // Equal distance: keep the origin with the smaller identity.
          Vertex cur = stableId(stableIds, dominators[originIndex[u]]);
          Vertex cand = stableId(stableIds, dominators[originIndex[v]]);
          if (cand < cur) originIndex[u] = originIndex[v];
        }
      }
    }
    frontier = std::move(next);
  }

  PartitionResult out;
  out.exploreRadius = radius;
  std::vector<std::vector<Vertex>> members(dominators.size());
  std::vector<Vertex> aMembers;
  for (Vertex v = 1; v <= n; ++v) {
    if (originIndex[v] >= 0)
      members[originIndex[v]].push_back(v);
    else
      aMembers.push_back(v);
  }
  out.aSide = VertexSet(std::move(aMembers));
  std::vector<VertexSet> clusters;
  clusters.reserve(members.size());
  for (auto& m : members) clusters.emplace_back(std::move(m));
  out.bSide = contract(g, std::move(clusters), dominators);
  out.ledger.charge(levelPhase(sigma == 2 ? "partition" : "sep-partition", level), 1 + radius);
  return out;
}

namespace detail {

DecomposeResult runDecomposition(const Graph& g, const EngineOptions& opt, const SplitFn& split,
                                 const SimConfig& cfg) {
  const int n = g.vertexCount();
  if (opt.k < 1 || (opt.k > 1 && opt.k > std::log2(std::max(2, n))))
    throw std::invalid_argument("decompose: k out of range");
  if (cfg.cThreshold < 1 || cfg.cDegree < 1)
    throw std::invalid_argument("decompose: config constants must be >= 1");

  DecomposeResult out;
  out.trace.base = g;
  const double q = std::pow(n, 1.0 / opt.k);
  out.trace.q = q;
  const double threshold = 2.0 * cfg.cThreshold * q * std::log(std::max(2, n));

  Graph cur = g;
  std::vector<VertexSet> baseClusters;
  std::vector<Vertex> baseLeaders(1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    baseClusters.push_back(VertexSet({v}));
    baseLeaders.push_back(v);
  }
  // baseClusters is 0-based per level vertex; baseLeaders is 1-based.

  double sBound = n;
  long diamProduct = 1;
  int nodeDiam = 0;

  for (int level = 1;; ++level) {
    const int curN = cur.vertexCount();
    if (curN == 0) break;
    const std::int64_t mult = nodeDiam + 1;

    DecomposeLevel rec;
    rec.sBound = sBound;
    rec.vertexCount = curN;
    rec.nodeDiameter = nodeDiam;
    rec.levelGraph = cur;
    rec.nodeIds.assign(baseLeaders.begin(), baseLeaders.end());
    std::span<const Vertex> ids(rec.nodeIds);

    const bool terminal = level == opt.k ||
                          (opt.terminalOnRealized ? curN <= static_cast<int>(std::ceil(q))
                                                  : sBound <= threshold);
    if (terminal) {
      rec.terminal = true;
      rec.aSide = [&] {
        std::vector<Vertex> all(curN);
        for (int i = 0; i < curN; ++i) all[i] = i + 1;
        return VertexSet(std::move(all));
      }();
      rec.aMaxDegree = cur.maxDegree();
      if (opt.labelPerLevel) {
        auto ds = decSmall(cur, n, cur.maxDegree(), opt.epsilon, opt.roundBudget, opt.variant,
                           cfg, ids, level);
        out.ledger.absorb(ds.ledger, mult);
        rec.palette = ds.coloring.palette;
        for (Vertex v = 1; v <= curN; ++v) rec.colors.push_back(ds.coloring.colors[v]);
      } else {
        out.ledger.charge(levelPhase("decompose-collect", level), 1, mult);
        rec.palette = 0;
        rec.colors.assign(curN, 0);
      }
      for (Vertex v = 1; v <= curN; ++v) {
        rec.clusters.push_back(baseClusters[v - 1]);
        rec.leaders.push_back(baseLeaders[v]);
      }
      out.trace.levels.push_back(std::move(rec));
      break;
    }

    auto sp = split(cur, q, cfg, ids, level);
    out.ledger.absorb(sp.ledger, mult);
    rec.aSide = sp.aSide;
    rec.exploreRadius = sp.bSide.clusterCount() > 0 ? sp.exploreRadius : 0;
    for (const auto& c : sp.bSide.clusters) rec.bClusters.push_back(c);

    if (!sp.aSide.empty()) {
      auto sub = induced(cur, sp.aSide);
      rec.aMaxDegree = sub.graph.maxDegree();
      std::vector<Vertex> subIds(sub.toBase.size());
      for (size_t i = 1; i < sub.toBase.size(); ++i) subIds[i] = baseLeaders[sub.toBase[i]];
      if (opt.labelPerLevel) {
        auto ds = decSmall(sub.graph, n, rec.aMaxDegree, opt.epsilon, opt.roundBudget,
                           opt.variant, cfg, subIds, level);
        out.ledger.absorb(ds.ledger, mult);
        rec.palette = ds.coloring.palette;
        for (Vertex lv = 1; lv <= sub.graph.vertexCount(); ++lv)
          rec.colors.push_back(ds.coloring.colors[lv]);
      } else {
        out.ledger.charge(levelPhase("decompose-collect", level), 1, mult);
        rec.palette = 0;
        rec.colors.assign(sp.aSide.size(), 0);
      }
      for (Vertex a : sp.aSide) {
        rec.clusters.push_back(baseClusters[a - 1]);
        rec.leaders.push_back(baseLeaders[a]);
      }
    }

    // Recursion floor: nothing was clustered, so deeper levels are empty and
    // the realized depth (and diameter bound) stay as they are.
    if (sp.bSide.clusterCount() == 0) {
      out.trace.levels.push_back(std::move(rec));
      break;
    }

    // Advance to the contracted cluster side.
    std::vector<VertexSet> nextClusters;
    std::vector<Vertex> nextLeaders(1, 0);
    int nextDiam = 0;
    for (size_t j = 0; j < sp.bSide.clusters.size(); ++j) {
      std::vector<Vertex> merged;
      for (Vertex m : sp.bSide.clusters[j])
        for (Vertex b : baseClusters[m - 1]) merged.push_back(b);
      nextClusters.emplace_back(std::move(merged));
      nextLeaders.push_back(baseLeaders[sp.bSide.leaders[j]]);
      auto diam = strongDiameter(g, nextClusters.back());
      if (!diam)
        throw std::logic_error("decompose: supernode cluster disconnected in the base graph");
      nextDiam = std::max(nextDiam, *diam);
    }
    out.trace.levels.push_back(std::move(rec));

    cur = sp.bSide.graph;
    baseClusters = std::move(nextClusters);
    baseLeaders = std::move(nextLeaders);
    nodeDiam = nextDiam;
    diamProduct *= 2L * sp.exploreRadius + 1;
    sBound = opt.terminalOnRealized ? cur.vertexCount() : sBound / q;
  }

  // Assemble labels: per-level palettes occupy disjoint blocks, earlier
  // levels first. In asymptotic mode the blocks have the fixed stride
  // gamma * floor(n^{2/k} * log2(n)^2), which must fit every realized palette.
  long stride = 0;
  if (cfg.gammaMode == GammaMode::Asymptotic) {
    const double log2n = std::log2(std::max(2, n));
    stride = static_cast<long>(kAsymptoticStrideGamma *
                               std::floor(std::pow(n, 2.0 / opt.k) * log2n * log2n));
  }
  auto& q0 = out.decomposition;
  long offset = 0;
  long totalPalette = 0;
  for (size_t li = 0; li < out.trace.levels.size(); ++li) {
    const auto& rec = out.trace.levels[li];
    if (cfg.gammaMode == GammaMode::Asymptotic && opt.labelPerLevel && rec.palette > stride)
      throw std::runtime_error("decompose: realized palette exceeds the asymptotic stride");
    for (size_t ci = 0; ci < rec.clusters.size(); ++ci) {
      q0.clusters.push_back(rec.clusters[ci]);
      q0.leaders.push_back(rec.leaders[ci]);
      q0.level.push_back(static_cast<int>(li) + 1);
      q0.labels.push_back(opt.labelPerLevel ? static_cast<int>(offset) + rec.colors[ci] : 0);
    }
    offset += cfg.gammaMode == GammaMode::Asymptotic ? stride : rec.palette;
    totalPalette += cfg.gammaMode == GammaMode::Asymptotic ? stride : rec.palette;
    if (offset > std::numeric_limits<int>::max())
      throw std::runtime_error("decompose: label range overflow");
  }
  q0.cert.diameter = static_cast<int>(diamProduct - 1);
  q0.cert.labelCount =
      opt.labelPerLevel ? static_cast<int>(std::min<long>(totalPalette,
                                                          std::numeric_limits<int>::max()))
                        : 0;
  q0.cert.separation = 2;
  for (const auto& rec : out.trace.levels)
    q0.realizedDom = std::max(q0.realizedDom, rec.exploreRadius);
  return out;
}

}  // namespace detail

DecomposeResult decompose(const Graph& g, const DecomposeOptions& opt, const SimConfig& cfg) {
  detail::EngineOptions eo;
  eo.k = opt.k;
  eo.epsilon = opt.epsilon;
  eo.roundBudget = opt.roundBudget;
  eo.variant = opt.variant;
  auto out = detail::runDecomposition(
      g, eo,
      [](const Graph& level, double q, const SimConfig& c, std::span<const Vertex> ids,
         int levelIndex) { return partitionSplit(level, q, c, ids, levelIndex); },
      cfg);
  const int n = g.vertexCount();
  out.trace.hDegreeBound = static_cast<int>(
      std::ceil(cfg.cDegree * out.trace.q * std::log(std::max(2, n))));
  return out;
}

ClusterHPartition extractHPartition(const DecomposeTrace& trace, const NetworkDecomposition& q) {
  if (trace.levels.empty() || q.clusters.empty())
    throw std::invalid_argument("extractHPartition: incomplete trace");
  ClusterHPartition out;
  out.quotient = contract(trace.base, q.clusters, q.leaders);
  const int depth = trace.depth();
  std::vector<std::vector<Vertex>> bands(depth);
  for (int ci = 0; ci < q.clusterCount(); ++ci) {
    int lv = q.level[ci];
    if (lv < 1 || lv > depth) throw std::invalid_argument("extractHPartition: bad level tag");
    bands[lv - 1].push_back(ci + 1);
  }
  for (auto& b : bands)
    if (!b.empty()) out.partition.bands.emplace_back(std::move(b));
  out.partition.degreeBound = trace.hDegreeBound;
  return out;
}

RelabelResult relabelDecomposition(const Graph& g, const NetworkDecomposition& q,
                                   const ClusterHPartition& h, RelabelScheme scheme,
                                   double epsilon, int roundBudget, const SimConfig& cfg,
                                   int sigma) {
  if (sigma < 2) throw std::invalid_argument("relabel: sigma must be >= 2");
  if (h.quotient.clusterCount() != q.clusterCount())
    throw std::invalid_argument("relabel: decomposition and H-partition disagree");
  const Graph& base = h.quotient.graph;
  Graph power = sigma == 2 ? base : powerGraph(base, sigma - 1);

  std::vector<Vertex> ids(q.clusterCount() + 1, 0);
  for (int i = 0; i < q.clusterCount(); ++i) ids[i + 1] = q.leaders[i];

  ColorRun run;
  if (scheme == RelabelScheme::ArbLinial) {
    run = arbLinialColor(power, h.partition, roundBudget, ids);
  } else {
    int palette = std::max(
        1, static_cast<int>(std::ceil(h.partition.degreeBound *
                                      std::pow(g.vertexCount(), epsilon))));
    run = hPartitionRandomColor(power, h.partition, epsilon, cfg, palette, ids, "h-random");
  }

  RelabelResult out;
  out.labelCount = run.coloring.palette;
  out.labels.resize(q.clusterCount());
  for (int i = 0; i < q.clusterCount(); ++i) out.labels[i] = run.coloring.colors[i + 1];
  std::int64_t mult = static_cast<std::int64_t>(sigma - 1) * (q.cert.diameter + 1);
  out.ledger.absorb(run.ledger, mult);
  return out;
}

}  // namespace netdecomp
