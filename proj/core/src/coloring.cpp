#include "netdecomp/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace netdecomp {

namespace {

Vertex stableId(std::span<const Vertex> ids, Vertex local) {
  return ids.empty() ? local : ids[local];
}

// Applies one reduction round. Exclusions come from excludedOf(v), a list of
// neighbors whose sets must be avoided.
template <typename ExcludedFn>
Coloring reduceOnce(const Graph& g, const Coloring& phi, const UnionFreeFamily& family,
                    ExcludedFn&& excludedOf) {
  Coloring next;
  next.palette = family.groundSize;
  next.colors.assign(g.vertexCount() + 1, 0);
  std::vector<char> blocked(family.groundSize + 1, 0);
  std::vector<int> touched;
  for (Vertex v = 1; v <= g.vertexCount(); ++v) {
    touched.clear();
    for (Vertex u : excludedOf(v)) {
      for (int e : family.sets[phi.colors[u] - 1]) {
        if (!blocked[e]) {
          blocked[e] = 1;
          touched.push_back(e);
        }
      }
    }
    int chosen = 0;
    for (int e : family.sets[phi.colors[v] - 1]) {
      if (!blocked[e]) {
        chosen = e;
        break;
      }
    }
    for (int e : touched) blocked[e] = 0;
    if (chosen == 0)
      throw std::runtime_error("color reduction: no free element (family too small)");
    next.colors[v] = chosen;
  }
  return next;
}

// Shared driver for iterated reductions; exclusion sets and the union-free
// delta are the only difference between the plain and oriented variants.
template <typename ExcludedFn>
ColorRun iteratedReduction(const Graph& g, int roundBudget, int delta,
                           ExcludedFn&& excludedOf, const char* phase) {
  ColorRun run;
  const int n = g.vertexCount();
  if (n == 0) {
    run.ledger.charge(phase, 0);
    return run;
  }
  if (delta == 0) {
    run.coloring.palette = 1;
    run.coloring.colors.assign(n + 1, 1);
    run.coloring.colors[0] = 0;
    run.ledger.charge(phase, 0);
    return run;
  }
  Coloring cur;
  cur.palette = n;
  cur.colors.resize(n + 1);
  for (Vertex v = 1; v <= n; ++v) cur.colors[v] = v;

  int rounds = 0;
  for (;;) {
    if (roundBudget != kUntilFixpoint && rounds >= roundBudget) break;
    auto family = buildUnionFree(std::max(cur.palette, delta + 1), delta);
    if (roundBudget == kUntilFixpoint && family.groundSize >= cur.palette) break;
    cur = reduceOnce(g, cur, family, excludedOf);
    ++rounds;
  }
  run.coloring = std::move(cur);
  run.ledger.charge(phase, rounds);
  return run;
}

}  // namespace

bool isProperColoring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertexCount() + 1) return false;
  for (Vertex v = 1; v <= g.vertexCount(); ++v) {
    if (c.colors[v] < 1 || c.colors[v] > c.palette) return false;
    for (Vertex u : g.neighbors(v))
      if (c.colors[u] == c.colors[v]) return false;
  }
  return true;
}

int distinctColors(const Coloring& c) {
  std::set<int> used(c.colors.begin() + std::min<size_t>(1, c.colors.size()), c.colors.end());
  used.erase(0);
  return static_cast<int>(used.size());
}

Coloring linialReduce(const Graph& g, const Coloring& phi, const UnionFreeFamily& family) {
  if (!isProperColoring(g, phi))
    throw std::invalid_argument("linialReduce: input coloring not proper");
  if (family.familySize < phi.palette)
    throw std::invalid_argument("linialReduce: family smaller than palette");
  if (family.delta < g.maxDegree())
    throw std::invalid_argument("linialReduce: family delta below max degree");
  return reduceOnce(g, phi, family, [&](Vertex v) { return g.neighbors(v); });
}

ColorRun linialColor(const Graph& g, int roundBudget) {
  if (roundBudget < 0) throw std::invalid_argument("linialColor: bad round budget");
  return iteratedReduction(
      g, roundBudget, g.maxDegree(), [&](Vertex v) { return g.neighbors(v); }, "linial");
}

ColorRun randomColor(const Graph& g, double epsilon, const SimConfig& cfg) {
  if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("randomColor: epsilon in (0,1] required");
  const int delta = g.maxDegree();
  const int palette =
      std::max(1, static_cast<int>(std::ceil(delta * std::pow(g.vertexCount(), epsilon))));
  return randomColorWithPalette(g, palette, cfg);
}

ColorRun randomColorWithPalette(const Graph& g, int palette, const SimConfig& cfg,
                                std::span<const Vertex> stableIds, std::string_view scope) {
  if (palette < 1) throw std::invalid_argument("randomColor: palette must be >= 1");
  ColorRun run;
  const int n = g.vertexCount();
  run.coloring.palette = palette;
  run.coloring.colors.assign(n + 1, 0);
  if (n == 0) {
    run.ledger.charge(std::string(scope), 0);
    return run;
  }

  std::vector<int> toss(n + 1, 0);
  int uncolored = n;
  int round = 0;
  auto& colors = run.coloring.colors;
  std::vector<char> seen(palette + 1, 0);
  while (uncolored > 0) {
    ++round;
    for (Vertex v = 1; v <= n; ++v) {
      if (colors[v] != 0) continue;
      // A vertex whose finalized neighbors already block the whole palette
      // can never succeed; surface that instead of spinning.
      std::fill(seen.begin(), seen.end(), 0);
      int blockedCount = 0;
      for (Vertex u : g.neighbors(v)) {
        int c = colors[u];
        if (c != 0 && !seen[c]) {
          seen[c] = 1;
          ++blockedCount;
        }
      }
      if (blockedCount >= palette)
        throw std::runtime_error("randomColor: palette exhausted at a vertex");
      toss[v] = rngFor(cfg.seed, scope, stableId(stableIds, v), round).nextInt(palette) + 1;
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (colors[v] != 0) continue;
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        int held = colors[u] != 0 ? colors[u] : toss[u];
        if (held == toss[v]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        colors[v] = -toss[v];  // mark; committed after the sweep
        --uncolored;
      }
    }
    for (Vertex v = 1; v <= n; ++v)
      if (colors[v] < 0) colors[v] = -colors[v];
  }
  run.ledger.charge(std::string(scope), round);
  return run;
}

int HPartition::bandOf(Vertex v) const {
  for (size_t i = 0; i < bands.size(); ++i)
    if (bands[i].contains(v)) return static_cast<int>(i) + 1;
  return 0;
}

ColorRun arbLinialColor(const Graph& g, const HPartition& h, int roundBudget,
                        std::span<const Vertex> stableIds) {
  const int n = g.vertexCount();
  std::vector<int> band(n + 1, 0);
  int assigned = 0;
  for (size_t i = 0; i < h.bands.size(); ++i) {
    for (Vertex v : h.bands[i]) {
      if (v < 1 || v > n || band[v] != 0)
        throw std::invalid_argument("arbLinialColor: bands do not partition the graph");
      band[v] = static_cast<int>(i) + 1;
      ++assigned;
    }
  }
  if (assigned != n)
    throw std::invalid_argument("arbLinialColor: bands do not cover the graph");

  // Edges point to the later band; within a band, to the larger id.
  std::vector<std::vector<Vertex>> parents(n + 1);
  int maxParents = 0;
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      bool parent = band[u] > band[v] ||
                    (band[u] == band[v] && stableId(stableIds, u) > stableId(stableIds, v));
      if (parent) parents[v].push_back(u);
    }
    maxParents = std::max(maxParents, static_cast<int>(parents[v].size()));
  }
  return iteratedReduction(
      g, roundBudget, maxParents,
      [&](Vertex v) -> const std::vector<Vertex>& { return parents[v]; }, "arb-linial");
}

ColorRun hPartitionRandomColor(const Graph& g, const HPartition& h, double epsilon,
                               const SimConfig& cfg, int paletteOverride,
                               std::span<const Vertex> stableIds, std::string_view scope) {
  if (paletteOverride == 0 && (epsilon <= 0 || epsilon > 1))
    throw std::invalid_argument("hPartitionRandomColor: epsilon in (0,1] required");
  const int n = g.vertexCount();
  const int palette =
      paletteOverride > 0
          ? paletteOverride
          : std::max(1, static_cast<int>(std::ceil(h.degreeBound * std::pow(n, epsilon))));

  ColorRun run;
  run.coloring.palette = palette;
  run.coloring.colors.assign(n + 1, 0);
  auto& colors = run.coloring.colors;

  std::vector<int> band(n + 1, 0);
  int assigned = 0;
  for (size_t i = 0; i < h.bands.size(); ++i) {
    for (Vertex v : h.bands[i]) {
      if (v < 1 || v > n || band[v] != 0)
        throw std::invalid_argument("hPartitionRandomColor: bands do not partition the graph");
      band[v] = static_cast<int>(i) + 1;
      ++assigned;
    }
  }
  if (assigned != n)
    throw std::invalid_argument("hPartitionRandomColor: bands do not cover the graph");

  std::vector<int> toss(n + 1, 0);
  std::vector<char> seen(palette + 1, 0);
  int round = 0;
  for (int bi = static_cast<int>(h.bands.size()); bi >= 1; --bi) {
    const auto& members = h.bands[bi - 1].items();
    int uncolored = static_cast<int>(members.size());
    while (uncolored > 0) {
      ++round;
      for (Vertex v : members) {
        if (colors[v] != 0) continue;
        std::fill(seen.begin(), seen.end(), 0);
        int blockedCount = 0;
        for (Vertex u : g.neighbors(v)) {
          int c = colors[u];
          if (c != 0 && !seen[c]) {
            seen[c] = 1;
            ++blockedCount;
          }
        }
        if (blockedCount >= palette)
          throw std::runtime_error("hPartitionRandomColor: palette exhausted at a vertex");
        toss[v] = rngFor(cfg.seed, scope, stableId(stableIds, v), round).nextInt(palette) + 1;
      }
      for (Vertex v : members) {
        if (colors[v] != 0) continue;
        bool ok = true;
        for (Vertex u : g.neighbors(v)) {
          int held = colors[u];
          if (held == 0 && band[u] == bi) held = toss[u];
          if (held != 0 && held == toss[v]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          colors[v] = -toss[v];
          --uncolored;
        }
      }
      for (Vertex v : members)
        if (colors[v] < 0) colors[v] = -colors[v];
    }
  }
  run.ledger.charge(std::string(scope), round);
  return run;
}

HPartition peelHPartition(const Graph& g, int arboricityBound, double epsilon) {
  if (arboricityBound < 1) throw std::invalid_argument("peelHPartition: arboricity bound >= 1");
  if (epsilon <= 0) throw std::invalid_argument("peelHPartition: epsilon > 0 required");
  const int threshold = static_cast<int>(std::floor((2.0 + epsilon) * arboricityBound));

  HPartition h;
  h.degreeBound = threshold;
  const int n = g.vertexCount();
  std::vector<int> deg(n + 1);
  std::vector<char> removed(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) deg[v] = g.degree(v);
  int remaining = n;
  while (remaining > 0) {
    std::vector<Vertex> bandMembers;
    for (Vertex v = 1; v <= n; ++v)
      if (!removed[v] && deg[v] <= threshold) bandMembers.push_back(v);
    if (bandMembers.empty())
      throw std::runtime_error("peelHPartition: peeling stalled (arboricity bound violated)");
    for (Vertex v : bandMembers) removed[v] = 1;
    for (Vertex v : bandMembers)
      for (Vertex u : g.neighbors(v))
        if (!removed[u]) --deg[u];
    remaining -= static_cast<int>(bandMembers.size());
    h.bands.emplace_back(std::move(bandMembers));
  }
  return h;
}

}  // namespace netdecomp
