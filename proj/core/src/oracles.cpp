#include "netdecomp/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace netdecomp {

namespace {

// k-colorability backtracking over vertices sorted by degree (descending).
bool kColorable(const Graph& g, int k, const std::vector<Vertex>& order, size_t idx,
                std::vector<int>& color) {
  if (idx == order.size()) return true;
  Vertex v = order[idx];
  int maxTry = 1;
  for (size_t j = 0; j < idx; ++j) maxTry = std::max(maxTry, color[order[j]] + 1);
  maxTry = std::min(maxTry, k);  // first use of a fresh color: try only one
  for (int c = 1; c <= maxTry; ++c) {
    bool ok = true;
    for (Vertex u : g.neighbors(v)) {
      if (color[u] == c) {
        ok = false;
        break;
      }
    }
    if (ok) {
      color[v] = c;
      if (kColorable(g, k, order, idx + 1, color)) return true;
      color[v] = 0;
    }
  }
  return false;
}

int greedyCliqueSize(const Graph& g) {
  std::vector<Vertex> order(g.vertexCount());
  for (Vertex v = 1; v <= g.vertexCount(); ++v) order[v - 1] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int best = g.vertexCount() > 0 ? 1 : 0;
  for (Vertex start : order) {
    std::vector<Vertex> clique{start};
    for (Vertex v : order) {
      if (v == start) continue;
      bool adjacentToAll = true;
      for (Vertex c : clique) {
        if (!g.hasEdge(v, c)) {
          adjacentToAll = false;
          break;
        }
      }
      if (adjacentToAll) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

int greedyColoringSize(const Graph& g) {
  std::vector<Vertex> order(g.vertexCount());
  for (Vertex v = 1; v <= g.vertexCount(); ++v) order[v - 1] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.vertexCount() + 1, 0);
  int used = 0;
  for (Vertex v : order) {
    std::vector<char> blocked(used + 2, 0);
    for (Vertex u : g.neighbors(v))
      if (color[u] > 0 && color[u] <= used + 1) blocked[color[u]] = 1;
    int c = 1;
    while (blocked[c]) ++c;
    color[v] = c;
    used = std::max(used, c);
  }
  return used;
}

// Lexicographic combination enumeration: calls fn for each size-`size`
// index subset of 0..m-1 until fn returns true.
template <typename Fn>
bool forEachCombination(int m, int size, Fn&& fn) {
  if (size > m) return false;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  for (;;) {
    if (fn(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[i] == m - size + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Distance from u to v over an adjacency restricted to `adj`, capped at
// `limit`. Returns limit+1 when farther.
int cappedDist(const std::vector<std::vector<Vertex>>& adj, Vertex u, Vertex v, int limit) {
  if (u == v) return 0;
  std::vector<int> d(adj.size(), -1);
  std::deque<Vertex> queue{u};
  d[u] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (d[x] >= limit) break;
    for (Vertex y : adj[x]) {
      if (d[y] == -1) {
        if (y == v) return d[x] + 1;
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return limit + 1;
}

}  // namespace

Coloring bruteOptimalColoring(const Graph& g) {
  const int n = g.vertexCount();
  if (n > kChromaticCap) throw SizeCapError("bruteChromatic: vertex cap exceeded");
  Coloring out;
  if (n == 0) return out;
  std::vector<Vertex> order(n);
  for (Vertex v = 1; v <= n; ++v) order[v - 1] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  int lower = greedyCliqueSize(g);
  int upper = std::max(1, greedyColoringSize(g));
  std::vector<int> best;
  for (int k = lower; k <= upper; ++k) {
    std::vector<int> color(n + 1, 0);
    if (kColorable(g, k, order, 0, color)) {
      best = std::move(color);
      upper = k;
      break;
    }
  }
  if (best.empty()) {
    // The greedy upper bound is always realizable.
    best.assign(n + 1, 0);
    kColorable(g, upper, order, 0, best);
  }
  // Sanity cross-checks the result must satisfy.
  if (upper > g.maxDegree() + 1 || upper < lower)
    throw std::logic_error("bruteChromatic: sanity bounds violated");
  out.palette = upper;
  out.colors = std::move(best);
  return out;
}

int bruteChromatic(const Graph& g) { return bruteOptimalColoring(g).palette; }

MdsWitness bruteMds(const Graph& g) {
  const int n = g.vertexCount();
  if (n > kMdsCap) throw SizeCapError("bruteMds: vertex cap exceeded");
  MdsWitness out;
  if (n == 0) return out;

  std::vector<std::uint32_t> cover(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    cover[v] = 1u << (v - 1);
    for (Vertex u : g.neighbors(v)) cover[v] |= 1u << (u - 1);
  }
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (int size = 0; size <= n; ++size) {
    bool found = forEachCombination(n, size, [&](const std::vector<int>& pick) {
      std::uint32_t covered = 0;
      for (int i : pick) covered |= cover[i + 1];
      if (covered == all) {
        std::vector<Vertex> members;
        for (int i : pick) members.push_back(i + 1);
        out.size = size;
        out.witness = VertexSet(std::move(members));
        return true;
      }
      return false;
    });
    if (found) return out;
  }
  throw std::logic_error("bruteMds: unreachable");
}

SpannerWitness bruteMinTSpanner(const Graph& g, int stretch) {
  auto edges = g.edges();
  return bruteMinSpannerCover(g, edges, edges, stretch);
}

SpannerWitness bruteMinSpannerCover(const Graph& g, std::span<const Edge> candidates,
                                    std::span<const Edge> required, int stretch) {
  if (stretch < 1) throw std::invalid_argument("spanner: stretch must be >= 1");
  const int m = static_cast<int>(candidates.size());
  if (m > kSpannerCap) throw SizeCapError("bruteMinSpannerCover: edge cap exceeded");
  for (const auto& e : required)
    if (std::find(candidates.begin(), candidates.end(), e) == candidates.end() &&
        std::find(candidates.begin(), candidates.end(), Edge{e.second, e.first}) ==
            candidates.end())
      throw std::invalid_argument("spanner: required edge not among candidates");

  std::vector<std::vector<Vertex>> adj(g.vertexCount() + 1);
  auto buildAdj = [&](const std::vector<Edge>& chosen) {
    for (auto& a : adj) a.clear();
    for (const auto& [u, v] : chosen) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  };
  auto feasible = [&](const std::vector<Edge>& chosen) {
    buildAdj(chosen);
    for (const auto& [u, v] : required)
      if (cappedDist(adj, u, v, stretch) > stretch) return false;
    return true;
  };

  // Required edges with no alternative route belong to every solution.
  std::vector<Edge> forced;
  std::vector<Edge> free;
  for (const auto& e : candidates) {
    bool isRequired = std::find(required.begin(), required.end(), e) != required.end() ||
                      std::find(required.begin(), required.end(), Edge{e.second, e.first}) !=
                          required.end();
    if (!isRequired) {
      free.push_back(e);
      continue;
    }
    std::vector<Edge> without;
    for (const auto& o : candidates)
      if (o != e) without.push_back(o);
    buildAdj(without);
    if (cappedDist(adj, e.first, e.second, stretch) > stretch)
      forced.push_back(e);
    else
      free.push_back(e);
  }

  const int freeCount = static_cast<int>(free.size());
  for (int extra = 0; extra <= freeCount; ++extra) {
    SpannerWitness out;
    bool found = forEachCombination(freeCount, extra, [&](const std::vector<int>& pick) {
      std::vector<Edge> chosen = forced;
      for (int i : pick) chosen.push_back(free[i]);
      if (feasible(chosen)) {
        std::sort(chosen.begin(), chosen.end());
        out.size = static_cast<int>(chosen.size());
        out.witness = std::move(chosen);
        return true;
      }
      return false;
    });
    if (found) return out;
  }
  throw std::invalid_argument("spanner: no feasible spanner within the candidate set");
}

bool dominates(const Graph& g, const VertexSet& d, const VertexSet& universe) {
  std::vector<char> covered(g.vertexCount() + 1, 0);
  for (Vertex v : d) {
    covered[v] = 1;
    for (Vertex u : g.neighbors(v)) covered[u] = 1;
  }
  for (Vertex v : universe)
    if (!covered[v]) return false;
  return true;
}

}  // namespace netdecomp
