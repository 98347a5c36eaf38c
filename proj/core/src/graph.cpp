#include "netdecomp/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace netdecomp {

namespace {

std::string vertexMsg(const char* what, Vertex v) {
  return std::string(what) + ": vertex " + std::to_string(v);
}

}  // namespace

void Graph::checkVertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument(vertexMsg("vertex id out of range", v));
}

Graph Graph::fromEdges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n + 1, {});
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n) throw std::invalid_argument(vertexMsg("edge endpoint out of range", u));
    if (v < 1 || v > n) throw std::invalid_argument(vertexMsg("edge endpoint out of range", v));
    if (u == v) throw std::invalid_argument(vertexMsg("self-loop rejected", u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.m_ = static_cast<long>(edges.size());
  for (Vertex v = 1; v <= n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument(vertexMsg("duplicate edge at", v));
  }
  return g;
}

int Graph::maxDegree() const {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::hasEdge(Vertex u, Vertex v) const {
  checkVertex(u);
  checkVertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<int> bfsDistances(const Graph& g, Vertex source) {
  return bfsDistances(g, std::span<const Vertex>(&source, 1));
}

std::vector<int> bfsDistances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> d(g.vertexCount() + 1, -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (s < 1 || s > g.vertexCount()) throw std::invalid_argument(vertexMsg("bfs source out of range", s));
    if (d[s] == -1) {
      d[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (d[w] == -1) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

std::optional<int> dist(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);  // validates v
  auto d = bfsDistances(g, u);
  if (d[v] < 0) return std::nullopt;
  return d[v];
}

VertexSet ball(const Graph& g, Vertex v, int radius) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  auto d = bfsDistances(g, v);
  std::vector<Vertex> members;
  for (Vertex u = 1; u <= g.vertexCount(); ++u)
    if (d[u] >= 0 && d[u] <= radius) members.push_back(u);
  return VertexSet(std::move(members));
}

Graph powerGraph(const Graph& g, int radius) {
  if (radius < 1) throw std::invalid_argument("power radius must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= g.vertexCount(); ++v) {
    auto d = bfsDistances(g, v);
    for (Vertex u = v + 1; u <= g.vertexCount(); ++u)
      if (d[u] >= 1 && d[u] <= radius) edges.emplace_back(v, u);
  }
  return Graph::fromEdges(g.vertexCount(), edges);
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.fromBase.assign(g.vertexCount() + 1, 0);
  out.toBase.assign(1, 0);
  for (Vertex v : s) {
    g.neighbors(v);  // validates membership range
    out.toBase.push_back(v);
    out.fromBase[v] = static_cast<int>(out.toBase.size()) - 1;
  }
  std::vector<Edge> edges;
  for (Vertex v : s)
    for (Vertex u : g.neighbors(v))
      if (u > v && out.fromBase[u] != 0) edges.emplace_back(out.fromBase[v], out.fromBase[u]);
  out.graph = Graph::fromEdges(s.size(), edges);
  return out;
}

SuperGraph contract(const Graph& g, std::vector<VertexSet> clusters,
                    std::vector<Vertex> leaders) {
  if (clusters.size() != leaders.size())
    throw std::invalid_argument("contract: one leader per cluster required");
  SuperGraph sg;
  sg.clusterOf.assign(g.vertexCount() + 1, 0);
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].empty()) throw std::invalid_argument("contract: empty cluster");
    for (Vertex v : clusters[i]) {
      g.neighbors(v);
      if (sg.clusterOf[v] != 0) throw std::invalid_argument(vertexMsg("contract: overlapping clusters at", v));
      sg.clusterOf[v] = static_cast<int>(i) + 1;
    }
    if (!clusters[i].contains(leaders[i]))
      throw std::invalid_argument(vertexMsg("contract: leader outside its cluster", leaders[i]));
  }
  std::vector<Edge> superEdges;
  for (Vertex u = 1; u <= g.vertexCount(); ++u) {
    int cu = sg.clusterOf[u];
    if (cu == 0) continue;
    for (Vertex v : g.neighbors(u)) {
      int cv = sg.clusterOf[v];
      if (cv == 0 || cv == cu) continue;
      if (cu < cv) superEdges.emplace_back(cu, cv);
    }
  }
  std::sort(superEdges.begin(), superEdges.end());
  superEdges.erase(std::unique(superEdges.begin(), superEdges.end()), superEdges.end());
  sg.graph = Graph::fromEdges(static_cast<int>(clusters.size()), superEdges);
  sg.clusters = std::move(clusters);
  sg.leaders = std::move(leaders);
  return sg;
}

std::optional<int> strongDiameter(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw std::invalid_argument("strongDiameter: empty cluster");
  auto sub = induced(g, c);
  int diam = 0;
  for (Vertex v = 1; v <= sub.graph.vertexCount(); ++v) {
    auto d = bfsDistances(sub.graph, v);
    for (Vertex u = 1; u <= sub.graph.vertexCount(); ++u) {
      if (d[u] < 0) return std::nullopt;
      diam = std::max(diam, d[u]);
    }
  }
  return diam;
}

std::optional<int> weakDiameter(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw std::invalid_argument("weakDiameter: empty cluster");
  int diam = 0;
  for (Vertex v : c) {
    auto d = bfsDistances(g, v);
    for (Vertex u : c) {
      if (d[u] < 0) return std::nullopt;
      diam = std::max(diam, d[u]);
    }
  }
  return diam;
}

std::optional<int> girth(const Graph& g) {
  // Min over all roots of the shortest closed walk found by BFS. A non-tree
  // edge (x,y) witnesses a closed walk of length d[x]+d[y]+1 which contains a
  // cycle no longer than itself, and a root on a shortest cycle attains it.
  int best = -1;
  std::vector<int> d(g.vertexCount() + 1);
  std::vector<Vertex> parent(g.vertexCount() + 1);
  for (Vertex root = 1; root <= g.vertexCount(); ++root) {
    std::fill(d.begin(), d.end(), -1);
    std::fill(parent.begin(), parent.end(), 0);
    std::deque<Vertex> queue{root};
    d[root] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (d[y] == -1) {
          d[y] = d[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          int walk = d[x] + d[y] + 1;
          if (best == -1 || walk < best) best = walk;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::vector<VertexSet> connectedComponents(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.vertexCount() + 1, 0);
  for (Vertex v = 1; v <= g.vertexCount(); ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> members;
    std::deque<Vertex> queue{v};
    seen[v] = 1;
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::optional<std::array<Vertex, 3>> findTriangle(const Graph& g) {
  for (Vertex u = 1; u <= g.vertexCount(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      size_t i = 0, j = 0;
      while (i < nu.size() && j < nv.size()) {
        if (nu[i] == nv[j]) {
          if (nu[i] > v) return std::array<Vertex, 3>{u, v, nu[i]};
          ++i;
          ++j;
        } else if (nu[i] < nv[j]) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace netdecomp
