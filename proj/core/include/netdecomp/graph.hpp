#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace netdecomp {

/// Vertices carry dense 1-based identifiers 1..n.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
   Immutable simple undirected graph with sorted neighbor lists.

   Neighbor lists are kept sorted so every iteration order (and every
   tie-break downstream) is deterministic. Safe for concurrent reads;
   no mutation after construction.
 */
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects out-of-range endpoints,
  /// self-loops and duplicate edges.
  static Graph fromEdges(int n, std::span<const Edge> edges);

  int vertexCount() const { return n_; }
  long edgeCount() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    checkVertex(v);
    return adj_[v];
  }

  int degree(Vertex v) const {
    checkVertex(v);
    return static_cast<int>(adj_[v].size());
  }

  int maxDegree() const;
  bool hasEdge(Vertex u, Vertex v) const;

  /// All edges as (u,v) pairs with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

private:
  void checkVertex(Vertex v) const;

  int n_ = 0;
  long m_ = 0;
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused
};

/**
   A sorted set of vertex identifiers of some host graph.
 */
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  const std::vector<Vertex>& items() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

private:
  std::vector<Vertex> members_;  // sorted, unique
};

/**
   A contracted graph: vertices are disjoint clusters of some base graph,
   and superedges join clusters connected by at least one base edge.

   `clusterOf[v]` maps a base vertex to its 1-based cluster index
   (0 when v is in no cluster). Clusters need not cover the base graph.
 */
struct SuperGraph {
  std::vector<VertexSet> clusters;
  std::vector<Vertex> leaders;  // one base vertex per cluster, inside it
  Graph graph;                  // vertices 1..clusters.size()
  std::vector<int> clusterOf;   // size baseN+1

  int clusterCount() const { return static_cast<int>(clusters.size()); }
};

/// BFS distances from a single source; -1 marks unreachable vertices.
std::vector<int> bfsDistances(const Graph& g, Vertex source);

/// Multi-source BFS distances; -1 marks unreachable vertices.
std::vector<int> bfsDistances(const Graph& g, std::span<const Vertex> sources);

/// Exact hop distance, or nullopt when v is unreachable from u.
std::optional<int> dist(const Graph& g, Vertex u, Vertex v);

/// All vertices within the given radius of v (including v itself).
VertexSet ball(const Graph& g, Vertex v, int radius);

/// Graph with an edge (u,v) iff 1 <= dist(u,v) <= radius. Requires radius >= 1.
Graph powerGraph(const Graph& g, int radius);

struct InducedSubgraph {
  Graph graph;                  // vertices 1..|s|
  std::vector<Vertex> toBase;   // local id -> base id (index 0 unused)
  std::vector<int> fromBase;    // base id -> local id, 0 when absent
};

/// Subgraph induced by s, with the id remapping tables for translating back.
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Contracts disjoint clusters into supernodes. Each leader must be a member
/// of its cluster. Superedges are deduplicated.
SuperGraph contract(const Graph& g, std::vector<VertexSet> clusters,
                    std::vector<Vertex> leaders);

/// Diameter of the subgraph induced by c; nullopt when that subgraph is
/// disconnected. Rejects empty clusters.
std::optional<int> strongDiameter(const Graph& g, const VertexSet& c);

/// Max distance in g between members of c; nullopt when some pair is
/// disconnected in g. Rejects empty clusters.
std::optional<int> weakDiameter(const Graph& g, const VertexSet& c);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connectedComponents(const Graph& g);

/// Some triangle (u < v < w) if one exists.
std::optional<std::array<Vertex, 3>> findTriangle(const Graph& g);

}  // namespace netdecomp
