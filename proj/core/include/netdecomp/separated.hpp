#pragma once

#include <span>
#include <vector>

#include "netdecomp/decompose.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp {

/**
   A set of vertices at pairwise distance >= sep such that every universe
   vertex has a member within distance dom.
 */
struct RulingSet {
  VertexSet members;
  int sep = 2;
  int dom = 0;  // realized domination radius over the universe
  VertexSet universe;
};

enum class RulingMethod { LubyPower, AglpDeterministic };

struct RulingSetResult {
  RulingSet set;
  RoundLedger ledger;
};

/**
   luby-power: a maximal independent set of the (sep-1)-th power restricted
   to the universe, giving dom <= sep-1. aglp-deterministic: seed-free
   merging of candidate rulers by identity bits, halving on the highest
   differing bit per phase, giving dom <= sep * ceil(log2(maxId+1)).
   Both outputs are validated against the invariants before returning.
 */
RulingSetResult rulingSet(const Graph& g, const VertexSet& universe, int sep,
                          RulingMethod method, const SimConfig& cfg,
                          std::span<const Vertex> stableIds = {}, int level = 1);

/**
   Deterministic split: a (3,*)-ruling set over the high-degree vertices
   {deg >= q} seeds clusters grown by closest-ruler exploration (ties to the
   smaller ruler identity). Every unclustered vertex has degree < q, and the
   cluster side has at most |V|/q supernodes; both hold deterministically.
 */
PartitionResult rsPartitionSplit(const Graph& g, double q, int sep, RulingMethod method,
                                 const SimConfig& cfg, std::span<const Vertex> stableIds = {},
                                 int level = 1);

struct RsDecomposeOptions {
  int k = 2;
  RulingMethod method = RulingMethod::AglpDeterministic;
  double epsilon = 0.5;
  int roundBudget = kUntilFixpoint;
  DecSmallVariant variant = DecSmallVariant::AlwaysLinial;
};

/**
   Decomposition over the ruling-set split: same recursion as decompose but
   the unclustered side has degree < n^{1/k} with no log factor, so the
   extracted H-partition has degree <= ceil(n^{1/k}) unconditionally.
   cert.diameter follows the realized exploration radii. With
   aglp-deterministic rulers and the linial variant the output is seed-free.
 */
DecomposeResult rsDecompose(const Graph& g, const RsDecomposeOptions& opt, const SimConfig& cfg);

struct SepDecomposeOptions {
  int k = 2;
  int sigma = 3;
  double epsilon = 0;  // relabeling exponent; <= 0 means 1/k
  int roundBudget = kUntilFixpoint;
  RelabelScheme scheme = RelabelScheme::HRandom;
};

/**
   Separated decomposition: the recursion runs with exploration radius
   sigma-1 (cert.diameter = (2*sigma-1)^{L-1} - 1) and labels come from
   recoloring the cluster supergraph raised to the (sigma-1)-th power, so
   equal-label clusters lie at distance >= sigma in the base graph.
 */
DecomposeResult sepDecompose(const Graph& g, const SepDecomposeOptions& opt, const SimConfig& cfg);

/**
   Weak-diameter variant: runs the plain decomposition on the (sigma-1)-th
   power of g. cert.diameter = (sigma-1) * (3^{L-1} - 1) bounds the weak
   diameter; induced subgraphs of clusters may be disconnected.
 */
DecomposeResult weakSepDecompose(const Graph& g, const DecomposeOptions& opt, int sigma,
                                 const SimConfig& cfg);

/**
   Partition whose clusters have strong diameter <= alpha*gamma while every
   radius-gamma ball meets at most beta clusters.
 */
struct LowIntersectingPartition {
  std::vector<VertexSet> clusters;
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  NetworkDecomposition source;
  RoundLedger ledger;
};

/// Wraps a (2*gamma+1)-separated decomposition: alpha = ceil(cert.d / gamma),
/// beta = realized label count.
LowIntersectingPartition lowIntersecting(const Graph& g, int k, int gamma, const SimConfig& cfg);

struct SkeletonSpanner {
  std::vector<Edge> edges;
  int maxStretch = 0;  // realized max stretch over base edges
};

/**
   Union of one BFS tree per cluster (rooted at the leader) and exactly one
   base edge per adjacent cluster pair. Rejects decompositions with a
   disconnected induced cluster. Edge count <= (n - #clusters) + #superedges;
   stretch of any base edge <= 2*cert.diameter + 1.
 */
SkeletonSpanner skeletonSpanner(const Graph& g, const NetworkDecomposition& q);

}  // namespace netdecomp
