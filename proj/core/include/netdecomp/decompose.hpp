#pragma once

#include <span>
#include <vector>

#include "netdecomp/coloring.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp {

/// Per-level label stride constant for GammaMode::Asymptotic:
/// stride = gamma * floor(n^{2/k} * log2(n)^2).
inline constexpr double kAsymptoticStrideGamma = 4.0;

struct DecompositionCert {
  int diameter = 0;    // d: claimed max strong cluster diameter
  int labelCount = 0;  // l: claimed label count
  int separation = 2;  // sigma: equal labels lie at distance >= sigma
};

/**
   A partition of the host graph into clusters with per-cluster labels and
   the certified (d, l, sigma) parameters. `level` records the recursion
   level that created each cluster.
 */
struct NetworkDecomposition {
  std::vector<VertexSet> clusters;
  std::vector<int> labels;
  std::vector<Vertex> leaders;
  std::vector<int> level;
  DecompositionCert cert;
  int realizedDom = 0;  // ruling-set pipelines: realized domination radius

  int clusterCount() const { return static_cast<int>(clusters.size()); }
  int distinctLabelCount() const;
};

enum class DecSmallVariant { Threshold, AlwaysRandom, AlwaysLinial };

struct DecSmallResult {
  Coloring coloring;
  RoundLedger ledger;
};

/**
   Direct coloring of a degree-bounded graph, which is a zero-diameter
   decomposition: color reduction when degreeBound <= nOrig^epsilon (palette
   <= kLinialPaletteFactor * degreeBound²), random palette coloring otherwise
   (palette ceil(degreeBound * nOrig^epsilon)). The variant can force either
   branch. Rejects graphs whose max degree exceeds degreeBound.
 */
DecSmallResult decSmall(const Graph& g, int nOrig, int degreeBound, double epsilon,
                        int roundBudget, DecSmallVariant variant, const SimConfig& cfg,
                        std::span<const Vertex> stableIds = {}, int level = 1);

struct PartitionResult {
  VertexSet aSide;      // vertices with no sampled vertex nearby
  SuperGraph bSide;     // clusters grown around the sampled dominators
  RoundLedger ledger;
  int exploreRadius = 1;  // cluster radius used when growing bSide
};

/**
   Random split: every vertex joins the dominator set D with probability 1/q.
   D-members and their neighbors form clusters of strong diameter <= 2 (each
   non-member joins the neighboring dominator with the smallest identity);
   the remaining vertices form A and have degree O(q log n) whp.
 */
PartitionResult partitionSplit(const Graph& g, double q, const SimConfig& cfg,
                               std::span<const Vertex> stableIds = {}, int level = 1);

/**
   Generalized split: dominators sampled at rate 1/q explore to distance
   sigma-1 and unselected vertices join the closest originator (ties to the
   smaller identity). Clusters are connected with strong diameter
   <= 2*sigma-2; A-side vertices have < c*q*ln n vertices in their
   (sigma-1)-ball whp. sigma = 2 coincides with partitionSplit.
 */
PartitionResult sepPartitionSplit(const Graph& g, double q, int sigma, const SimConfig& cfg,
                                  std::span<const Vertex> stableIds = {}, int level = 1);

/// Per-level snapshot of the recursive decomposition.
struct DecomposeLevel {
  double sBound = 0;       // size bound used by the termination test
  int vertexCount = 0;     // realized supergraph size
  int nodeDiameter = 0;    // max strong base diameter of this level's supernodes
  int aMaxDegree = 0;      // max degree of the colored subgraph at this level
  int palette = 0;         // realized dec-small palette (0 when label-free)
  int exploreRadius = 0;   // split cluster radius (0 at the terminal level)
  bool terminal = false;
  Graph levelGraph;
  std::vector<Vertex> nodeIds;       // stable identity per level vertex
  VertexSet aSide;                   // level-graph ids (terminal: all)
  std::vector<VertexSet> bClusters;  // level-graph ids
  std::vector<VertexSet> clusters;   // contributed base clusters
  std::vector<Vertex> leaders;       // base leader per contributed cluster
  std::vector<int> colors;           // per contributed cluster
};

struct DecomposeTrace {
  Graph base;
  std::vector<DecomposeLevel> levels;
  double q = 0;          // per-level sampling threshold n^{1/k}
  int hDegreeBound = 0;  // certified band degree of the extracted H-partition

  int depth() const { return static_cast<int>(levels.size()); }
};

struct DecomposeResult {
  NetworkDecomposition decomposition;
  DecomposeTrace trace;
  RoundLedger ledger;
};

struct DecomposeOptions {
  int k = 2;
  double epsilon = 0.5;
  int roundBudget = kUntilFixpoint;
  DecSmallVariant variant = DecSmallVariant::Threshold;
};

/**
   Recursive randomized decomposition: each level splits the current
   supergraph, colors the low-degree side directly, and recurses on the
   contracted cluster side with fresh labels. Produces a strong
   (3^{L-1}-1, sum of per-level palettes)-decomposition where L <= k is the
   realized depth. Each level's rounds are charged with multiplier
   (max strong supernode diameter + 1).
 */
DecomposeResult decompose(const Graph& g, const DecomposeOptions& opt, const SimConfig& cfg);

struct ClusterHPartition {
  SuperGraph quotient;   // the cluster supergraph of the decomposition
  HPartition partition;  // bands over quotient vertices, by creation level
};

/// Bands the cluster supergraph by creation level. The forward degree is
/// bounded by trace.hDegreeBound (whp for the randomized splits, always for
/// the ruling-set split).
ClusterHPartition extractHPartition(const DecomposeTrace& trace, const NetworkDecomposition& q);

enum class RelabelScheme { ArbLinial, HRandom };

struct RelabelResult {
  std::vector<int> labels;  // per cluster
  int labelCount = 0;       // palette of the relabeling
  RoundLedger ledger;
};

/**
   Recolors the cluster supergraph raised to the (sigma-1)-th power via its
   H-partition: arb-linial gives <= kLinialPaletteFactor * A² labels,
   h-random gives ceil(A * n^epsilon). Equal labels then lie at distance
   >= sigma in the base graph. Rounds are charged with multiplier
   (sigma-1) * (cert.diameter+1).
 */
RelabelResult relabelDecomposition(const Graph& g, const NetworkDecomposition& q,
                                   const ClusterHPartition& h, RelabelScheme scheme,
                                   double epsilon, int roundBudget, const SimConfig& cfg,
                                   int sigma = 2);

}  // namespace netdecomp
