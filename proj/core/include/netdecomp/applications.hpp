#pragma once

#include "netdecomp/decompose.hpp"
#include "netdecomp/oracles.hpp"
#include "netdecomp/separated.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp {

inline constexpr int kClusterMdsCap = 25;      // |closed neighborhood| cap, exact solver
inline constexpr int kClusterSpannerCap = 25;  // |candidate edges| cap, exact solver

/**
   An approximate solution with its certificate: `bound` is the proven
   approximation factor (label count of the decomposition used, times the
   harmonic factor for the greedy MDS), or the certified absolute palette
   bound for the palette-style colorings.
 */
template <typename Value>
struct ApproxResult {
  Value value{};
  double bound = 1;
  RoundLedger ledger;
  NetworkDecomposition decomposition;
};

/// Trivial decomposition with one cluster per connected component, all with
/// the same label. Separation holds vacuously across components.
NetworkDecomposition componentDecomposition(const Graph& g, int sigma);

/**
   Minimum-coloring approximation: every cluster is colored optimally by the
   exhaustive oracle and the pair (local color, cluster label) is flattened
   to (label-1)*maxLocalPalette + localColor. Distinct colors <=
   labelCount * max cluster chromatic number.
 */
ApproxResult<Coloring> approxMinColoring(const Graph& g, int k, const SimConfig& cfg);

/**
   Triangle-free coloring: a depth-2 decomposition leaves star clusters;
   cluster centers run the random palette protocol over the cluster
   supergraph, and each star spends one color on the center and one on the
   leaves. Palette <= 2 * A * ceil(n^epsilon) with A the realized band
   degree. Rejects graphs with a triangle.
 */
ApproxResult<Coloring> colorTriangleFree(const Graph& g, double epsilon, const SimConfig& cfg);

/**
   Coloring for girth > girthParam = 2k: arboricity is at most ceil(n^{1/k}),
   so peeling yields an H-partition of degree (2+epsilon)*a which is colored
   band by band. Palette <= ceil((2+epsilon) * a * n^epsilon).
 */
ApproxResult<Coloring> colorHighGirth(const Graph& g, int girthParam, double epsilon,
                                      const SimConfig& cfg);

enum class MdsSolver { Exact, Greedy };
enum class MdsPipeline { Randomized, Deterministic };

/**
   Dominating-set approximation over a 3-separated decomposition: per cluster
   C, the minimum dominating D_C within the closed neighborhood of C (exact
   subset search, or the greedy cover with its H(Delta+1) factor). The union
   is within labelCount (times H(Delta+1) for greedy) of optimal. The
   deterministic pipeline is seed-free end to end.
 */
ApproxResult<VertexSet> approxMds(const Graph& g, int k, MdsSolver solver, MdsPipeline pipeline,
                                  const SimConfig& cfg);

/**
   Greedy cluster dominating set: repeatedly picks the candidate from the
   closed neighborhood of C covering the most uncovered cluster vertices,
   preferring already-dominated candidates on ties, then smaller ids.
   |D_C| <= H(Delta+1) * optimum.
 */
VertexSet greedyClusterMds(const Graph& g, const VertexSet& cluster);

struct SpannerValue {
  std::vector<Edge> edges;  // the full returned t-spanner
  int intraEdges = 0;       // edges chosen by the per-cluster exact solves
  int crossingEdges = 0;    // cross-cluster edges kept verbatim
};

/**
   Minimum t-spanner approximation over a (2t-1)-separated decomposition:
   per cluster C the exact minimum spanner of the cluster edges drawing from
   the edges of the radius-(t-1) ball around C. Per-cluster solutions of one
   label are disjoint, so their union is within labelCount of the global
   optimum; crossing edges are kept verbatim to make the output a valid
   t-spanner of the whole graph and are reported separately.
 */
ApproxResult<SpannerValue> approxTSpanner(const Graph& g, int stretch, int k,
                                          const SimConfig& cfg);

/// Exact harmonic number H(m) = 1 + 1/2 + ... + 1/m.
double harmonic(int m);

}  // namespace netdecomp
