#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"
#include "netdecomp/union_free.hpp"

namespace netdecomp {

/// Fixpoint palette guarantee of iterated color reduction: palette <= c * Δ²
/// (Δ >= 1). With the polynomial union-free construction the worst stuck
/// point is nextprime(2Δ)² <= 9Δ², attained at Δ = 1.
inline constexpr int kLinialPaletteFactor = 9;

/**
   A vertex coloring with a declared palette bound. colors[0] is unused;
   colors[v] in 1..palette for v in 1..n.
 */
struct Coloring {
  std::vector<int> colors;
  int palette = 0;
};

/// True iff every vertex has a color in 1..palette and no edge is monochromatic.
bool isProperColoring(const Graph& g, const Coloring& c);

/// Number of distinct colors actually used.
int distinctColors(const Coloring& c);

struct ColorRun {
  Coloring coloring;
  RoundLedger ledger;
};

/**
   One-round color reduction: vertex v moves to the smallest element of
   S_{c(v)} not covered by the sets of its neighbors' colors. Requires
   family.familySize >= phi.palette and family.delta >= max degree of g.
 */
Coloring linialReduce(const Graph& g, const Coloring& phi, const UnionFreeFamily& family);

/**
   Iterated color reduction from the identity coloring. With
   roundBudget = kUntilFixpoint, reduces until the palette stops shrinking
   (final palette <= kLinialPaletteFactor * Δ² for Δ >= 1); otherwise applies
   exactly roundBudget reductions.
 */
ColorRun linialColor(const Graph& g, int roundBudget);

/**
   Las Vegas coloring: every round, each uncolored vertex draws a palette
   color uniformly and keeps it iff no neighbor holds or drew the same color.
   Palette is ceil(Δ * n^epsilon). Runs to completion; the ledger records the
   realized number of rounds.
 */
ColorRun randomColor(const Graph& g, double epsilon, const SimConfig& cfg);

/// randomColor with an explicit palette and RNG identity. stableIds maps
/// local vertices to the identities used for the RNG streams (empty = local
/// ids); scope separates concurrent uses of the shared seed.
ColorRun randomColorWithPalette(const Graph& g, int palette, const SimConfig& cfg,
                                std::span<const Vertex> stableIds = {},
                                std::string_view scope = "random-color");

/**
   An ordered partition (S_1,...,S_l) such that every vertex of S_i has at
   most degreeBound neighbors in S_i u ... u S_l. Certifies arboricity
   O(degreeBound).
 */
struct HPartition {
  std::vector<VertexSet> bands;
  int degreeBound = 0;

  int bandOf(Vertex v) const;  // 1-based band index, 0 when absent
};

/**
   Oriented color reduction over an H-partition: edges point to the later
   band (ties to the larger id), so each vertex has at most degreeBound
   parents, and only parent colors are excluded. Round semantics as
   linialColor.
 */
ColorRun arbLinialColor(const Graph& g, const HPartition& h, int roundBudget,
                        std::span<const Vertex> stableIds = {});

/**
   Colors bands last to first: band S_l first, each vertex drawing from a
   palette of ceil(degreeBound * n^epsilon) until it differs from all
   finalized and same-round neighbors. Every vertex faces at most
   degreeBound constraining neighbors when it draws.
 */
ColorRun hPartitionRandomColor(const Graph& g, const HPartition& h, double epsilon,
                               const SimConfig& cfg, int paletteOverride = 0,
                               std::span<const Vertex> stableIds = {},
                               std::string_view scope = "h-random");

/**
   Arboricity peeling: repeatedly strips all vertices of remaining degree
   <= (2+epsilon)*arboricityBound into the next band. Throws when a round
   strips nothing before exhausting the graph (the arboricity bound is then
   violated).
 */
HPartition peelHPartition(const Graph& g, int arboricityBound, double epsilon);

}  // namespace netdecomp
