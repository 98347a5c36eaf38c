#pragma once

#include <stdexcept>
#include <vector>

#include "netdecomp/coloring.hpp"
#include "netdecomp/graph.hpp"

namespace netdecomp {

/// Thrown when an exhaustive oracle is asked to exceed its hard size cap.
/// Caps are hard errors, never silent approximations.
struct SizeCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kChromaticCap = 20;  // max vertices for brute chromatic
inline constexpr int kMdsCap = 20;        // max vertices for brute MDS
inline constexpr int kSpannerCap = 25;    // max candidate edges for brute spanners

/// Exact chromatic number via a k-colorability sweep between the greedy
/// clique lower bound and the greedy coloring upper bound. n <= kChromaticCap.
int bruteChromatic(const Graph& g);

/// An optimal proper coloring (palette = chromatic number). Same cap.
Coloring bruteOptimalColoring(const Graph& g);

struct MdsWitness {
  int size = 0;
  VertexSet witness;
};

/// Exact minimum dominating set via subset enumeration in increasing size.
/// n <= kMdsCap.
MdsWitness bruteMds(const Graph& g);

struct SpannerWitness {
  int size = 0;
  std::vector<Edge> witness;
};

/// Exact minimum t-spanner via edge-subset enumeration in increasing size.
/// |E| <= kSpannerCap.
SpannerWitness bruteMinTSpanner(const Graph& g, int stretch);

/**
   Generalized exact spanner solve: the smallest H subseteq candidates such
   that every required edge (u,v) satisfies dist_H(u,v) <= stretch. Edges
   forced by having no alternative route are fixed up front, the rest are
   enumerated. required must be a subset of candidates.
 */
SpannerWitness bruteMinSpannerCover(const Graph& g, std::span<const Edge> candidates,
                                    std::span<const Edge> required, int stretch);

/// True iff every member of `universe` is in `d` or adjacent to it.
bool dominates(const Graph& g, const VertexSet& d, const VertexSet& universe);

}  // namespace netdecomp
