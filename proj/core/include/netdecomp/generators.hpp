#pragma once

#include "netdecomp/graph.hpp"
#include "netdecomp/sim.hpp"

namespace netdecomp {

Graph genCycle(int n);            // n >= 3
Graph genPath(int n);             // n >= 1
Graph genStar(int leaves);        // center 1 plus `leaves` leaves
Graph genGrid(int width, int height);

/// Erdos-Renyi G(n,p); every pair is drawn from its own seeded stream, so
/// the result is a pure function of (n, p, seed).
Graph genGnp(int n, double p, const SimConfig& cfg);

/// Uniform random attachment tree on n vertices, seeded.
Graph genRandomTree(int n, const SimConfig& cfg);

/**
   Point-line incidence graph of the projective plane of prime order q:
   2(q^2+q+1) vertices, (q+1)-regular, girth 6. Rejects non-prime q.
 */
Graph genGirth6(int q);

}  // namespace netdecomp
