#pragma once

#include <string>
#include <vector>

#include "netdecomp/coloring.hpp"
#include "netdecomp/decompose.hpp"
#include "netdecomp/graph.hpp"
#include "netdecomp/separated.hpp"

namespace netdecomp {

struct ValidationReport {
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> violations;  // (rule, witness)

  void fail(std::string rule, std::string witness) {
    passed = false;
    violations.emplace_back(std::move(rule), std::move(witness));
  }
};

enum class DiameterMode { Strong, Weak };

/**
   Checks a decomposition end to end: clusters partition V, every cluster
   diameter (strong via induced BFS, weak via base BFS) is within cert.d,
   labels are proper on the contracted supergraph and within cert.l, and
   equal-label clusters lie at distance >= cert.sigma. Violations are
   reported, never thrown.
 */
ValidationReport validateDecomposition(const Graph& g, const NetworkDecomposition& q,
                                       DiameterMode mode = DiameterMode::Strong);

/// Checks band disjointness, coverage, and the forward-degree bound.
ValidationReport validateHPartition(const Graph& g, const HPartition& h);

/// Checks both ruling-set invariants by exhaustive BFS.
ValidationReport validateRulingSet(const Graph& g, const RulingSet& rs);

struct StretchReport {
  ValidationReport report;
  int maxStretch = 0;
};

/// Checks every base edge has a path of length <= stretch inside H (the
/// standard per-edge reduction of all-pairs stretch) and reports the max.
StretchReport validateStretch(const Graph& g, std::span<const Edge> spannerEdges, int stretch);

/// Checks the two low-intersecting invariants by exhaustive ball audit.
ValidationReport validateLowIntersecting(const Graph& g, const LowIntersectingPartition& p);

}  // namespace netdecomp
