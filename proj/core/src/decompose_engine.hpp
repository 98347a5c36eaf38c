#pragma once

// Internal recursion engine shared by the plain, separated and ruling-set
// decompositions. Not installed.

#include <functional>

#include "netdecomp/decompose.hpp"

namespace netdecomp::detail {

using SplitFn = std::function<PartitionResult(const Graph& level, double q, const SimConfig& cfg,
                                              std::span<const Vertex> stableIds, int levelIndex)>;

struct EngineOptions {
  int k = 2;
  double epsilon = 0.5;
  int roundBudget = kUntilFixpoint;
  DecSmallVariant variant = DecSmallVariant::Threshold;
  bool labelPerLevel = true;      // false: skip per-level coloring, labels stay 0
  bool terminalOnRealized = false;  // true: stop when realized size <= ceil(q)
};

// Runs the k-level recursion with the supplied split. Labels, cert.diameter
// (product of per-split (2*radius+1) minus one) and the trace are assembled
// here; callers adjust cert.separation / labels for their pipeline.
DecomposeResult runDecomposition(const Graph& g, const EngineOptions& opt, const SplitFn& split,
                                 const SimConfig& cfg);

}  // namespace netdecomp::detail
