#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netdecomp/decompose.hpp"
#include "netdecomp/generators.hpp"
#include "netdecomp/json_io.hpp"
#include "netdecomp/validate.hpp"
#include "test_support.hpp"

using namespace netdecomp;
using namespace netdecomp::testsupport;

TEST_CASE("partitionSplit q=1 makes every vertex a singleton dominator") {
  auto c6 = genCycle(6);
  auto res = partitionSplit(c6, 1.0, seeded(3));
  CHECK(res.aSide.empty());
  CHECK(res.bSide.clusterCount() == 6);
  for (const auto& c : res.bSide.clusters) CHECK(c.size() == 1);
}

TEST_CASE("partitionSplit on an edgeless graph strands non-dominators in A") {
  auto edgeless = Graph::fromEdges(8, {});
  auto res = partitionSplit(edgeless, 2.0, seeded(1));
  for (const auto& c : res.bSide.clusters) CHECK(c.size() == 1);
  CHECK(res.aSide.size() + res.bSide.clusterCount() == 8);
}

TEST_CASE("partitionSplit A-side has no dominator neighbor and clusters are stars") {
  auto c6 = genCycle(6);
  auto res = partitionSplit(c6, 2.0, seeded(1));
  // Every A vertex is outside every cluster and has no clustered-leader
  // neighbor at distance <= 1.
  for (Vertex a : res.aSide) {
    CHECK(res.bSide.clusterOf[a] == 0);
    for (Vertex leader : res.bSide.leaders) CHECK_FALSE(c6.hasEdge(a, leader));
  }
  for (const auto& c : res.bSide.clusters) {
    auto diam = strongDiameter(c6, c);
    REQUIRE(diam.has_value());
    CHECK(*diam <= 2);
  }
  // Coverage: A plus the clusters tile the vertex set.
  int covered = res.aSide.size();
  for (const auto& c : res.bSide.clusters) covered += c.size();
  CHECK(covered == 6);
}

TEST_CASE("decSmall picks the branch by the degree threshold") {
  auto edgeless = Graph::fromEdges(4, {});
  auto r0 = decSmall(edgeless, 4, 0, 0.5, kUntilFixpoint, DecSmallVariant::Threshold, seeded(1));
  CHECK(r0.coloring.palette == 1);

  // d = 2 <= 5^0.9: the reduction branch, quadratic palette.
  auto c5 = genCycle(5);
  auto r1 = decSmall(c5, 5, 2, 0.9, kUntilFixpoint, DecSmallVariant::Threshold, seeded(1));
  CHECK(isProperColoring(c5, r1.coloring));
  CHECK(r1.coloring.palette <= kLinialPaletteFactor * 4);

  // d = 9 > 10^0.1: the random branch with palette ceil(9 * 10^0.1) = 12.
  auto star = genStar(9);
  auto r2 = decSmall(star, 10, 9, 0.1, kUntilFixpoint, DecSmallVariant::Threshold, seeded(1));
  CHECK(isProperColoring(star, r2.coloring));
  CHECK(r2.coloring.palette == 12);

  CHECK_THROWS_AS(decSmall(star, 10, 2, 0.5, kUntilFixpoint, DecSmallVariant::Threshold,
                           seeded(1)),
                  std::invalid_argument);  // degree exceeds the stated bound
}

TEST_CASE("decompose k=1 degenerates to the direct singleton coloring") {
  auto g = randomGraph(40, 0.1, 5);
  DecomposeOptions opt;
  opt.k = 1;
  auto res = decompose(g, opt, seeded(2));
  CHECK(res.decomposition.cert.diameter == 0);
  CHECK(res.decomposition.clusterCount() == g.vertexCount());
  CHECK(res.trace.depth() == 1);
  CHECK(validateDecomposition(g, res.decomposition).passed);
}

TEST_CASE("decompose validates on small fixed graphs") {
  auto c6 = genCycle(6);
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(c6, opt, seeded(1));
  auto report = validateDecomposition(c6, res.decomposition);
  CHECK(report.passed);
  CHECK(res.decomposition.cert.diameter <= 2);  // 3^{k-1} - 1
}

TEST_CASE("decompose validates on a random graph and bounds labels by the stride") {
  auto g = randomGraph(300, 0.05, 7);
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(g, opt, seeded(7));
  CHECK(validateDecomposition(g, res.decomposition).passed);

  int maxStride = 0;
  for (const auto& lvl : res.trace.levels) maxStride = std::max(maxStride, lvl.palette);
  CHECK(res.decomposition.distinctLabelCount() <= 2 * maxStride);
}

TEST_CASE("decompose with forced recursion: diameters, strides, and audits") {
  // A lower termination constant forces the two-level path on mid-size inputs.
  auto cfg = seeded(11);
  cfg.cThreshold = 1.0;
  auto g = randomGraph(250, 0.04, 13);
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(g, opt, cfg);
  REQUIRE(res.trace.depth() == 2);
  CHECK(validateDecomposition(g, res.decomposition).passed);
  CHECK(res.decomposition.cert.diameter == 2);

  // Level supernodes entering level 2 have strong diameter <= 2.
  CHECK(res.trace.levels[1].nodeDiameter <= 2);

  // Ledger: level-2 rounds are charged with multiplier nodeDiameter+1.
  bool sawScaled = false;
  for (const auto& e : res.ledger.entries)
    if (e.multiplier == res.trace.levels[1].nodeDiameter + 1) sawScaled = true;
  CHECK(sawScaled);
}

TEST_CASE("decompose is a pure function of the seed") {
  auto g = randomGraph(120, 0.06, 3);
  DecomposeOptions opt;
  opt.k = 2;
  auto a = decompose(g, opt, seeded(42));
  auto b = decompose(g, opt, seeded(42));
  CHECK(decompositionToJson(a.decomposition) == decompositionToJson(b.decomposition));
  CHECK(ledgerToJson(a.ledger) == ledgerToJson(b.ledger));

  auto c = decompose(g, opt, seeded(43));
  CHECK(decompositionToJson(a.decomposition) != decompositionToJson(c.decomposition));
}

TEST_CASE("per-level statistical claims: A-side degree and supernode count") {
  // Over 50 seeded trials, the A-side degree bound c*q*ln(s) and the
  // supernode count bound 2s/q hold in at least 48.
  int degreeOk = 0, countOk = 0;
  const int trials = 50;
  for (std::uint64_t seed = 1; seed <= trials; ++seed) {
    auto cfg = seeded(seed);
    cfg.cThreshold = 1.0;  // force actual partitioning
    auto g = randomGraph(500, 0.05, seed + 100);
    DecomposeOptions opt;
    opt.k = 2;
    auto res = decompose(g, opt, cfg);
    bool degreeHolds = true, countHolds = true;
    for (const auto& lvl : res.trace.levels) {
      if (lvl.terminal) continue;
      double s = lvl.vertexCount;
      if (lvl.aMaxDegree >= cfg.cDegree * res.trace.q * std::log(s)) degreeHolds = false;
      if (lvl.bClusters.size() > 2.0 * s / res.trace.q) countHolds = false;
    }
    degreeOk += degreeHolds;
    countOk += countHolds;
  }
  CHECK(degreeOk >= 48);
  CHECK(countOk >= 48);
}

TEST_CASE("extractHPartition bands the cluster supergraph by level") {
  auto g = randomGraph(200, 0.05, 3);
  auto cfg = seeded(3);
  cfg.cThreshold = 1.0;
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(g, opt, cfg);
  auto ch = extractHPartition(res.trace, res.decomposition);
  CHECK(ch.quotient.clusterCount() == res.decomposition.clusterCount());
  CHECK(validateHPartition(ch.quotient.graph, ch.partition).passed);

  // k=1: a single band holding every singleton cluster.
  DecomposeOptions opt1;
  opt1.k = 1;
  auto res1 = decompose(g, opt1, cfg);
  auto ch1 = extractHPartition(res1.trace, res1.decomposition);
  CHECK(ch1.partition.bands.size() == 1);
  CHECK(ch1.partition.bands[0].size() == res1.decomposition.clusterCount());
}

TEST_CASE("relabel recolors the cluster supergraph under both schemes") {
  auto c6 = genCycle(6);
  auto cfg = seeded(1);
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(c6, opt, cfg);
  auto ch = extractHPartition(res.trace, res.decomposition);

  auto arb = relabelDecomposition(c6, res.decomposition, ch, RelabelScheme::ArbLinial, 0.5,
                                  kUntilFixpoint, cfg);
  // Proper on the quotient graph.
  for (const auto& [a, b] : ch.quotient.graph.edges()) CHECK(arb.labels[a - 1] != arb.labels[b - 1]);

  auto hr = relabelDecomposition(c6, res.decomposition, ch, RelabelScheme::HRandom, 0.5,
                                 kUntilFixpoint, cfg);
  for (const auto& [a, b] : ch.quotient.graph.edges()) CHECK(hr.labels[a - 1] != hr.labels[b - 1]);
  CHECK(hr.labelCount <=
        static_cast<int>(std::ceil(ch.partition.degreeBound * std::pow(6, 0.5))));

  // Ledger multiplier is (sigma-1) * (cert.diameter + 1).
  for (const auto& e : hr.ledger.entries) CHECK(e.multiplier % (res.decomposition.cert.diameter + 1) == 0);

  // Relabeling an edgeless singleton decomposition needs one label.
  auto edgeless = Graph::fromEdges(4, {});
  DecomposeOptions opt1;
  opt1.k = 1;
  auto res1 = decompose(edgeless, opt1, cfg);
  auto ch1 = extractHPartition(res1.trace, res1.decomposition);
  auto one = relabelDecomposition(edgeless, res1.decomposition, ch1, RelabelScheme::ArbLinial,
                                  0.5, kUntilFixpoint, cfg);
  CHECK(one.labelCount == 1);
}

TEST_CASE("decompose rejects out-of-range depth") {
  auto g = genCycle(8);
  DecomposeOptions opt;
  opt.k = 0;
  CHECK_THROWS_AS(decompose(g, opt, seeded(1)), std::invalid_argument);
  opt.k = 9;  // log2(8) = 3
  CHECK_THROWS_AS(decompose(g, opt, seeded(1)), std::invalid_argument);
}

TEST_CASE("asymptotic stride mode keeps per-level palettes in disjoint blocks") {
  auto g = randomGraph(260, 0.03, 21);
  auto cfg = seeded(21);
  cfg.cThreshold = 1.0;
  cfg.gammaMode = GammaMode::Asymptotic;
  DecomposeOptions opt;
  opt.k = 2;
  auto res = decompose(g, opt, cfg);
  CHECK(validateDecomposition(g, res.decomposition).passed);
}
