#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdecomp/generators.hpp"
#include "netdecomp/oracles.hpp"
#include "netdecomp/validate.hpp"
#include "test_support.hpp"

using namespace netdecomp;
using namespace netdecomp::testsupport;

namespace {

Graph k4() {
  return Graph::fromEdges(4, std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST_CASE("bruteChromatic on fixed instances") {
  CHECK(bruteChromatic(genCycle(5)) == 3);
  CHECK(bruteChromatic(k4()) == 4);

  // Petersen: the outer 5-cycle is odd (chi >= 3) and the witness coloring
  // realizes 3, independently of the sweep.
  auto pet = petersen();
  auto witness = bruteOptimalColoring(pet);
  CHECK(witness.palette == 3);
  CHECK(isProperColoring(pet, witness));

  CHECK_THROWS_AS(bruteChromatic(randomGraph(21, 0.2, 1)), SizeCapError);
}

TEST_CASE("bruteChromatic sanity bounds over a random suite") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = randomGraph(4 + static_cast<int>(seed % 13), 0.3, seed);
    auto witness = bruteOptimalColoring(g);
    CHECK(isProperColoring(g, witness));
    CHECK(witness.palette <= g.maxDegree() + 1);
  }
}

TEST_CASE("bruteMds finds optima with dominating witnesses") {
  auto star = genStar(4);
  auto s = bruteMds(star);
  CHECK(s.size == 1);
  CHECK(dominates(star, s.witness, wholeVertexSet(star)));

  auto c6 = genCycle(6);
  auto c = bruteMds(c6);
  CHECK(c.size == 2);
  CHECK(dominates(c6, c.witness, wholeVertexSet(c6)));
  CHECK(dominates(c6, VertexSet({1, 4}), wholeVertexSet(c6)));  // a known optimum

  auto edgeless = Graph::fromEdges(3, {});
  CHECK(bruteMds(edgeless).size == 3);

  CHECK_THROWS_AS(bruteMds(randomGraph(21, 0.1, 1)), SizeCapError);
}

TEST_CASE("bruteMinTSpanner on fixed instances") {
  auto tree = genRandomTree(10, seeded(4));
  auto t1 = bruteMinTSpanner(tree, 3);
  CHECK(t1.size == tree.edgeCount());  // no tree edge is removable

  auto s2 = bruteMinTSpanner(k4(), 2);
  CHECK(s2.size == 3);
  CHECK(validateStretch(k4(), s2.witness, 2).report.passed);

  auto c5 = genCycle(5);
  auto s3 = bruteMinTSpanner(c5, 4);
  CHECK(s3.size == 4);
  CHECK(validateStretch(c5, s3.witness, 4).report.passed);

  // |E| above the cap is a hard error.
  std::vector<Edge> big;
  for (Vertex v = 2; v <= 28; ++v) big.emplace_back(1, v);
  CHECK_THROWS_AS(bruteMinTSpanner(Graph::fromEdges(28, big), 2), SizeCapError);
}

TEST_CASE("bruteMinSpannerCover handles required-vs-candidate splits") {
  // Path 1-2-3 plus a chord 1-3: required only the chord's cluster edges.
  auto g = Graph::fromEdges(3, std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}});
  std::vector<Edge> candidates{{1, 2}, {2, 3}, {1, 3}};
  std::vector<Edge> required{{1, 3}};
  auto cover = bruteMinSpannerCover(g, candidates, required, 2);
  CHECK(cover.size == 1);  // the chord itself is the cheapest route
}

TEST_CASE("validateDecomposition passes good inputs and catches planted faults") {
  auto c6 = genCycle(6);

  NetworkDecomposition singles;
  for (Vertex v = 1; v <= 6; ++v) {
    singles.clusters.push_back(VertexSet({v}));
    singles.labels.push_back(v);
    singles.leaders.push_back(v);
    singles.level.push_back(1);
  }
  singles.cert = {0, 6, 2};
  CHECK(validateDecomposition(c6, singles).passed);

  NetworkDecomposition halves;
  halves.clusters = {VertexSet({1, 2, 3}), VertexSet({4, 5, 6})};
  halves.labels = {1, 2};
  halves.leaders = {1, 4};
  halves.level = {1, 1};
  halves.cert = {2, 2, 2};
  CHECK(validateDecomposition(c6, halves).passed);

  // Planted fault: adjacent clusters sharing a label.
  auto bad = halves;
  bad.labels = {1, 1};
  auto report = validateDecomposition(c6, bad);
  CHECK_FALSE(report.passed);
  bool sawRule = false;
  for (const auto& [rule, witness] : report.violations) sawRule |= rule == "proper-labels";
  CHECK(sawRule);

  // Planted fault: missing coverage.
  NetworkDecomposition partial = halves;
  partial.clusters[1] = VertexSet({4, 5});
  CHECK_FALSE(validateDecomposition(c6, partial).passed);

  // Planted fault: diameter above cert.
  NetworkDecomposition tight = halves;
  tight.cert.diameter = 1;
  CHECK_FALSE(validateDecomposition(c6, tight).passed);
}

TEST_CASE("validateHPartition catches forward-degree violations") {
  auto edgeless = Graph::fromEdges(4, {});
  HPartition ok;
  ok.bands = {wholeVertexSet(edgeless)};
  ok.degreeBound = 0;
  CHECK(validateHPartition(edgeless, ok).passed);

  auto star = genStar(3);
  HPartition bad;
  bad.bands = {wholeVertexSet(star)};
  bad.degreeBound = 2;  // the center has 3 same-band neighbors
  auto report = validateHPartition(star, bad);
  CHECK_FALSE(report.passed);
}

TEST_CASE("peel outputs on random trees always validate") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto tree = genRandomTree(30, seeded(seed));
    auto h = peelHPartition(tree, 1, 1.0);
    CHECK(validateHPartition(tree, h).passed);
  }
}

TEST_CASE("validateStretch reports max stretch and witnesses failures") {
  auto c5 = genCycle(5);
  auto all = validateStretch(c5, c5.edges(), 1);
  CHECK(all.report.passed);
  CHECK(all.maxStretch == 1);

  std::vector<Edge> minusOne{{1, 2}, {2, 3}, {3, 4}, {4, 5}};  // drop (1,5)
  auto ok = validateStretch(c5, minusOne, 4);
  CHECK(ok.report.passed);
  CHECK(ok.maxStretch == 4);

  auto fail = validateStretch(c5, minusOne, 3);
  CHECK_FALSE(fail.report.passed);
  CHECK(fail.report.violations.front().first == "stretch");
}

TEST_CASE("per-edge stretch validation is equivalent to all-pairs validation") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto g = randomGraph(10, 0.3, seed);
    if (g.edgeCount() == 0) continue;
    // Random spanning-ish subset: keep each edge with probability 0.7.
    std::vector<Edge> h;
    int i = 0;
    for (const auto& e : g.edges())
      if (rngFor(seed, "test-h", ++i, 0).bernoulli(0.7)) h.push_back(e);
    const int t = 3;
    bool perEdge = validateStretch(g, h, t).report.passed;

    Graph hg = Graph::fromEdges(g.vertexCount(), h);
    bool allPairs = true;
    for (Vertex u = 1; u <= g.vertexCount(); ++u) {
      auto dg = bfsDistances(g, u);
      auto dh = bfsDistances(hg, u);
      for (Vertex v = 1; v <= g.vertexCount(); ++v) {
        if (dg[v] < 0) continue;
        if (dh[v] < 0 || dh[v] > t * dg[v]) allPairs = false;
      }
    }
    CHECK(perEdge == allPairs);
  }
}
