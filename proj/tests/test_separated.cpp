#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netdecomp/generators.hpp"
#include "netdecomp/json_io.hpp"
#include "netdecomp/separated.hpp"
#include "netdecomp/validate.hpp"
#include "test_support.hpp"

using namespace netdecomp;
using namespace netdecomp::testsupport;

TEST_CASE("rulingSet on a singleton universe returns that vertex") {
  auto c6 = genCycle(6);
  for (auto method : {RulingMethod::LubyPower, RulingMethod::AglpDeterministic}) {
    auto rs = rulingSet(c6, VertexSet({4}), 3, method, seeded(1));
    CHECK(rs.set.members == VertexSet({4}));
    CHECK(rs.set.dom == 0);
    CHECK(validateRulingSet(c6, rs.set).passed);
  }
}

TEST_CASE("luby-power ruling sets satisfy both invariants") {
  auto c6 = genCycle(6);
  auto rs = rulingSet(c6, wholeVertexSet(c6), 3, RulingMethod::LubyPower, seeded(1));
  CHECK(validateRulingSet(c6, rs.set).passed);
  CHECK(rs.set.dom <= 2);  // maximality of the power-graph MIS

  auto p4 = genPath(4);
  auto mis = rulingSet(p4, wholeVertexSet(p4), 2, RulingMethod::LubyPower, seeded(1));
  CHECK(validateRulingSet(p4, mis.set).passed);
  CHECK(mis.set.dom <= 1);  // an MIS dominates at radius 1

  CHECK_THROWS_AS(rulingSet(c6, VertexSet{}, 3, RulingMethod::LubyPower, seeded(1)),
                  std::invalid_argument);
}

TEST_CASE("aglp ruling set is seed-free and respects its bounds") {
  for (std::uint64_t instance = 1; instance <= 10; ++instance) {
    auto g = randomGraph(60, 0.08, instance);
    auto u = wholeVertexSet(g);
    auto a = rulingSet(g, u, 3, RulingMethod::AglpDeterministic, seeded(1));
    auto b = rulingSet(g, u, 3, RulingMethod::AglpDeterministic, seeded(999));
    CHECK(a.set.members == b.set.members);  // no seed dependence
    CHECK(validateRulingSet(g, a.set).passed);
    int bits = 0;
    while ((1 << bits) <= g.vertexCount()) ++bits;
    CHECK(a.set.dom <= 3 * bits);
  }
}

TEST_CASE("rsPartitionSplit: low-degree graphs land entirely in A") {
  auto p4 = genPath(4);  // max degree 2 < q = 5
  auto res = rsPartitionSplit(p4, 5.0, 3, RulingMethod::AglpDeterministic, seeded(1));
  CHECK(res.aSide.size() == 4);
  CHECK(res.bSide.clusterCount() == 0);
}

TEST_CASE("rsPartitionSplit clusters the star around its center") {
  auto star = genStar(9);
  auto res = rsPartitionSplit(star, 5.0, 3, RulingMethod::AglpDeterministic, seeded(1));
  REQUIRE(res.bSide.clusterCount() == 1);
  CHECK(res.bSide.leaders[0] == 1);
  // The exploration radius is at least 1, so the whole closed neighborhood
  // of the center joins its cluster.
  CHECK(res.bSide.clusters[0].size() == 10);
  CHECK(res.aSide.empty());
}

TEST_CASE("rsPartitionSplit deterministic guarantees on C6") {
  auto c6 = genCycle(6);
  auto res = rsPartitionSplit(c6, 2.0, 3, RulingMethod::LubyPower, seeded(1));
  CHECK(res.aSide.empty());                  // every vertex has degree >= 2
  CHECK(res.bSide.clusterCount() <= 3);      // |B| <= n/q
  for (Vertex a : res.aSide) CHECK(c6.degree(a) < 2);

  CHECK_THROWS_AS(rsPartitionSplit(c6, 2.0, 2, RulingMethod::LubyPower, seeded(1)),
                  std::invalid_argument);  // sep < 3 breaks the counting
}

TEST_CASE("rsDecompose: terminal degree bound holds with zero tolerance") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = randomGraph(300, 0.03, seed + 40);
    RsDecomposeOptions opt;
    opt.k = 2;
    opt.method = RulingMethod::LubyPower;
    auto res = rsDecompose(g, opt, seeded(seed));
    CHECK(validateDecomposition(g, res.decomposition).passed);

    auto ch = extractHPartition(res.trace, res.decomposition);
    CHECK(ch.partition.degreeBound == static_cast<int>(std::ceil(std::sqrt(300.0))));
    CHECK(validateHPartition(ch.quotient.graph, ch.partition).passed);
  }
}

TEST_CASE("rsDecompose with aglp rulers is seed-free") {
  auto g = randomGraph(300, 0.03, 77);
  RsDecomposeOptions opt;
  opt.k = 2;
  auto a = rsDecompose(g, opt, seeded(1));
  auto b = rsDecompose(g, opt, seeded(12345));
  CHECK(decompositionToJson(a.decomposition) == decompositionToJson(b.decomposition));
  CHECK(validateDecomposition(g, a.decomposition).passed);

  // cert.diameter follows the realized exploration radii.
  int L = a.trace.depth();
  int dom = a.decomposition.realizedDom;
  CHECK(a.decomposition.cert.diameter <=
        static_cast<int>(std::pow(2 * dom + 1, L - 1)) - 1 + 0);
}

TEST_CASE("sepPartitionSplit with sigma=2 coincides with partitionSplit") {
  auto g = randomGraph(50, 0.1, 9);
  auto a = partitionSplit(g, 3.0, seeded(4));
  auto b = sepPartitionSplit(g, 3.0, 2, seeded(4));
  CHECK(a.aSide == b.aSide);
  REQUIRE(a.bSide.clusterCount() == b.bSide.clusterCount());
  for (int i = 0; i < a.bSide.clusterCount(); ++i) {
    CHECK(a.bSide.clusters[i] == b.bSide.clusters[i]);
    CHECK(a.bSide.leaders[i] == b.bSide.leaders[i]);
  }
}

TEST_CASE("sepPartitionSplit q=1 puts every vertex in its own cluster") {
  auto p7 = genPath(7);
  auto res = sepPartitionSplit(p7, 1.0, 3, seeded(2));
  CHECK(res.aSide.empty());
  CHECK(res.bSide.clusterCount() == 7);
}

TEST_CASE("sepPartitionSplit grows connected clusters of bounded diameter") {
  auto p7 = genPath(7);
  auto res = sepPartitionSplit(p7, 3.0, 3, seeded(2));
  for (const auto& c : res.bSide.clusters) {
    auto diam = strongDiameter(p7, c);
    REQUIRE(diam.has_value());  // connected
    CHECK(*diam <= 4);          // 2*sigma - 2
  }
}

TEST_CASE("sepPartitionSplit A-side ball bound holds in most seeded trials") {
  // Whp claim: every unclustered vertex has fewer than c*q*ln(n) vertices in
  // its (sigma-1)-ball.
  const int sigma = 3;
  const double q = 4.0;
  int holds = 0;
  const int trials = 30;
  for (std::uint64_t seed = 1; seed <= trials; ++seed) {
    auto g = randomGraph(200, 0.04, seed + 70);
    auto cfg = seeded(seed);
    auto res = sepPartitionSplit(g, q, sigma, cfg);
    double bound = cfg.cDegree * q * std::log(g.vertexCount());
    bool ok = true;
    for (Vertex a : res.aSide)
      if (ball(g, a, sigma - 1).size() >= bound) ok = false;
    holds += ok;
  }
  CHECK(holds >= trials - 2);
}

TEST_CASE("sepDecompose separates equal labels by sigma") {
  auto c8 = genCycle(8);
  SepDecomposeOptions opt;
  opt.k = 2;
  opt.sigma = 3;
  auto res = sepDecompose(c8, opt, seeded(1));
  CHECK(res.decomposition.cert.separation == 3);
  CHECK(validateDecomposition(c8, res.decomposition).passed);

  auto g = randomGraph(200, 0.05, 5);
  auto res2 = sepDecompose(g, opt, seeded(5));
  CHECK(validateDecomposition(g, res2.decomposition).passed);
  CHECK(res2.decomposition.cert.diameter <= static_cast<int>(std::pow(2 * 3 - 1, 2 - 1)) - 1);
}

TEST_CASE("sepDecompose with forced recursion grows separated multi-vertex clusters") {
  auto g = genCycle(200);
  auto cfg = seeded(4);
  cfg.cThreshold = 1.0;  // keep the recursion on the two-level path
  SepDecomposeOptions opt;
  opt.k = 2;
  opt.sigma = 3;
  auto res = sepDecompose(g, opt, cfg);
  REQUIRE(res.trace.depth() == 2);
  CHECK(res.decomposition.cert.diameter == 4);  // (2*sigma-1)^{k-1} - 1
  bool hasBigCluster = false;
  for (const auto& c : res.decomposition.clusters) hasBigCluster |= c.size() > 1;
  CHECK(hasBigCluster);
  CHECK(validateDecomposition(g, res.decomposition).passed);
}

TEST_CASE("sepDecompose sigma=2 reproduces the plain cluster structure") {
  auto g = randomGraph(150, 0.05, 8);
  auto cfg = seeded(8);
  cfg.cThreshold = 1.0;
  SepDecomposeOptions sopt;
  sopt.k = 2;
  sopt.sigma = 2;
  auto sep = sepDecompose(g, sopt, cfg);
  DecomposeOptions dopt;
  dopt.k = 2;
  auto plain = decompose(g, dopt, cfg);
  REQUIRE(sep.decomposition.clusterCount() == plain.decomposition.clusterCount());
  for (int i = 0; i < sep.decomposition.clusterCount(); ++i)
    CHECK(sep.decomposition.clusters[i] == plain.decomposition.clusters[i]);
  CHECK(validateDecomposition(g, sep.decomposition).passed);
}

TEST_CASE("weakSepDecompose certifies weak diameters and separation") {
  auto c8 = genCycle(8);
  DecomposeOptions opt;
  opt.k = 2;
  auto res = weakSepDecompose(c8, opt, 3, seeded(1));
  CHECK(res.decomposition.cert.separation == 3);
  CHECK(validateDecomposition(c8, res.decomposition, DiameterMode::Weak).passed);

  // sigma=2 is bit-identical to the plain decomposition.
  auto same = weakSepDecompose(c8, opt, 2, seeded(1));
  auto plain = decompose(c8, opt, seeded(1));
  CHECK(decompositionToJson(same.decomposition) == decompositionToJson(plain.decomposition));

  auto star = genStar(5);
  DecomposeOptions opt1;
  opt1.k = 1;
  auto singletons = weakSepDecompose(star, opt1, 4, seeded(1));
  CHECK(singletons.decomposition.clusterCount() == 6);
  CHECK(validateDecomposition(star, singletons.decomposition, DiameterMode::Weak).passed);
}

TEST_CASE("lowIntersecting partitions pass the exhaustive ball audit") {
  auto edgeless = Graph::fromEdges(6, {});
  auto flat = lowIntersecting(edgeless, 2, 2, seeded(1));
  CHECK(validateLowIntersecting(edgeless, flat).passed);
  for (Vertex v = 1; v <= 6; ++v) CHECK(ball(edgeless, v, 2).size() == 1);

  auto c10 = genCycle(10);
  auto li = lowIntersecting(c10, 2, 1, seeded(1));
  CHECK(li.gamma == 1);
  CHECK(validateLowIntersecting(c10, li).passed);

  auto p9 = genPath(9);
  auto li2 = lowIntersecting(p9, 2, 2, seeded(3));
  CHECK(validateLowIntersecting(p9, li2).passed);
  CHECK(li2.source.cert.separation == 5);  // 2*gamma + 1
}

TEST_CASE("skeletonSpanner: trees per cluster plus one edge per adjacency") {
  auto c6 = genCycle(6);

  // Singleton decomposition: the skeleton is the graph itself.
  DecomposeOptions opt1;
  opt1.k = 1;
  auto singles = decompose(c6, opt1, seeded(1));
  auto sk1 = skeletonSpanner(c6, singles.decomposition);
  CHECK(sk1.edges == c6.edges());
  CHECK(sk1.maxStretch == 1);

  // Two arcs: 2+2 tree edges plus one crossing edge, stretch measured.
  NetworkDecomposition two;
  two.clusters = {VertexSet({1, 2, 3}), VertexSet({4, 5, 6})};
  two.labels = {1, 2};
  two.leaders = {1, 4};
  two.level = {1, 1};
  two.cert = {2, 2, 2};
  auto sk2 = skeletonSpanner(c6, two);
  CHECK(sk2.edges.size() == 5);
  CHECK(sk2.maxStretch <= 2 * two.cert.diameter + 1);

  // A star contracted to one cluster is its own BFS tree.
  auto star = genStar(4);
  NetworkDecomposition one;
  one.clusters = {wholeVertexSet(star)};
  one.labels = {1};
  one.leaders = {1};
  one.level = {1};
  one.cert = {2, 1, 2};
  auto sk3 = skeletonSpanner(star, one);
  CHECK(sk3.edges.size() == 4);
  CHECK(sk3.maxStretch <= 2);

  // Weak (disconnected) clusters are rejected.
  NetworkDecomposition weak;
  weak.clusters = {VertexSet({1, 4}), VertexSet({2, 3, 5, 6})};
  weak.labels = {1, 2};
  weak.leaders = {1, 2};
  weak.level = {1, 1};
  weak.cert = {4, 2, 2};
  CHECK_THROWS_AS(skeletonSpanner(c6, weak), std::invalid_argument);
}

TEST_CASE("skeleton spanner edge count bound over random graphs") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto g = randomGraph(80, 0.08, seed + 7);
    SepDecomposeOptions opt;
    opt.k = 2;
    opt.sigma = 2;
    auto dec = sepDecompose(g, opt, seeded(seed));
    auto sk = skeletonSpanner(g, dec.decomposition);
    auto sg = contract(g, dec.decomposition.clusters, dec.decomposition.leaders);
    CHECK(static_cast<long>(sk.edges.size()) <=
          g.vertexCount() - dec.decomposition.clusterCount() + sg.graph.edgeCount());
    CHECK(sk.maxStretch <= 2 * dec.decomposition.cert.diameter + 1);
  }
}
