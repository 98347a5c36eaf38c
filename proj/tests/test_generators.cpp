#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdecomp/generators.hpp"
#include "netdecomp/graph_io.hpp"
#include "test_support.hpp"

using namespace netdecomp;
using namespace netdecomp::testsupport;

TEST_CASE("fixed generators produce the expected shapes") {
  auto c5 = genCycle(5);
  CHECK(c5.vertexCount() == 5);
  CHECK(c5.edgeCount() == 5);
  for (Vertex v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);

  auto star = genStar(6);
  CHECK(star.degree(1) == 6);

  auto grid = genGrid(4, 3);
  CHECK(grid.vertexCount() == 12);
  CHECK(grid.edgeCount() == 3 * 3 + 4 * 2);
}

TEST_CASE("gnp honors the probability extremes and the seed") {
  CHECK(genGnp(100, 0.0, seeded(1)).edgeCount() == 0);
  CHECK(genGnp(12, 1.0, seeded(1)).edgeCount() == 66);

  auto a = genGnp(50, 0.1, seeded(5));
  auto b = genGnp(50, 0.1, seeded(5));
  CHECK(graphToText(a) == graphToText(b));
  auto c = genGnp(50, 0.1, seeded(6));
  CHECK(graphToText(a) != graphToText(c));
}

TEST_CASE("random trees are trees") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto t = genRandomTree(25, seeded(seed));
    CHECK(t.edgeCount() == 24);
    CHECK(connectedComponents(t).size() == 1);
    CHECK_FALSE(girth(t).has_value());
  }
}

TEST_CASE("girth6 builds projective-plane incidence graphs") {
  // q = 2 gives the Heawood graph: 14 vertices, 3-regular, girth 6.
  auto heawood = genGirth6(2);
  CHECK(heawood.vertexCount() == 14);
  for (Vertex v = 1; v <= 14; ++v) CHECK(heawood.degree(v) == 3);
  CHECK(girth(heawood) == 6);

  auto g3 = genGirth6(3);
  CHECK(g3.vertexCount() == 2 * 13);
  for (Vertex v = 1; v <= g3.vertexCount(); ++v) CHECK(g3.degree(v) == 4);
  CHECK(girth(g3) == 6);

  CHECK_THROWS_AS(genGirth6(4), std::invalid_argument);  // not prime
  CHECK_THROWS_AS(genGirth6(1), std::invalid_argument);
}
