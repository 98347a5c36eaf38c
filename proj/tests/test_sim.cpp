#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "netdecomp/sim.hpp"

using namespace netdecomp;

TEST_CASE("ledger charge arithmetic") {
  RoundLedger ledger;
  ledger.charge("partition", 1, 1);
  CHECK(ledger.total == 1);

  RoundLedger ledger2;
  ledger2.charge("dec-small-level-2", 5, 3);
  CHECK(ledger2.total == 15);

  RoundLedger ledger3;
  ledger3.charge("a", 2, 3);
  ledger3.charge("b", 1, 9);
  CHECK(ledger3.total == 15);
  CHECK(ledger3.entries.size() == 2);
  for (const auto& e : ledger3.entries) CHECK(e.charged == e.base * e.multiplier);

  CHECK_THROWS_AS(ledger.charge("bad", -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(ledger.charge("bad", 1, 0), std::invalid_argument);
}

TEST_CASE("ledger absorb is additive and scales multipliers") {
  RoundLedger inner;
  inner.charge("x", 2, 3);
  inner.charge("y", 1, 1);

  RoundLedger outer;
  outer.charge("pre", 1);
  auto before = outer.total;
  outer.absorb(inner, 5);
  CHECK(outer.total == before + 2 * 3 * 5 + 1 * 1 * 5);
  CHECK(outer.total >= before);  // totals never decrease
}

TEST_CASE("rngFor is a pure function of its key") {
  auto a = rngFor(42, "partition", 7, 3);
  auto b = rngFor(42, "partition", 7, 3);
  for (int i = 0; i < 64; ++i) CHECK(a.nextU64() == b.nextU64());
}

TEST_CASE("distinct keys give distinct streams") {
  // First 128 bits must differ across a large key set: vertices, rounds,
  // scopes and seeds all separate the streams.
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  int count = 0;
  for (int vertex = 1; vertex <= 100; ++vertex) {
    for (int round = 0; round < 25; ++round) {
      for (auto scope : {"partition", "random-color", "luby"}) {
        auto s = rngFor(1, scope, vertex, round);
        auto fingerprint = std::make_pair(s.nextU64(), s.nextU64());
        CHECK(seen.insert(fingerprint).second);
        ++count;
      }
    }
  }
  CHECK(count == 100 * 25 * 3);

  auto s1 = rngFor(1, "partition", 1, 0);
  auto s2 = rngFor(1, "partition", 2, 0);
  CHECK(s1.nextU64() != s2.nextU64());
}

TEST_CASE("stream utilities are deterministic and in range") {
  auto s = rngFor(9, "test", 1, 1);
  for (int i = 0; i < 1000; ++i) {
    double u = s.nextUnit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  auto t = rngFor(9, "test", 2, 1);
  int histogram[7] = {0};
  for (int i = 0; i < 7000; ++i) ++histogram[t.nextInt(7)];
  for (int c : histogram) CHECK(c > 700);  // coarse uniformity only

  CHECK(rngFor(3, "p", 1, 1).bernoulli(1.0));  // p = 1 always fires
  CHECK_FALSE(rngFor(3, "p", 1, 1).bernoulli(0.0));
}
