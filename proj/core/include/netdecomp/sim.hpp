#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace netdecomp {

/// Sentinel round budget: iterate color reductions until the palette stops
/// shrinking (the log* regime).
inline constexpr int kUntilFixpoint = 0;

enum class GammaMode { Exact, Asymptotic };

/**
   Run-wide configuration: the RNG seed and the algorithm constants.

   cThreshold is the constant c in the recursion-termination threshold
   2c * n^{1/k} * ln n; cDegree is the constant in the degree bound
   c * q * ln n. Natural log is used in all probability thresholds,
   log2 in palette-size formulas.
 */
struct SimConfig {
  std::uint64_t seed = 1;
  double cThreshold = 2.0;
  double cDegree = 4.0;
  GammaMode gammaMode = GammaMode::Exact;
};

/**
   Per-run accounting of simulated synchronous rounds. Rounds executed on a
   supergraph are charged with a multiplier covering the simulation of each
   supernode by its leader.
 */
struct RoundLedger {
  struct Entry {
    std::string phase;
    std::int64_t base = 0;
    std::int64_t multiplier = 1;
    std::int64_t charged = 0;
  };

  std::vector<Entry> entries;
  std::int64_t total = 0;

  /// Appends an entry charging base*multiplier rounds.
  void charge(std::string phase, std::int64_t base, std::int64_t multiplier = 1);

  /// Appends all entries of a nested phase, scaling multipliers by `scale`.
  void absorb(const RoundLedger& inner, std::int64_t scale = 1);
};

/**
   Deterministic counter-based random stream. Pure function of its key, so
   equal keys replay identical bits on any platform and vertices may be
   evaluated in any order.
 */
class RandomStream {
public:
  explicit RandomStream(std::uint64_t state) : state_(state) {}

  std::uint64_t nextU64();

  /// Uniform double in [0, 1) with 53 random bits.
  double nextUnit();

  bool bernoulli(double p) { return nextUnit() < p; }

  /// Uniform integer in [0, bound); unbiased via rejection. bound >= 1.
  int nextInt(int bound);

private:
  std::uint64_t state_;
};

/// Stream keyed by (seed, scope, vertex, round). Distinct keys give
/// independent-quality streams.
RandomStream rngFor(std::uint64_t seed, std::string_view scope, int vertex, int round);

}  // namespace netdecomp
