#include "netdecomp/sim.hpp"

#include <limits>
#include <stdexcept>

namespace netdecomp {

void RoundLedger::charge(std::string phase, std::int64_t base, std::int64_t multiplier) {
  if (base < 0) throw std::invalid_argument("ledger: base rounds must be >= 0");
  if (multiplier < 1) throw std::invalid_argument("ledger: multiplier must be >= 1");
  Entry e;
  e.phase = std::move(phase);
  e.base = base;
  e.multiplier = multiplier;
  e.charged = base * multiplier;
  total += e.charged;
  entries.push_back(std::move(e));
}

void RoundLedger::absorb(const RoundLedger& inner, std::int64_t scale) {
  for (const auto& e : inner.entries) charge(e.phase, e.base, e.multiplier * scale);
}

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t RandomStream::nextU64() { return splitmix64(state_); }

double RandomStream::nextUnit() {
  return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
}

int RandomStream::nextInt(int bound) {
  if (bound < 1) throw std::invalid_argument("nextInt: bound must be >= 1");
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % b);
  for (;;) {
    std::uint64_t x = nextU64();
    if (x < limit) return static_cast<int>(x % b);
  }
}

RandomStream rngFor(std::uint64_t seed, std::string_view scope, int vertex, int round) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s);
  s = mixed ^ fnv1a64(scope);
  mixed = splitmix64(s);
  s = mixed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(vertex)) << 32 |
               static_cast<std::uint32_t>(round));
  mixed = splitmix64(s);
  return RandomStream(mixed);
}

}  // namespace netdecomp
