#include "netdecomp/union_free.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace netdecomp {

namespace {

bool isPrime(int x) {
  if (x < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

int nextPrimeAbove(int x) {
  int p = x + 1;
  while (!isPrime(p)) ++p;
  return p;
}

// q^e >= bound without overflow.
bool powAtLeast(int q, int e, long bound) {
  long acc = 1;
  for (int i = 0; i < e; ++i) {
    acc *= q;
    if (acc >= bound) return true;
  }
  return acc >= bound;
}

}  // namespace

UnionFreeFamily buildUnionFree(int familySize, int delta) {
  if (delta < 0) throw std::invalid_argument("union-free: delta must be >= 0");
  if (familySize < delta + 1)
    throw std::invalid_argument("union-free: family size must be >= delta + 1");

  int degree = 1, q = 2;
  for (;; ++degree) {
    q = nextPrimeAbove(delta * degree);
    if (powAtLeast(q, degree + 1, familySize)) break;
  }

  UnionFreeFamily family;
  family.delta = delta;
  family.familySize = familySize;
  family.groundSize = q * q;
  family.sets.reserve(familySize);

  std::vector<int> coeffs(degree + 1, 0);
  for (int i = 0; i < familySize; ++i) {
    // Coefficients of the i-th polynomial are the base-q digits of i.
    int rest = i;
    for (int j = 0; j <= degree; ++j) {
      coeffs[j] = rest % q;
      rest /= q;
    }
    std::vector<int> set;
    set.reserve(q);
    for (int x = 0; x < q; ++x) {
      std::int64_t val = 0;
      for (int j = degree; j >= 0; --j) val = (val * x + coeffs[j]) % q;
      set.push_back(x * q + static_cast<int>(val) + 1);
    }
    family.sets.push_back(std::move(set));
  }
  return family;
}

bool exhaustiveUnionFreeCheck(const UnionFreeFamily& family) {
  const int p = family.familySize;
  const int delta = family.delta;
  if (static_cast<int>(family.sets.size()) != p) return false;
  for (const auto& s : family.sets)
    for (int e : s)
      if (e < 1 || e > family.groundSize) return false;
  if (delta == 0) {
    for (const auto& s : family.sets)
      if (s.empty()) return false;
    return true;
  }

  std::vector<char> covered(family.groundSize + 1, 0);
  std::vector<int> pick(delta, 0);

  // For every choice of delta covering sets, test every other set for
  // containment in their union.
  auto testChoice = [&](const std::vector<int>& choice) {
    std::fill(covered.begin(), covered.end(), 0);
    for (int idx : choice)
      for (int e : family.sets[idx]) covered[e] = 1;
    for (int s0 = 0; s0 < p; ++s0) {
      if (std::find(choice.begin(), choice.end(), s0) != choice.end()) continue;
      bool contained = true;
      for (int e : family.sets[s0]) {
        if (!covered[e]) {
          contained = false;
          break;
        }
      }
      if (contained) return false;
    }
    return true;
  };

  // Enumerate combinations of delta indices.
  for (int i = 0; i < delta; ++i) pick[i] = i;
  for (;;) {
    if (!testChoice(pick)) return false;
    int i = delta - 1;
    while (i >= 0 && pick[i] == p - delta + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < delta; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace netdecomp
