#pragma once

#include <vector>

namespace netdecomp {

/**
   A delta-union-free set family: no member set is contained in the union of
   any delta other member sets. Drives one-round color reduction.
 */
struct UnionFreeFamily {
  int delta = 0;
  int familySize = 0;  // p
  int groundSize = 0;  // |X|
  std::vector<std::vector<int>> sets;  // familySize sets over 1..groundSize, sorted
};

/**
   Deterministic construction via polynomials over a prime field: pick the
   smallest degree d and prime q > delta*d with q^(d+1) >= familySize, and map
   the i-th polynomial f to { (x, f(x)) : x in F_q } over a ground set of size
   q^2. Two distinct degree-<=d polynomials agree on at most d points, so no
   set is covered by delta others.

   Requires familySize >= delta + 1.
 */
UnionFreeFamily buildUnionFree(int familySize, int delta);

/// Exhaustive check of the delta-union-free property over all (delta+1)-tuples.
/// Intended for small families; cost grows as familySize^(delta+1).
bool exhaustiveUnionFreeCheck(const UnionFreeFamily& family);

}  // namespace netdecomp
