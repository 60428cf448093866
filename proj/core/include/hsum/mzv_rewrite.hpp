#pragma once

#include <utility>

#include "hsum/composition.hpp"
#include "hsum/mzv_expr.hpp"

namespace hsum {

// Sign s in z[n,1] = n/2 z[n+1] + s/2 sum_{i=1}^{n-2} z[n-i] z[i+1].
// Fixed by numeric adjudication (z[3,1] = z[4]/4 needs s = -1).
inline constexpr int kEulerSumSign = -1;

inline constexpr int kHeightOneBound = 12;

// Replace each z[I] by the representative of {I, tau(I)} with smaller
// depth; equal depths pick the lexicographically smaller one.
Composition dual_representative(const Composition& I);
MzvExpr dual_canonicalize(const MzvExpr& e);

// Both sides of the derivation relation at admissible I.
std::pair<MzvExpr, MzvExpr> derivation_relation(const Composition& I);

// z[n,1] (n >= 2) rewritten through Euler's formula with the adjudicated sign.
MzvExpr euler_formula(int n, int sign = kEulerSumSign);
MzvExpr euler_reduce(const MzvExpr& e);

// z[m+1, 1, ..., 1] (n-1 ones) as a polynomial in single zetas.
MzvExpr height_one_reduce(int m, int n, int bound = kHeightOneBound);

// Products of zetas rewritten as linear combinations via the stuffle.
MzvExpr expand_products(const MzvExpr& e);

// Duality, Euler and height-one reductions applied to a fixed point.
MzvExpr simplify(const MzvExpr& e);

}  // namespace hsum
