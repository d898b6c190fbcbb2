#pragma once

#include "nc/cyclotomic.hpp"
#include "nc/enumerate.hpp"
#include "nc/numeric.hpp"
#include "nc/poly.hpp"
#include "nc/qanalogue.hpp"

#include <functional>
#include <optional>
#include <string>

namespace nc {

// Count of non-crossing connected graphs on n vertices with k edges:
//   (1/(n-1)) C(3n-3, n+k) C(k-1, n-2)
// Zero outside n >= 2, n-1 <= k <= 2n-3.
Int count_connected(int n, int k);

// The q-analogue: [3n-3 brack n+k]_q [k-1 brack n-2]_q / [n-1]_q as an
// exact polynomial quotient. Zero polynomial outside the valid range.
// A DivisionNotExact here is a build-breaking finding, not an input error.
IntPoly qpoly_connected(int n, int k);

// qpoly_connected evaluated at a primitive d-th root of unity (d | n),
// asserted to be a rational integer.
Int connected_at_root(int n, int k, int d);

// Fixed-point counts at q = -1, split by edge parity (n even):
//   k odd:  C(3n'-2, n'+k'-1) C(k'-1, n'-1),  n' = n/2, k' = (k+1)/2
//   k even: C((3n-4)/2, (n+k)/2) C((k-2)/2, (n-2)/2)
Int closed_s2_odd(int n, int k);
Int closed_s2_even(int n, int k);

// Antipodal-pair count: C(3n-1, n+k) C(k-1, n-1) for graphs on 2n
// vertices with k edge orbits under the half-turn.
Int closed_a(int n, int k);

// Two-component split count: (2/(n-2)) C(3n-5, n+k) C(k-1, n-3), n >= 3.
Int closed_d(int n, int k);

// Edge-1-to-m count, back-solved from s2(2m-2, 2j-1) = (m-1) f(m, j);
// the division must be exact (NonIntegerResult otherwise).
Int closed_f(int m, int j);

// Fixed points under rotation of order d >= 3 (d | n): zero when d does
// not divide k, else C(3n'-1, n'+k') C(k'-1, n'-1) with n' = n/d, k' = k/d.
Int closed_sd(int n, int k, int d);

// The inner-polygon convolution: direct evaluation of
//   sum_m sum_{k_1+..+k_m=k} sum_{n_1+..+n_m=n+m} (n_m - 1) f(n_m,k_m) prod_{i<m} f(n_i,k_i)
// over compositions with n_i >= 2, k_i >= 1, with f supplied by the caller.
Int a_convolution(int n, int k, const std::function<Int(int, int)>& f);

// A counting q-analogue as a numerator/denominator pair, with the exact
// quotient when polynomial division succeeds.
struct QFormula {
    std::string name;
    IntPoly numerator;
    IntPoly denominator;
    std::optional<IntPoly> quotient;

    // Division-first evaluation: the quotient at the root when it exists,
    // otherwise the limit of numerator/denominator (PoleAtRoot propagates).
    CycloValue at_root(int d) const;
    Int integer_at_root(int d) const;
    bool is_polynomial() const { return quotient.has_value(); }
};

// Plain counts of the six families. The index k follows each formula's
// own convention: edges for connected/graph, diagonals for dissection,
// components for forest, and for partitions the block count is n - k.
// k is ignored for trees.
Int family_count(FamilyTag family, int n, int k);

// The matching q-analogues (same k conventions).
QFormula family_qpoly(FamilyTag family, int n, int k);

}  // namespace nc
