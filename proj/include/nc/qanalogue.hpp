#pragma once

#include "nc/poly.hpp"

namespace nc {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q is the zero polynomial.
IntPoly q_integer(int n);

// [n]!_q = [n]_q [n-1]_q ... [1]_q.
IntPoly q_factorial(int n);

// Gaussian binomial as an explicit polynomial. Zero when k < 0 or k > n.
// Reference implementation: the Pascal-type recurrence
//   [n k] = [n-1 k-1] + q^k [n-1 k].
IntPoly q_binomial(int n, int k);

// Same value by exact division of q-factorials; must agree with
// q_binomial everywhere (tested).
IntPoly q_binomial_by_division(int n, int k);

}  // namespace nc
