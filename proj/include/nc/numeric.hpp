#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient, defined for all integer arguments:
//   k < 0            -> 0
//   n >= 0, k > n    -> 0
//   n < 0            -> (-1)^k C(k-n-1, k)
Int binomial(long long n, long long k);

// Exact integer quotient; throws NonIntegerResult if b does not divide a.
Int exact_div(const Int& a, const Int& b);

// True iff the rational is an integer.
bool is_integer(const Rat& r);

// Euler totient, by trial-division factorization.
long long totient(long long d);

}  // namespace nc
