#pragma once

#include "nc/poly.hpp"

#include <vector>

namespace nc {

// d-th cyclotomic polynomial, by iterated exact division of q^d - 1 by
// the lower cyclotomics. Memoized; thread-safe.
const IntPoly& cyclotomic(int d);

// Element of Q[q] / Phi_d(q): an exact stand-in for a value at a
// primitive d-th root of unity. Coordinates are in the power basis
// 1, q, ..., q^(phi(d)-1).
class CycloValue {
  public:
    CycloValue(int d, std::vector<Rat> coords);

    // Reduce a polynomial modulo Phi_d.
    static CycloValue from_poly(const RatPoly& p, int d);

    int order() const { return d_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    // All coordinates beyond index 0 are zero.
    bool is_rational() const;
    // Rational and coordinate 0 an integer. This is a named predicate on
    // purpose: callers must ask before narrowing.
    bool is_rational_integer() const;
    // Throws NotRationalInteger unless is_rational_integer().
    Int as_integer() const;

    CycloValue operator+(const CycloValue& o) const;
    CycloValue operator-(const CycloValue& o) const;
    CycloValue operator*(const CycloValue& o) const;
    // Multiplicative inverse in the quotient field; the value must be nonzero.
    CycloValue inverse() const;

    bool operator==(const CycloValue& o) const;
    bool operator!=(const CycloValue& o) const { return !(*this == o); }

  private:
    RatPoly as_poly() const;
    int d_;
    std::vector<Rat> coords_;
};

// p reduced modulo the d-th cyclotomic polynomial.
CycloValue eval_at_root(const IntPoly& p, int d);
CycloValue eval_at_root(const RatPoly& p, int d);

// Limit of num/den as q approaches a primitive d-th root of unity:
// cancels the maximal common power of Phi_d by exact division, then
// divides in the quotient field. Throws PoleAtRoot when den still
// reduces to zero after cancellation.
CycloValue eval_limit_at_root(const IntPoly& num, const IntPoly& den, int d);

}  // namespace nc
