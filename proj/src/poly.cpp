#include "nc/poly.hpp"

#include "nc/errors.hpp"

#include <sstream>
#include <vector>

namespace nc {

RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (const Int& v : p.coeffs()) c.emplace_back(v);
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw DivisionNotExact("divmod: zero divisor");
    std::vector<Rat> rem(num.coeffs());
    const int dd = den.degree();
    const Rat& lead = den.coeff(dd);
    int rd = num.degree();
    if (rd < dd) return {RatPoly(), num};
    std::vector<Rat> quot(static_cast<std::size_t>(rd - dd) + 1, Rat(0));
    while (rd >= dd) {
        Rat f = rem[static_cast<std::size_t>(rd)] / lead;
        quot[static_cast<std::size_t>(rd - dd)] = f;
        if (f != 0) {
            for (int i = 0; i <= dd; ++i)
                rem[static_cast<std::size_t>(rd - dd + i)] -= f * den.coeff(i);
        }
        rem[static_cast<std::size_t>(rd)] = 0;
        --rd;
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den) {
    auto [q, r] = divmod(to_rational(num), to_rational(den));
    if (!r.is_zero()) throw DivisionNotExact("poly_exact_div: remainder nonzero");
    std::vector<Int> c;
    c.reserve(q.coeffs().size());
    for (const Rat& v : q.coeffs()) {
        if (!is_integer(v)) throw DivisionNotExact("poly_exact_div: non-integer quotient coefficient");
        c.push_back(boost::multiprecision::numerator(v));
    }
    return IntPoly(std::move(c));
}

bool divides(const IntPoly& den, const IntPoly& num) {
    if (num.is_zero()) return true;
    if (den.is_zero()) return false;
    auto [q, r] = divmod(to_rational(num), to_rational(den));
    (void)q;
    return r.is_zero();
}

ExtGcd extended_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (!r0.is_zero()) {
        Rat inv_lead = Rat(1) / r0.coeff(r0.degree());
        r0 *= inv_lead;
        s0 *= inv_lead;
        t0 *= inv_lead;
    }
    return {r0, s0, t0};
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        const Int& c = p.coeff(i);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) os << mag;
        if (i == 1) os << "q";
        if (i > 1) os << "q^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }

}  // namespace nc
