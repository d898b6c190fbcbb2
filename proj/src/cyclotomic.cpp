#include "nc/cyclotomic.hpp"

#include "nc/errors.hpp"
#include "nc/numeric.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nc {

namespace {

IntPoly q_power_minus_one(int d) {
    IntPoly p = IntPoly::monomial(Int(1), d);
    p -= IntPoly::constant(Int(1));
    return p;
}

}  // namespace

const IntPoly& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::map<int, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // Phi_d = (q^d - 1) / prod of Phi_e over proper divisors e of d.
    IntPoly num = q_power_minus_one(d);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto ce = cache.find(e);
        if (ce == cache.end()) {
            // Fill lower entries first (unlocked recursion is not needed:
            // divisors are strictly smaller, compute inline).
            IntPoly sub = q_power_minus_one(e);
            for (int f = 1; f < e; ++f)
                if (e % f == 0) sub = poly_exact_div(sub, cache.at(f));
            ce = cache.emplace(e, std::move(sub)).first;
        }
        num = poly_exact_div(num, ce->second);
    }
    return cache.emplace(d, std::move(num)).first->second;
}

CycloValue::CycloValue(int d, std::vector<Rat> coords) : d_(d), coords_(std::move(coords)) {
    const auto phi = static_cast<std::size_t>(cyclotomic(d).degree());
    if (coords_.size() > phi) throw std::invalid_argument("CycloValue: more coordinates than phi(d)");
    coords_.resize(phi, Rat(0));
}

CycloValue CycloValue::from_poly(const RatPoly& p, int d) {
    const IntPoly& phi = cyclotomic(d);
    auto [q, r] = divmod(p, to_rational(phi));
    (void)q;
    std::vector<Rat> coords(r.coeffs());
    return CycloValue(d, std::move(coords));
}

bool CycloValue::is_zero() const {
    for (const Rat& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloValue::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CycloValue::is_rational_integer() const {
    return is_rational() && (coords_.empty() || is_integer(coords_[0]));
}

Int CycloValue::as_integer() const {
    if (!is_rational_integer()) throw NotRationalInteger("CycloValue::as_integer: value is not a rational integer");
    if (coords_.empty()) return 0;
    return boost::multiprecision::numerator(coords_[0]);
}

RatPoly CycloValue::as_poly() const { return RatPoly(coords_); }

CycloValue CycloValue::operator+(const CycloValue& o) const {
    if (d_ != o.d_) throw std::invalid_argument("CycloValue: mixed orders");
    return from_poly(as_poly() + o.as_poly(), d_);
}

CycloValue CycloValue::operator-(const CycloValue& o) const {
    if (d_ != o.d_) throw std::invalid_argument("CycloValue: mixed orders");
    return from_poly(as_poly() - o.as_poly(), d_);
}

CycloValue CycloValue::operator*(const CycloValue& o) const {
    if (d_ != o.d_) throw std::invalid_argument("CycloValue: mixed orders");
    return from_poly(as_poly() * o.as_poly(), d_);
}

CycloValue CycloValue::inverse() const {
    if (is_zero()) throw std::domain_error("CycloValue::inverse: zero value");
    // Phi_d is irreducible over Q, so gcd(value, Phi_d) = 1 and the
    // Bezout coefficient of the value is its inverse in the quotient.
    ExtGcd e = extended_gcd(as_poly(), to_rational(cyclotomic(d_)));
    if (e.g.degree() != 0) throw std::domain_error("CycloValue::inverse: unexpected gcd");
    return from_poly(e.s, d_);
}

bool CycloValue::operator==(const CycloValue& o) const { return d_ == o.d_ && coords_ == o.coords_; }

CycloValue eval_at_root(const IntPoly& p, int d) { return CycloValue::from_poly(to_rational(p), d); }

CycloValue eval_at_root(const RatPoly& p, int d) { return CycloValue::from_poly(p, d); }

CycloValue eval_limit_at_root(const IntPoly& num, const IntPoly& den, int d) {
    if (den.is_zero()) throw std::invalid_argument("eval_limit_at_root: zero denominator");
    const IntPoly& phi = cyclotomic(d);
    IntPoly n = num, m = den;
    // Cancel the maximal common power of Phi_d.
    while (!n.is_zero() && divides(phi, n) && divides(phi, m)) {
        n = poly_exact_div(n, phi);
        m = poly_exact_div(m, phi);
    }
    CycloValue vden = eval_at_root(m, d);
    if (vden.is_zero()) throw PoleAtRoot("eval_limit_at_root: denominator vanishes after cancellation");
    return eval_at_root(n, d) * vden.inverse();
}

}  // namespace nc
