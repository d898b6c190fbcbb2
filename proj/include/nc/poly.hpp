#pragma once

#include "nc/numeric.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace nc {

// Dense univariate polynomial in q. Coefficient i is the coefficient of
// q^i. Canonical form: no trailing zeros; the zero polynomial holds an
// empty coefficient vector and has degree -1.
template <class T>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(T v) {
        Poly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }
    static Poly monomial(T coeff, int degree) {
        Poly p;
        if (coeff != 0) {
            p.c_.assign(static_cast<std::size_t>(degree) + 1, T(0));
            p.c_.back() = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of q^i; zero beyond the stored range.
    const T& coeff(int i) const {
        static const T zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    T eval_at_one() const {
        T s(0);
        for (const T& v : c_) s += v;
        return s;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (T& v : r.c_) v = -v;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> prod(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) prod[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(prod));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const T& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (T& v : c_) v *= s;
        return *this;
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }

    // Multiply by q^m.
    Poly shifted(int m) const {
        if (is_zero() || m == 0) return *this;
        Poly r;
        r.c_.assign(static_cast<std::size_t>(m), T(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rational(const IntPoly& p);

// Quotient and remainder over the rationals (den nonzero).
std::pair<RatPoly, RatPoly> divmod(const RatPoly& num, const RatPoly& den);

// Exact quotient with integer coefficients; throws DivisionNotExact when
// the remainder is nonzero or a quotient coefficient is non-integral.
IntPoly poly_exact_div(const IntPoly& num, const IntPoly& den);

// True iff den divides num exactly over the rationals.
bool divides(const IntPoly& den, const IntPoly& num);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g. The gcd is made
// monic; g is the zero polynomial only when both inputs are zero.
struct ExtGcd {
    RatPoly g, s, t;
};
ExtGcd extended_gcd(const RatPoly& a, const RatPoly& b);

std::string to_string(const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace nc
