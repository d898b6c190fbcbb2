#include "nc/formulas.hpp"

#include "nc/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace nc {

namespace {

bool connected_in_range(int n, int k) { return n >= 2 && k >= n - 1 && k <= 2 * n - 3; }

void check_divides(int n, int d, const char* who) {
    if (d < 1 || n % d != 0) throw InvalidOrder(std::string(who) + ": d must divide n");
}

std::string param_name(const char* letter, int n, std::optional<int> k) {
    std::ostringstream os;
    os << letter << "(" << n;
    if (k) os << "," << *k;
    os << ";q)";
    return os.str();
}

QFormula make_qformula(std::string name, IntPoly num, IntPoly den) {
    QFormula f;
    f.name = std::move(name);
    f.numerator = std::move(num);
    f.denominator = std::move(den);
    try {
        f.quotient = poly_exact_div(f.numerator, f.denominator);
    } catch (const DivisionNotExact&) {
        // Not a polynomial: evaluation falls back to limits.
    }
    return f;
}

}  // namespace

Int count_connected(int n, int k) {
    if (!connected_in_range(n, k)) return 0;
    return exact_div(binomial(3 * n - 3, n + k) * binomial(k - 1, n - 2), Int(n - 1));
}

IntPoly qpoly_connected(int n, int k) {
    if (!connected_in_range(n, k)) return IntPoly();
    IntPoly num = q_binomial(3 * n - 3, n + k) * q_binomial(k - 1, n - 2);
    return poly_exact_div(num, q_integer(n - 1));
}

Int connected_at_root(int n, int k, int d) {
    check_divides(n, d, "connected_at_root");
    return eval_at_root(qpoly_connected(n, k), d).as_integer();
}

Int closed_s2_odd(int n, int k) {
    if (n < 2 || n % 2 != 0 || k < 1 || k % 2 == 0) return 0;
    const int np = n / 2, kp = (k + 1) / 2;
    return binomial(3 * np - 2, np + kp - 1) * binomial(kp - 1, np - 1);
}

Int closed_s2_even(int n, int k) {
    if (n < 2 || n % 2 != 0 || k % 2 != 0) return 0;
    if (k < n - 1) return 0;  // below the connected range the count is zero
    return binomial((3 * n - 4) / 2, (n + k) / 2) * binomial((k - 2) / 2, (n - 2) / 2);
}

Int closed_a(int n, int k) {
    if (n < 1 || k < 1) return 0;
    return binomial(3 * n - 1, n + k) * binomial(k - 1, n - 1);
}

Int closed_d(int n, int k) {
    if (n < 3 || k < 1) return 0;
    return exact_div(Int(2) * binomial(3 * n - 5, n + k) * binomial(k - 1, n - 3), Int(n - 2));
}

Int closed_f(int m, int j) {
    if (m < 2) return 0;
    Int s2 = closed_s2_odd(2 * m - 2, 2 * j - 1);
    return exact_div(s2, Int(m - 1));
}

Int closed_sd(int n, int k, int d) {
    if (d < 3) throw std::invalid_argument("closed_sd: d must be at least 3");
    check_divides(n, d, "closed_sd");
    if (k < 1 || k % d != 0) return 0;
    const int np = n / d, kp = k / d;
    return binomial(3 * np - 1, np + kp) * binomial(kp - 1, np - 1);
}

Int a_convolution(int n, int k, const std::function<Int(int, int)>& f) {
    if (n < 1 || k < 1) return 0;
    Int total = 0;
    // Compositions of k into m parts k_i >= 1 and of n+m into m parts
    // n_i >= 2; the last factor is weighted by (n_m - 1).
    std::function<void(int, int, int, const Int&)> rec =
        [&](int parts_left, int k_left, int n_left, const Int& partial) {
            if (parts_left == 1) {
                if (k_left >= 1 && n_left >= 2)
                    total += partial * Int(n_left - 1) * f(n_left, k_left);
                return;
            }
            for (int ki = 1; ki <= k_left - (parts_left - 1); ++ki)
                for (int ni = 2; ni <= n_left - 2 * (parts_left - 1); ++ni) {
                    Int fv = f(ni, ki);
                    if (fv == 0) continue;
                    rec(parts_left - 1, k_left - ki, n_left - ni, partial * fv);
                }
        };
    for (int m = 1; m <= n; ++m) rec(m, k, n + m, Int(1));
    return total;
}

CycloValue QFormula::at_root(int d) const {
    if (quotient) return eval_at_root(*quotient, d);
    return eval_limit_at_root(numerator, denominator, d);
}

Int QFormula::integer_at_root(int d) const { return at_root(d).as_integer(); }

Int family_count(FamilyTag family, int n, int k) {
    switch (family) {
        case FamilyTag::connected:
            return count_connected(n, k);
        case FamilyTag::tree:
            if (n < 1) return 0;
            if (n == 1) return 1;
            return exact_div(binomial(3 * n - 3, n - 1), Int(2 * n - 1));
        case FamilyTag::dissection:
            if (n < 3 || k < 0 || k > n - 3) return 0;
            return exact_div(binomial(n - 3, k) * binomial(n + k - 1, k), Int(k + 1));
        case FamilyTag::partition:
            if (n < 1 || k < 0 || k > n - 1) return 0;
            return exact_div(binomial(n, k) * binomial(n, k + 1), Int(n));
        case FamilyTag::forest:
            if (n < 1 || k < 1 || k > n) return 0;
            return exact_div(binomial(n, k - 1) * binomial(3 * n - 2 * k - 1, n - k), Int(2 * n - k));
        case FamilyTag::any_graph: {
            if (n < 2 || k < 0 || k > 2 * n - 3) return 0;
            Int sum = 0;
            for (int j = 0; j <= n - 2; ++j)
                sum += binomial(n - 1, k - j) * binomial(n - 1, j + 1) * binomial(n - 2 + j, n - 2);
            return exact_div(sum, Int(n - 1));
        }
    }
    return 0;
}

QFormula family_qpoly(FamilyTag family, int n, int k) {
    switch (family) {
        case FamilyTag::connected: {
            IntPoly num = q_binomial(3 * n - 3, n + k) * q_binomial(k - 1, n - 2);
            if (!connected_in_range(n, k)) num = IntPoly();
            return make_qformula(param_name("C", n, k), std::move(num), q_integer(n - 1));
        }
        case FamilyTag::tree:
            return make_qformula(param_name("T", n, std::nullopt), q_binomial(3 * n - 3, n - 1),
                                 q_integer(2 * n - 1));
        case FamilyTag::dissection: {
            IntPoly num = q_binomial(n - 3, k) * q_binomial(n + k - 1, k);
            if (n < 3 || k < 0) num = IntPoly();
            return make_qformula(param_name("D", n, k), std::move(num), q_integer(k + 1));
        }
        case FamilyTag::partition: {
            IntPoly num;
            if (k >= 0)
                num = (q_binomial(n, k) * q_binomial(n, k + 1)).shifted(k * (k + 1));
            return make_qformula(param_name("P", n, k), std::move(num), q_integer(n));
        }
        case FamilyTag::forest: {
            IntPoly num = q_binomial(n, k - 1) * q_binomial(3 * n - 2 * k - 1, n - k);
            if (k < 1) num = IntPoly();
            return make_qformula(param_name("F", n, k), std::move(num), q_integer(2 * n - k));
        }
        case FamilyTag::any_graph: {
            if (n < 2) throw std::invalid_argument("family_qpoly: graph q-analogue needs n >= 2");
            IntPoly sum;
            for (int j = 0; j <= n - 2; ++j) {
                IntPoly term = q_binomial(n - 1, k - j) * q_binomial(n - 1, j + 1) *
                               q_binomial(n - 2 + j, n - 2);
                if (term.is_zero()) continue;
                // Nonzero terms force k - j <= n - 1, so the exponent is
                // nonnegative.
                int e = j * (j + n - k + 2);
                if (e < 0) throw std::logic_error("family_qpoly: negative q exponent");
                sum += term.shifted(e);
            }
            return make_qformula(param_name("G", n, k), std::move(sum), q_integer(n - 1));
        }
    }
    throw std::logic_error("family_qpoly: unreachable");
}

}  // namespace nc
