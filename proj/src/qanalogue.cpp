#include "nc/qanalogue.hpp"

#include <vector>

namespace nc {

IntPoly q_integer(int n) {
    if (n <= 0) return IntPoly();
    return IntPoly(std::vector<Int>(static_cast<std::size_t>(n), Int(1)));
}

IntPoly q_factorial(int n) {
    IntPoly r = IntPoly::constant(Int(1));
    for (int i = 2; i <= n; ++i) r *= q_integer(i);
    return r;
}

IntPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return IntPoly();
    if (k > n - k) k = n - k;
    // Row recurrence; row[j] holds [m brack j] while m runs up to n.
    std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPoly::constant(Int(1));
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(k, m); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    }
    return row[static_cast<std::size_t>(k)];
}

IntPoly q_binomial_by_division(int n, int k) {
    if (k < 0 || k > n) return IntPoly();
    return poly_exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

}  // namespace nc
