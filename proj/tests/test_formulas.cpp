#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"

#include "nc/enumerate.hpp"
#include "nc/errors.hpp"
#include "nc/formulas.hpp"
#include "nc/partition.hpp"
#include "nc/qanalogue.hpp"

#include <functional>

using namespace nc;

namespace {

Int enumerated_f(int n, int k) { return Int(count_with_edge_1n(n, k)); }

}  // namespace

TEST_CASE("count_connected: frozen examples and enumeration oracle") {
    CHECK(count_connected(2, 1) == 1);
    CHECK(count_connected(4, 3) == 12);
    CHECK(count_connected(4, 4) == 9);
    CHECK(count_connected(4, 2) == 0);
    CHECK(count_connected(4, 6) == 0);
    CHECK(count_connected(1, 0) == 0);
    for (int n = 2; n <= 7; ++n)
        for (int k = n - 1; k <= 2 * n - 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(count_connected(n, k) == Int(count_graphs(n, k, Family::connected())));
        }
}

TEST_CASE("qpoly_connected: examples, nonnegativity, q=1 specialization") {
    CHECK(qpoly_connected(4, 5) == IntPoly(std::vector<Int>{1, 0, 1}));
    CHECK(qpoly_connected(3, 3) == IntPoly::constant(Int(1)));
    CHECK(qpoly_connected(2, 1) == IntPoly::constant(Int(1)));
    for (int n = 2; n <= 12; ++n)
        for (int k = n - 1; k <= 2 * n - 3; ++k) {
            IntPoly p = qpoly_connected(n, k);
            CHECK(p.eval_at_one() == count_connected(n, k));
            for (int i = 0; i <= p.degree(); ++i) CHECK(p.coeff(i) >= 0);
        }
}

TEST_CASE("second q-binomial factor: [k-1, n-2] equals [k-1, k-n+1]") {
    for (int n = 2; n <= 10; ++n)
        for (int k = n - 1; k <= 2 * n - 3; ++k)
            CHECK(q_binomial(k - 1, n - 2) == q_binomial(k - 1, k - n + 1));
}

TEST_CASE("connected_at_root: frozen examples") {
    CHECK(connected_at_root(4, 5, 2) == 2);
    CHECK(connected_at_root(4, 5, 4) == 0);
    CHECK(connected_at_root(6, 7, 3) == 0);
    CHECK(connected_at_root(6, 6, 1) == count_connected(6, 6));
    CHECK_THROWS_AS(connected_at_root(4, 5, 3), InvalidOrder);
}

TEST_CASE("closed_s2_odd: frozen examples and fixed-point oracle") {
    CHECK(closed_s2_odd(4, 3) == 4);
    CHECK(closed_s2_odd(4, 5) == 2);
    CHECK(closed_s2_odd(2, 1) == 1);
    for (int n = 2; n <= 8; n += 2)
        for (int k = 1; k <= 2 * n - 3; k += 2) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(closed_s2_odd(n, k) == Int(count_fixed(n, k, 2, Family::connected())));
        }
}

TEST_CASE("closed_s2_even: frozen examples and fixed-point oracle") {
    CHECK(closed_s2_even(4, 4) == 1);
    CHECK(closed_s2_even(4, 6) == 0);
    CHECK(closed_s2_even(6, 8) == 3);
    for (int n = 2; n <= 8; n += 2)
        for (int k = 0; k <= 2 * n - 3; k += 2) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(closed_s2_even(n, k) == Int(count_fixed(n, k, 2, Family::connected())));
        }
}

TEST_CASE("Eq-kodd / section-4 consistency with the q-evaluation, n <= 12") {
    for (int n = 2; n <= 12; n += 2)
        for (int k = n - 1; k <= 2 * n - 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            Int at_minus_one = connected_at_root(n, k, 2);
            if (k % 2 == 1)
                CHECK(at_minus_one == closed_s2_odd(n, k));
            else
                CHECK(at_minus_one == closed_s2_even(n, k));
        }
}

TEST_CASE("closed_a: frozen examples and antipodal oracle") {
    CHECK(closed_a(2, 2) == 5);
    CHECK(closed_a(2, 3) == 2);
    CHECK(closed_a(1, 1) == 1);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(closed_a(n, k) == Int(count_antipodal_pairs(n, k)));
        }
}

TEST_CASE("closed_d: frozen examples and enumeration oracle") {
    CHECK(closed_d(4, 2) == 7);
    CHECK(closed_d(3, 1) == 2);
    CHECK(closed_d(3, 2) == 0);
    for (int n = 3; n <= 7; ++n)
        for (int k = 1; k <= 2 * n - 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(closed_d(n, k) == Int(count_two_components_separated(n, k)));
        }
}

TEST_CASE("closed_f: frozen examples, integrality, enumeration oracle") {
    CHECK(closed_f(3, 2) == 2);
    CHECK(closed_f(4, 5) == 2);
    CHECK(closed_f(2, 1) == 1);
    for (int m = 2; m <= 7; ++m)
        for (int j = 1; j <= 2 * m - 3; ++j) {
            CAPTURE(m);
            CAPTURE(j);
            CHECK(closed_f(m, j) == enumerated_f(m, j));
        }
}

TEST_CASE("f-recurrence: f(n,k) + f(n,k+1) = c(n,k) + d(n,k)") {
    for (int n = 3; n <= 9; ++n)
        for (int k = n - 1; k <= 2 * n - 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(enumerated_f(n, k) + enumerated_f(n, k + 1) == count_connected(n, k) + closed_d(n, k));
        }
}

TEST_CASE("triangulation base case: f(n, 2n-3) = c(n, 2n-3)") {
    for (int n = 3; n <= 9; ++n) {
        CHECK(enumerated_f(n, 2 * n - 3) == count_connected(n, 2 * n - 3));
        CHECK(count_connected(n, 2 * n - 3) == exact_div(binomial(2 * n - 4, n - 2), Int(n - 1)));
    }
}

TEST_CASE("the s2 recurrence: s2(2n-2,2k-1) + s2(2n-2,2k+1) = (n-1)(c+d)") {
    for (int n = 3; n <= 6; ++n)
        for (int k = n - 1; k <= 2 * n - 4; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            Int lhs = Int(count_fixed(2 * n - 2, 2 * k - 1, 2, Family::connected())) +
                      Int(count_fixed(2 * n - 2, 2 * k + 1, 2, Family::connected()));
            Int rhs = Int(n - 1) * (count_connected(n, k) + closed_d(n, k));
            CHECK(lhs == rhs);
        }
    // Base case s2(2n-2, 4n-7) = C(2n-4, n-2).
    for (int n = 3; n <= 6; ++n)
        CHECK(Int(count_fixed(2 * n - 2, 4 * n - 7, 2, Family::connected())) ==
              binomial(2 * n - 4, n - 2));
}

TEST_CASE("the straightforward-exercise binomial identity, n <= 30") {
    for (int n = 3; n <= 30; ++n)
        for (int k = n - 1; k <= 2 * n - 3; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            Int lhs = binomial(3 * n - 5, n + k - 2) * binomial(k - 1, n - 2) +
                      binomial(3 * n - 5, n + k - 1) * binomial(k, n - 2);
            Int rhs = binomial(3 * n - 3, n + k) * binomial(k - 1, n - 2) +
                      exact_div(Int(2 * n - 2) * binomial(3 * n - 5, n + k) * binomial(k - 1, n - 3),
                                Int(n - 2));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("closed_sd: frozen examples, vanishing, fixed-point oracle") {
    CHECK(closed_sd(6, 6, 3) == 5);
    CHECK(closed_sd(6, 7, 3) == 0);
    CHECK(closed_sd(3, 3, 3) == 1);
    for (int n = 3; n <= 9; ++n)
        for (int d = 3; d <= n; ++d) {
            if (n % d != 0) continue;
            for (int k = n - 1; k <= 2 * n - 3; ++k) {
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(d);
                CHECK(closed_sd(n, k, d) == Int(count_fixed(n, k, d, Family::connected())));
            }
        }
}

TEST_CASE("section-5 chain: s_d = n' f(n'+1,k') + s2(2n',2k'), plus Pascal recombination") {
    for (int n = 3; n <= 12; ++n)
        for (int d : {3, 4}) {
            if (n % d != 0) continue;
            for (int k = n - 1; k <= 2 * n - 3; ++k) {
                if (k % d != 0) continue;
                const int np = n / d, kp = k / d;
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(d);
                CHECK(closed_sd(n, k, d) ==
                      Int(np) * closed_f(np + 1, kp) + closed_s2_even(2 * np, 2 * kp));
                CHECK(binomial(3 * np - 2, np + kp) + binomial(3 * np - 2, np + kp - 1) ==
                      binomial(3 * np - 1, np + kp));
            }
        }
}

TEST_CASE("a_convolution: equals closed_a with enumerated f") {
    CHECK(a_convolution(2, 2, enumerated_f) == 5);
    CHECK(a_convolution(1, 1, enumerated_f) == 1);
    CHECK(a_convolution(2, 3, enumerated_f) == 2);
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 2 * n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(a_convolution(n, k, enumerated_f) == closed_a(n, k));
        }
}

TEST_CASE("family_count: frozen examples and enumeration oracles") {
    CHECK(family_count(FamilyTag::tree, 4, 0) == 12);
    CHECK(family_count(FamilyTag::dissection, 5, 2) == 5);
    CHECK(family_count(FamilyTag::partition, 4, 2) == 6);
    CHECK(family_count(FamilyTag::forest, 4, 2) == 14);
    CHECK(family_count(FamilyTag::any_graph, 3, 2) == 3);

    for (int n = 2; n <= 7; ++n) {
        CHECK(family_count(FamilyTag::tree, n, 0) == Int(count_graphs(n, n - 1, Family::tree())));
        for (int k = 0; k <= n - 3; ++k)
            CHECK(family_count(FamilyTag::dissection, n, k) ==
                  Int(count_graphs(n, k, Family::dissection())));
        for (int k = 0; k <= n - 1; ++k) {
            long long parts = 0;
            enumerate_nc_partitions(n, n - k, [&](const NcPartition&) { ++parts; });
            CHECK(family_count(FamilyTag::partition, n, k) == Int(parts));
        }
        for (int c = 1; c <= n; ++c)
            CHECK(family_count(FamilyTag::forest, n, c) == Int(count_graphs(n, n - c, Family::forest(c))));
        for (int k = 0; k <= 2 * n - 3; ++k)
            CHECK(family_count(FamilyTag::any_graph, n, k) == Int(count_graphs(n, k, Family::any_graph())));
    }
}

TEST_CASE("family_qpoly: q=1 specialization matches the plain count") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<std::pair<FamilyTag, int>> cells;
        cells.emplace_back(FamilyTag::tree, 0);
        for (int k = n - 1; k <= 2 * n - 3; ++k) cells.emplace_back(FamilyTag::connected, k);
        for (int k = 0; k <= n - 3; ++k) cells.emplace_back(FamilyTag::dissection, k);
        for (int k = 0; k <= n - 1; ++k) cells.emplace_back(FamilyTag::partition, k);
        for (int k = 1; k <= n; ++k) cells.emplace_back(FamilyTag::forest, k);
        for (int k = 0; k <= 2 * n - 3; ++k) cells.emplace_back(FamilyTag::any_graph, k);
        for (auto [tag, k] : cells) {
            CAPTURE(n);
            CAPTURE(k);
            QFormula f = family_qpoly(tag, n, k);
            CHECK(f.integer_at_root(1) == family_count(tag, n, k));
        }
    }
}

TEST_CASE("family_qpoly: division-first route and known polynomial families") {
    // The connected analogue must always divide exactly.
    for (int n = 2; n <= 10; ++n)
        for (int k = n - 1; k <= 2 * n - 3; ++k)
            CHECK(family_qpoly(FamilyTag::connected, n, k).is_polynomial());
    // Tree and dissection analogues divide exactly at desk scale too.
    for (int n = 2; n <= 9; ++n) CHECK(family_qpoly(FamilyTag::tree, n, 0).is_polynomial());
    for (int n = 4; n <= 9; ++n)
        for (int k = 0; k <= n - 3; ++k) CHECK(family_qpoly(FamilyTag::dissection, n, k).is_polynomial());
}
