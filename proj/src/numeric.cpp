#include "nc/numeric.hpp"

#include "nc/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace nc {

Int binomial(long long n, long long k) {
    if (k < 0) return 0;
    if (n < 0) {
        Int v = binomial(k - n - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw NonIntegerResult("exact_div: remainder nonzero");
    return q;
}

bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

long long totient(long long d) {
    long long result = d;
    long long m = d;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace nc
