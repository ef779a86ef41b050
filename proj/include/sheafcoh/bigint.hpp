#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace sheafcoh {

/// Exact arbitrary-precision integer used for all dimensions, Euler
/// characteristics and multiplicities.
using Int = boost::multiprecision::cpp_int;

/// Combinatorial binomial coefficient: C(n, k) with the convention
/// C(n, k) = 0 whenever k < 0, n < 0 or k > n.
inline Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n - k < k) k = n - k;  // keep the loop short for large n
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

/// Polynomial extension of the binomial coefficient in the upper argument:
/// C(m, k) = m(m-1)...(m-k+1) / k! for any integer m (negative allowed) and
/// k >= 0. Agrees with binom() for m >= 0.
inline Int binom_poly(long long m, long long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long long i = 0; i < k; ++i) num *= (Int(m) - i);
    Int den = 1;
    for (long long i = 2; i <= k; ++i) den *= i;
    return num / den;  // falling factorial of length k is divisible by k!
}

inline int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace sheafcoh
