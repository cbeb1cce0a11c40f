#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace moyal {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k); zero outside the Pascal triangle.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1;
    Rational b = base;
    unsigned e = exp;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

}  // namespace moyal
