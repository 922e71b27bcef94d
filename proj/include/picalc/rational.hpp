#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace picalc {

// All arithmetic in the library is exact. Rat is an arbitrary-precision
// rational; Int its integer backbone.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders p/q in lowest terms, integers without the "/1" tail.
inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

// C(n, k) for n >= 0; returns 0 when k > n. k is expected small here
// (the library only ever needs k = 2 and k = c for subset counts).
inline Int binomial(long n, long k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (long j = 1; j <= k; ++j) {
        acc *= (n - k + j);
        acc /= j;
    }
    return acc;
}

inline Int factorial(long n) {
    Int acc = 1;
    for (long j = 2; j <= n; ++j) acc *= j;
    return acc;
}

inline Int pow2(long e) {
    Int acc = 1;
    return acc << e;
}

} // namespace picalc
