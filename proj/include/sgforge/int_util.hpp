#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace sgforge {

using int64 = long long;

// all integer arithmetic is either checked 64-bit (here) or exact rationals;
// silent wraparound is never acceptable.
inline int64 checked_add(int64 a, int64 b) {
    int64 r;
    if (__builtin_add_overflow(a, b, &r)) raise(errc::overflow, "integer addition overflow");
    return r;
}

inline int64 checked_sub(int64 a, int64 b) {
    int64 r;
    if (__builtin_sub_overflow(a, b, &r)) raise(errc::overflow, "integer subtraction overflow");
    return r;
}

inline int64 checked_mul(int64 a, int64 b) {
    int64 r;
    if (__builtin_mul_overflow(a, b, &r)) raise(errc::overflow, "integer multiplication overflow");
    return r;
}

inline int64 gcd_all(const std::vector<int64>& v) {
    int64 g = 0;
    for (int64 x : v) g = std::gcd(g, x);
    return g;
}

// number of prime factors counted with multiplicity
inline int64 omega(int64 n) {
    int64 count = 0;
    for (int64 p = 2; p * p <= n; ++p)
        while (n % p == 0) { n /= p; ++count; }
    if (n > 1) ++count;
    return count;
}

}  // namespace sgforge
