#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace morcount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Sentinel for the degree of the zero polynomial / empty virtual dimension.
inline constexpr long kNegInf = std::numeric_limits<long>::min() / 4;

inline Int ipow(const Int& base, unsigned long e) {
    Int r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Rat rpow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r = 1, b = base;
        unsigned long k = static_cast<unsigned long>(e);
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    return Rat(1) / rpow(base, -e);
}

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline Rat rabs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline bool is_integer(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

inline Int to_int(const Rat& x) {
    if (!is_integer(x)) throw std::runtime_error("to_int: not an integer: " + x.str());
    return boost::multiprecision::numerator(x);
}

inline Int rat_floor(const Rat& x) {
    Int n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline Int rat_ceil(const Rat& x) { return -rat_floor(Rat(-x)); }

// Classical number-theoretic Mobius function (tiny arguments only).
inline int mobius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace morcount
