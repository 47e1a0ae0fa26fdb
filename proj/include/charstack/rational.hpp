#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace charstack {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    return r.str();
}

inline Rational rational_from_string(const std::string& s) {
    return Rational(s);
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational rational_pow(const Rational& base, int exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    bool inv = exp < 0;
    unsigned e = inv ? static_cast<unsigned>(-(long long)exp) : static_cast<unsigned>(exp);
    Rational r = 1;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    if (inv) r = Rational(1) / r;
    return r;
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Moebius function on positive integers.
inline int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline long long gcd_ll(long long a, long long b) {
    while (b) { long long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

} // namespace charstack
