#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hurwitz {

// All counting in this library is exact: arbitrary-precision integers for
// enumerative quantities, rationals for automorphism-weighted counts.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an enumeration would exceed a configured size budget
// (too-large degree, group closure past its bound, brute-force scans).
// Distinct from std::domain_error so callers can map it to its own
// exit status.
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;  // exact at every step: b is C(n-k+i, i)
    }
    return b;
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

// base^exp for possibly negative exp, as an exact rational.
inline Rat rat_pow(const Rat& base, int exp) {
    if (exp >= 0) {
        Rat r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    }
    Rat r = 1;
    for (int i = 0; i < -exp; ++i) r *= base;
    return Rat(1) / r;
}

// Quotient that must be exact; guards identities like dim = d!/hooks.
inline Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw std::logic_error("exact_div: inexact division");
    return q;
}

inline std::string rat_to_string(const Rat& r) { return r.str(); }

}  // namespace hurwitz
