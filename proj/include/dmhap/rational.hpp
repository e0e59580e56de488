#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dmhap {

// Exact scalar field: arbitrary-precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int b = 1;
    for (int i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

// n(n-1)...(n-k+1); zero once k exceeds n.
inline Int falling_factorial(int n, int k) {
    Int f = 1;
    for (int i = 0; i < k; ++i) f *= n - i;
    return f;
}

inline Int pow_int(Int base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
    Int p = 1;
    for (int i = 0; i < exp; ++i) p *= base;
    return p;
}

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero base with negative exponent");
        Rational inv = Rational(1) / base;
        Rational p = 1;
        for (long i = 0; i < -exp; ++i) p *= inv;
        return p;
    }
    Rational p = 1;
    for (long i = 0; i < exp; ++i) p *= base;
    return p;
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

// Accepts "p", "-p", "p/q".
inline Rational rational_from_string(std::string_view s) {
    try {
        return Rational(std::string(s));
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
    }
}

} // namespace dmhap
