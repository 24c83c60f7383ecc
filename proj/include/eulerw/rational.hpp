#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulerw {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer.
inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after each step
    }
    return r;
}

/// b^e for integer base and non-negative exponent.
inline BigInt ipow(const BigInt& b, int e) {
    if (e < 0) throw std::domain_error("ipow: exponent must be >= 0");
    BigInt r = 1, base = b;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rational rpow(const Rational& b, int e) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    if (e < 0) {
        if (b == 0) throw std::domain_error("rpow: 0 has no negative powers");
        return Rational(ipow(denominator(b), -e), ipow(numerator(b), -e));
    }
    return Rational(ipow(numerator(b), e), ipow(denominator(b), e));
}

/// Renders "p/q" in lowest terms ("p" when q == 1).
inline std::string to_fraction_string(const Rational& r) {
    using boost::multiprecision::numerator;
    using boost::multiprecision::denominator;
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rational parse_fraction(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, pos));
        BigInt den(s.substr(pos + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_fraction: malformed rational: " + s);
    }
}

}  // namespace eulerw
