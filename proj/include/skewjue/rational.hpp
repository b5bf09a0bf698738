#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace skewjue {

// Exact integer / rational carriers. All measure values, characters and
// Hurwitz counts are computed in ExactScalar; doubles appear only at the
// reporting boundary.
using BigInt = boost::multiprecision::cpp_int;
using ExactScalar = boost::multiprecision::cpp_rational;

inline BigInt factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

// x^e for integer e, e < 0 allowed for nonzero x.
inline ExactScalar pow_rat(const ExactScalar& x, long long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("pow_rat: 0 to negative power");
        return 1 / pow_rat(x, -e);
    }
    ExactScalar r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline BigInt pow_int(const BigInt& x, long long e) {
    if (e < 0) throw std::domain_error("pow_int: negative exponent");
    BigInt r = 1, b = x;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Canonical "num/den" form, denominator always present and positive.
inline std::string to_fraction_string(const ExactScalar& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

inline ExactScalar parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return ExactScalar(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("parse_fraction: zero denominator");
    return ExactScalar(num, den);
}

inline double to_double(const ExactScalar& x) { return x.convert_to<double>(); }

}  // namespace skewjue
