#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace heatlab {

// Exact arithmetic for everything that must be checked as an identity
// rather than to a tolerance: chain evolutions, coupling tails, the
// ternary martingale construction. cpp_rational keeps values canonical
// (gcd 1, positive denominator).
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, long long e) {
    BigInt r = 1, b = base;
    for (long long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

inline Rational rational_pow(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0 to a negative power");
        return Rational(ipow(denominator(base), -e), ipow(numerator(base), -e));
    }
    return Rational(ipow(numerator(base), e), ipow(denominator(base), e));
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace heatlab
