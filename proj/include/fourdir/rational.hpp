#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fourdir {

// Exact arbitrary-precision rational. GMP keeps values in lowest terms
// with positive denominator once canonicalized; every entry point here
// canonicalizes, so downstream code can rely on structural equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

// Canonical "p/q" (or "p" when the denominator is 1).
inline std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return rat(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("0 raised to a negative power");
        return rat(0);
    }
    Rational b = exp < 0 ? Rational(1 / base) : base;
    long e = exp < 0 ? -exp : exp;
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

// Falling factorial m (m-1) ... (m-k+1) for integer m (possibly negative).
inline Integer falling_factorial(long m, long k) {
    Integer out(1);
    for (long i = 0; i < k; ++i) out *= Integer(m - i);
    return out;
}

}  // namespace fourdir
