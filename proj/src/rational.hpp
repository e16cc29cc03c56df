#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace euclid8 {

// Exact scalars. GMP keeps mpq_class values in canonical reduced form
// (gcd(num, den) = 1, den >= 1) through all arithmetic; parse_rational
// canonicalizes explicitly since the string constructor does not.
using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or just "p" when the denominator is 1; sign on the numerator.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Accepts "p" or "p/q" in base 10 (q != 0); result is canonical.
Rational parse_rational(std::string_view s);
Integer parse_integer(std::string_view s);

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

// Largest integer <= num/den (den > 0).
Integer floor_div(const Integer& num, const Integer& den);
// Smallest integer >= num/den (den > 0).
Integer ceil_div(const Integer& num, const Integer& den);

} // namespace euclid8
