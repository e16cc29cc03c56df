#pragma once

#include "field.hpp"

#include <optional>

namespace euclid8 {

struct DivisionResult {
    RingElement quotient;
    RingElement remainder;
    Rational norm_ratio;  // |N(r)| / |N(b)|
};

struct XgcdResult {
    RingElement g;  // some gcd; associates are not normalized
    RingElement u;
    RingElement v;  // u*a + v*b = g
};

// Euclidean division: a = b q + r with r = 0 or |N(r)| < |N(b)|, the quotient
// being a closest lattice point to a/b. Throws division_by_zero when b = 0.
DivisionResult divide(const FieldData& f, const RingElement& a, const RingElement& b);

// Iterated division with Bezout bookkeeping. g is defined only up to units
// (unit groups here are infinite, so no canonical associate is chosen);
// consumers needing determinism should rely on the identity u*a + v*b = g.
XgcdResult xgcd(const FieldData& f, const RingElement& a, const RingElement& b);

bool is_unit(const FieldData& f, const RingElement& x);

// q with a = b*q when b | a exactly, nullopt otherwise.
std::optional<RingElement> exact_div(const FieldData& f, const RingElement& a,
                                     const RingElement& b);

} // namespace euclid8
