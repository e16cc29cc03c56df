#pragma once

#include "linalg.hpp"

#include <vector>

namespace euclid8 {

// The standard E8 lattice: integer vectors with even coordinate sum, together
// with that set shifted by (1/2, ..., 1/2). Points are handled in doubled
// integer coordinates internally (2y is always integral); the rational-entry
// representation is the public one.

// Gram matrix of the E8 simple roots (the Cartan matrix under <.|.>).
const Mat8Q& e8_gram_matrix();

// The 8 simple roots of the standard root system in R^8 (half-integer
// coordinates), ordered so that their Gram matrix equals e8_gram_matrix().
const Mat8Q& e8_standard_simple_roots();

bool is_e8_point(const Vec8Q& y);

// Per-coordinate nearest integer; an exact half rounds down (floor).
Vec8Z round_nearest(const Vec8Q& x);

// Same as round_nearest except at the first coordinate of maximal distance
// to the nearest integer, which is rounded the other way. A coordinate that
// is already an integer flips to integer + 1.
Vec8Z wrong_way_round(const Vec8Q& x);

// Closest point of E8 to x, exact. When several points are closest, which
// one is returned is fixed by the rounding and comparison rules above
// (integer coset wins a distance tie).
Vec8Q decode_e8(const Vec8Q& x);

Rational dist2(const Vec8Q& x, const Vec8Q& y);

struct CvpResult {
    Vec8Q point;
    Rational dist2;
};

// Exhaustive closest-vector search over the box |v_i - x_i| <= 1 (sound
// because the covering radius of E8 is 1); ties broken toward the
// lexicographically smallest point. Verification oracle for decode_e8.
CvpResult cvp_bruteforce(const Vec8Q& x);

// True iff |<x, r>| <= 1 for all roots r: the closed Voronoi region around
// the origin, whose 240 facets lie on the hyperplanes <x, r> = 1.
bool in_voronoi(const Vec8Q& x, const std::vector<Vec8Q>& roots_std);

// Scaled-integer decoder core: x = num/den with den > 0; returns 2y.
Vec8Z decode_e8_scaled2(const Vec8Z& num, const Integer& den);

} // namespace euclid8
