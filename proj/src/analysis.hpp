#pragma once

#include "euclid.hpp"
#include "field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace euclid8 {

struct StatsReport {
    FieldId field;
    long sample_count;
    Rational max_ratio;
    double mean_ratio;  // display only
    std::uint64_t seed;
    double elapsed_seconds;
};

struct TableRow {
    FieldId field;
    Rational bound;      // disc_K / 4096
    Rational sup_value;  // sup of |N| on the closed Voronoi region
    Vec8Q maximizer_P;
    std::optional<Rational> euclidean_minimum;
};

// Recomputes |N| of the published maximizer, asserts exact equality with the
// stored sup constant and membership in the closed Voronoi region; throws
// verification_failed with the mismatching values.
TableRow verify_table(const FieldData& f);

// count seeded random divisions with coordinates in [-2^bits, 2^bits);
// every ratio is checked against disc_K/4096 and the sup constant before it
// is aggregated. Identical output for a given seed regardless of threads.
StatsReport sample_remainder_ratios(const FieldData& f, long count, int coord_bits,
                                    std::uint64_t seed, int threads = 1);

// Certified lower bound for the worst-case remainder ratio: maximum of
// |N(x - cv(x))| over seeded random points plus the published maximizer.
// For a point of the closed Voronoi region the value |N(x)| itself is used
// (interior scalings t x, t -> 1, realize it in the limit).
Rational estimate_af(const FieldData& f, long count, std::uint64_t seed, int threads = 1);

struct BenchPoint {
    long bits;
    double mean_seconds;
};

// Mean wall-clock time of divide on random inputs with n-bit coordinates,
// one warm-up division excluded per size. Rows come back sorted by bits.
std::vector<BenchPoint> bench_divide(const FieldData& f, const std::vector<long>& bit_sizes,
                                     int reps, std::uint64_t seed);

std::string bench_to_csv(const std::vector<BenchPoint>& rows);

} // namespace euclid8
