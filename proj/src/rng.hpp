#pragma once

#include "rational.hpp"

#include <cstdint>
#include <vector>

namespace euclid8 {

// xoshiro256** seeded through splitmix64. Fully specified here so that
// seeded reports are identical across platforms and standard libraries.
// Stream s of seed x is seeded from splitmix64(x ^ golden*(s+1)); samplers
// give each sample index its own stream, which makes results independent
// of how work is split across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next();

    // Uniform on [0, bound), bound > 0, rejection sampled.
    std::uint64_t below(std::uint64_t bound);

    // Uniform on [-2^bits, 2^bits): (bits+1) random bits minus the offset.
    Integer coordinate(int bits);

    // Uniform on [1, 2^bits].
    Integer denominator(int bits);

private:
    std::uint64_t s_[4];
};

} // namespace euclid8
