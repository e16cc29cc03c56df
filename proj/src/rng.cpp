#include "rng.hpp"

namespace euclid8 {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    for (auto& s : s_) s = splitmix64(x);
    // all-zero state is invalid for xoshiro
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
}

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // rejection on the top range to avoid modulo bias
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Integer Rng::coordinate(int bits) {
    // (bits+1) random bits assembled little-endian, then shifted to be signed
    const int nbits = bits + 1;
    const int nwords = (nbits + 63) / 64;
    std::vector<std::uint64_t> words(static_cast<std::size_t>(nwords));
    for (auto& w : words) w = next();
    const int excess = nwords * 64 - nbits;
    words.back() >>= excess;
    Integer u;
    mpz_import(u.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    Integer offset(1);
    offset <<= static_cast<unsigned>(bits);
    return u - offset;
}

Integer Rng::denominator(int bits) {
    const int nwords = (bits + 63) / 64;
    std::vector<std::uint64_t> words(static_cast<std::size_t>(nwords));
    for (auto& w : words) w = next();
    const int excess = nwords * 64 - bits;
    words.back() >>= excess;
    Integer u;
    mpz_import(u.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
    return u + 1;
}

} // namespace euclid8
