#include "rng.hpp"

#include <doctest.h>

using namespace euclid8;

TEST_CASE("rng streams are deterministic and independent") {
    Rng a(42, 0), b(42, 0), c(42, 1);
    CHECK(a.next() == b.next());
    CHECK(a.next() == b.next());
    Rng a2(42, 0);
    (void)c;
    CHECK(a2.next() != Rng(43, 0).next());
}

TEST_CASE("coordinate range") {
    Rng rng(1);
    Integer lo(1), hi(1);
    lo <<= 16;
    hi <<= 16;
    lo = -lo;
    for (int t = 0; t < 200; ++t) {
        Integer x = rng.coordinate(16);
        CHECK(x >= lo);
        CHECK(x < hi);
    }
}

TEST_CASE("denominator range") {
    Rng rng(2);
    for (int t = 0; t < 200; ++t) {
        Integer d = rng.denominator(6);
        CHECK(d >= 1);
        CHECK(d <= 64);
    }
}

TEST_CASE("below is within bound") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) CHECK(rng.below(7) < 7);
}
