#include "e8.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace euclid8;

namespace {

Vec8Q qvec(std::initializer_list<Rational> vals) {
    Vec8Q v;
    int i = 0;
    for (const Rational& r : vals) v[i++] = r;
    return v;
}

Vec8Q random_point(Rng& rng, int num_bits, int den_bits) {
    Vec8Q x;
    for (int i = 0; i < 8; ++i) {
        Rational c(rng.coordinate(num_bits), rng.denominator(den_bits));
        c.canonicalize();
        x[i] = c;
    }
    return x;
}

} // namespace

TEST_CASE("round_nearest floors exact halves") {
    Vec8Q x = qvec({Rational(3, 2), Rational(7, 5), Rational(-7, 5), Rational(-1, 2), 0, 0, 0, 0});
    Vec8Z r = round_nearest(x);
    CHECK(r[0] == 1);
    CHECK(r[1] == 1);
    CHECK(r[2] == -1);
    CHECK(r[3] == -1);
    CHECK(r[4] == 0);
}

TEST_CASE("wrong_way_round flips the farthest coordinate") {
    Vec8Q x = qvec({Rational(3, 2), 0, 0, 0, 0, 0, 0, 0});
    Vec8Z w = wrong_way_round(x);
    CHECK(w[0] == 2);
    for (int i = 1; i < 8; ++i) CHECK(w[i] == 0);

    Vec8Q y = qvec({Rational(1, 10), Rational(2, 5), 0, 0, 0, 0, 0, 0});
    Vec8Z w2 = wrong_way_round(y);
    CHECK(w2[0] == 0);
    CHECK(w2[1] == 1);
    for (int i = 2; i < 8; ++i) CHECK(w2[i] == 0);
}

TEST_CASE("wrong_way_round differs in exactly one place by one") {
    Rng rng(99);
    for (int t = 0; t < 50; ++t) {
        Vec8Q x = random_point(rng, 4, 5);
        Vec8Z r = round_nearest(x);
        Vec8Z w = wrong_way_round(x);
        int diffs = 0;
        for (int i = 0; i < 8; ++i) {
            Integer d = abs(w[i] - r[i]);
            if (d != 0) {
                ++diffs;
                CHECK(d == 1);
            }
        }
        CHECK(diffs == 1);
    }
}

TEST_CASE("decode fixes lattice points") {
    Vec8Q zero;
    CHECK(decode_e8(zero) == zero);
    Vec8Q half;
    for (int i = 0; i < 8; ++i) half[i] = Rational(1, 2);
    CHECK(is_e8_point(half));
    CHECK(decode_e8(half) == half);
    Vec8Q d8 = qvec({1, 1, 0, 0, 0, 0, 0, 0});
    CHECK(decode_e8(d8) == d8);
}

TEST_CASE("deep hole at distance one") {
    Vec8Q x = qvec({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(!is_e8_point(x));
    Vec8Q y = decode_e8(x);
    CHECK(is_e8_point(y));
    CHECK(dist2(x, y) == 1);
    CvpResult oracle = cvp_bruteforce(x);
    CHECK(oracle.dist2 == 1);
}

TEST_CASE("decoder matches the exhaustive oracle") {
    Rng rng(2024);
    for (int t = 0; t < 120; ++t) {
        Vec8Q x = random_point(rng, 3, 6);
        Vec8Q y = decode_e8(x);
        CHECK(is_e8_point(y));
        Rational fast = dist2(x, y);
        CvpResult oracle = cvp_bruteforce(x);
        CHECK(fast == oracle.dist2);
        CHECK(fast <= 1);
    }
}

TEST_CASE("translation invariance away from ties") {
    Rng rng(31);
    for (int t = 0; t < 40; ++t) {
        Vec8Q x = random_point(rng, 3, 6);
        // v in E8: even-coordinate integer vector
        Vec8Q v;
        for (int i = 0; i < 8; ++i) v[i] = Rational(2 * rng.coordinate(2));
        Vec8Q y1 = decode_e8(x);
        Vec8Q y2 = decode_e8(x + v);
        CHECK(dist2(x, y1) == dist2(x + v, y2));
    }
}

TEST_CASE("difference with decode lies in the Voronoi region") {
    // roots_std: generate from the embedding data of a built field is not
    // needed here; the 240 standard roots are the norm-2 points of E8.
    std::vector<Vec8Q> roots;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj) {
                    Vec8Q r;
                    r[i] = si == 0 ? 1 : -1;
                    r[j] = sj == 0 ? 1 : -1;
                    roots.push_back(r);
                }
    for (int mask = 0; mask < 256; ++mask) {
        int bits = 0;
        for (int i = 0; i < 8; ++i) bits += (mask >> i) & 1;
        if (bits % 2 != 0) continue;
        Vec8Q r;
        for (int i = 0; i < 8; ++i) r[i] = Rational(((mask >> i) & 1) != 0 ? -1 : 1, 2);
        roots.push_back(r);
    }
    REQUIRE(roots.size() == 240);

    CHECK(in_voronoi(Vec8Q{}, roots));
    CHECK(!in_voronoi(roots[0], roots));

    Rng rng(77);
    for (int t = 0; t < 30; ++t) {
        Vec8Q x;
        for (int i = 0; i < 8; ++i) {
            Rational c(rng.coordinate(4), rng.denominator(4));
            c.canonicalize();
            x[i] = c;
        }
        Vec8Q y = decode_e8(x);
        CHECK(in_voronoi(x - y, roots));
    }
}

TEST_CASE("dist2 basics") {
    Vec8Q v = qvec({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(dist2(v, v) == 0);
    CHECK(dist2(v, Vec8Q{}) == 1);
    Rng rng(5);
    Vec8Q a = random_point(rng, 4, 4), b = random_point(rng, 4, 4);
    CHECK(dist2(a, b) == dist2(b, a));
}

TEST_CASE("e8 membership") {
    CHECK(is_e8_point(Vec8Q{}));
    Vec8Q odd = qvec({1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(!is_e8_point(odd));
    Vec8Q mixed = qvec({Rational(1, 2), 1, 0, 0, 0, 0, 0, 0});
    CHECK(!is_e8_point(mixed));
    Vec8Q thirds = qvec({Rational(1, 3), 0, 0, 0, 0, 0, 0, 0});
    CHECK(!is_e8_point(thirds));
}
