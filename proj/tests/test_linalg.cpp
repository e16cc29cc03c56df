#include "errors.hpp"
#include "linalg.hpp"
#include "rng.hpp"

#include <doctest.h>

using namespace euclid8;

namespace {

// independent oracle: cofactor expansion along the first row
Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Rational>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rational term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

Rational cofactor_det(const Mat8Q& m) {
    std::vector<std::vector<Rational>> rows(8, std::vector<Rational>(8));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return cofactor_det(rows);
}

Mat8Q random_matrix(Rng& rng, int bits) {
    Mat8Q m;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Rational c(rng.coordinate(bits), rng.denominator(2));
            c.canonicalize();
            m(i, j) = c;
        }
    return m;
}

Vec8Q random_vector(Rng& rng, int bits) {
    Vec8Q v;
    for (int i = 0; i < 8; ++i) v[i] = Rational(rng.coordinate(bits));
    return v;
}

} // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(to_string(parse_rational("5")) == "5");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(to_string(Rational(7, 1)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), error);
    CHECK_THROWS_AS(parse_rational("x"), error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), error);
    CHECK_THROWS_AS(parse_rational(""), error);
}

TEST_CASE("determinant of identity and diagonal") {
    CHECK(determinant(Mat8Q::identity()) == 1);
    Mat8Q two;
    for (int i = 0; i < 8; ++i) two(i, i) = 2;
    CHECK(determinant(two) == 256);
    Mat8Q zero;
    CHECK(determinant(zero) == 0);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    Rng rng(7);
    for (int t = 0; t < 4; ++t) {
        Mat8Q m = random_matrix(rng, 4);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    Rng rng(11);
    for (int t = 0; t < 4; ++t) {
        Mat8Q a = random_matrix(rng, 5);
        Mat8Q b = random_matrix(rng, 5);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("solve_linear identity and singular") {
    Rng rng(3);
    Vec8Q v = random_vector(rng, 10);
    CHECK(solve_linear(Mat8Q::identity(), v) == v);
    Mat8Q zero;
    CHECK_THROWS_AS(solve_linear(zero, v), error);
}

TEST_CASE("solve_linear round trip") {
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
        Mat8Q a = random_matrix(rng, 6);
        if (determinant(a) == 0) continue;
        Vec8Q x = random_vector(rng, 8);
        CHECK(solve_linear(a, a * x) == x);
    }
}

TEST_CASE("inverse round trip") {
    Rng rng(13);
    Mat8Q a = random_matrix(rng, 5);
    REQUIRE(determinant(a) != 0);
    CHECK(a * inverse(a) == Mat8Q::identity());
}

TEST_CASE("gram_of_columns") {
    Mat8Q form = Mat8Q::identity();
    Rng rng(17);
    Mat8Q m = random_matrix(rng, 4);
    CHECK(gram_of_columns(Mat8Q::identity(), m) == m);
    Mat8Q twoi;
    for (int i = 0; i < 8; ++i) twoi(i, i) = 2;
    Mat8Q four = gram_of_columns(twoi, form);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) CHECK(four(i, j) == (i == j ? 4 : 0));
}

TEST_CASE("integer bareiss solve matches rational solve") {
    Rng rng(23);
    for (int t = 0; t < 6; ++t) {
        Mat8Z m;
        Vec8Z rhs;
        Mat8Q mq;
        Vec8Q rq;
        for (int i = 0; i < 8; ++i) {
            rhs[i] = rng.coordinate(12);
            rq[i] = Rational(rhs[i]);
            for (int j = 0; j < 8; ++j) {
                m(i, j) = rng.coordinate(12);
                mq(i, j) = Rational(m(i, j));
            }
        }
        if (determinant(mq) == 0) continue;
        ScaledVec8 fast = solve_bareiss(m, rhs);
        Vec8Q exact = solve_linear(mq, rq);
        CHECK(fast.den > 0);
        for (int i = 0; i < 8; ++i) {
            Rational got(fast.num[i], fast.den);
            got.canonicalize();
            CHECK(got == exact[i]);
        }
        CHECK(abs(determinant(m)) == fast.den);
    }
}

TEST_CASE("charpoly of diagonal matrix") {
    Mat8Q two;
    for (int i = 0; i < 8; ++i) two(i, i) = 2;
    auto c = charpoly(two);
    // (x - 2)^8: coefficients 256, -1024, 1792, -1792, 1120, -448, 112, -16, 1
    CHECK(c[8] == 1);
    CHECK(c[7] == -16);
    CHECK(c[0] == 256);
    CHECK(c[1] == -1024);
}
