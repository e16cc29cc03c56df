#pragma once

#include "rational.hpp"

#include <array>
#include <cstddef>

namespace euclid8 {

inline constexpr int kDim = 8;

struct Vec8Z {
    std::array<Integer, 8> c{};

    Integer& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Integer& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool operator==(const Vec8Z&) const = default;
    bool is_zero() const;
};

struct Vec8Q {
    std::array<Rational, 8> c{};

    Rational& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    const Rational& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    bool operator==(const Vec8Q&) const = default;
    bool is_zero() const;
};

// Row-major 8x8 rational matrix.
struct Mat8Q {
    std::array<Rational, 64> a{};

    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i * 8 + j)]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * 8 + j)]; }
    bool operator==(const Mat8Q&) const = default;

    static Mat8Q identity();
    Vec8Q column(int j) const;
    void set_column(int j, const Vec8Q& v);
};

struct Mat8Z {
    std::array<Integer, 64> a{};

    Integer& operator()(int i, int j) { return a[static_cast<std::size_t>(i * 8 + j)]; }
    const Integer& operator()(int i, int j) const { return a[static_cast<std::size_t>(i * 8 + j)]; }
    bool operator==(const Mat8Z&) const = default;
};

Vec8Q to_vec8q(const Vec8Z& v);
// Fails with not_divisible unless every entry is an integer.
Vec8Z to_vec8z(const Vec8Q& v);
bool is_integral(const Vec8Q& v);

Vec8Q operator+(const Vec8Q& x, const Vec8Q& y);
Vec8Q operator-(const Vec8Q& x, const Vec8Q& y);
Vec8Q operator-(const Vec8Q& x);
Vec8Q operator*(const Rational& s, const Vec8Q& x);
Vec8Z operator+(const Vec8Z& x, const Vec8Z& y);
Vec8Z operator-(const Vec8Z& x, const Vec8Z& y);
Vec8Z operator-(const Vec8Z& x);

Rational dot(const Vec8Q& x, const Vec8Q& y);
Integer dot(const Vec8Z& x, const Vec8Z& y);

Vec8Q operator*(const Mat8Q& m, const Vec8Q& v);
Mat8Q operator*(const Mat8Q& x, const Mat8Q& y);
Mat8Q operator*(const Rational& s, const Mat8Q& m);
Mat8Q transpose(const Mat8Q& m);

// Exact determinant by Gaussian elimination with nonzero pivoting.
Rational determinant(const Mat8Q& m);

// Unique x with m*x = rhs; singular_matrix when det(m) = 0.
Vec8Q solve_linear(const Mat8Q& m, const Vec8Q& rhs);

// singular_matrix when not invertible.
Mat8Q inverse(const Mat8Q& m);

// b^T * form * b.
Mat8Q gram_of_columns(const Mat8Q& b, const Mat8Q& form);

// Coefficients c[0..8] of det(xI - m), c[8] = 1 (Faddeev-LeVerrier).
std::array<Rational, 9> charpoly(const Mat8Q& m);

// Integer fraction-free (Bareiss) kernels used on the division hot path.
// x = num/den solves m*x = rhs, with den = |det(m)| > 0.
struct ScaledVec8 {
    Vec8Z num;
    Integer den;
};
ScaledVec8 solve_bareiss(const Mat8Z& m, const Vec8Z& rhs);
Integer determinant(const Mat8Z& m);

} // namespace euclid8
