#include "linalg.hpp"

#include "errors.hpp"

namespace euclid8 {

bool Vec8Z::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool Vec8Q::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

Mat8Q Mat8Q::identity() {
    Mat8Q m;
    for (int i = 0; i < kDim; ++i) m(i, i) = 1;
    return m;
}

Vec8Q Mat8Q::column(int j) const {
    Vec8Q v;
    for (int i = 0; i < kDim; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat8Q::set_column(int j, const Vec8Q& v) {
    for (int i = 0; i < kDim; ++i) (*this)(i, j) = v[i];
}

Vec8Q to_vec8q(const Vec8Z& v) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) out[i] = Rational(v[i]);
    return out;
}

bool is_integral(const Vec8Q& v) {
    for (const auto& x : v.c)
        if (x.get_den() != 1) return false;
    return true;
}

Vec8Z to_vec8z(const Vec8Q& v) {
    if (!is_integral(v))
        fail(errkind::not_divisible, "vector has non-integer entries");
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = v[i].get_num();
    return out;
}

Vec8Q operator+(const Vec8Q& x, const Vec8Q& y) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) out[i] = x[i] + y[i];
    return out;
}

Vec8Q operator-(const Vec8Q& x, const Vec8Q& y) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) out[i] = x[i] - y[i];
    return out;
}

Vec8Q operator-(const Vec8Q& x) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) out[i] = -x[i];
    return out;
}

Vec8Q operator*(const Rational& s, const Vec8Q& x) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) out[i] = s * x[i];
    return out;
}

Vec8Z operator+(const Vec8Z& x, const Vec8Z& y) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = x[i] + y[i];
    return out;
}

Vec8Z operator-(const Vec8Z& x, const Vec8Z& y) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = x[i] - y[i];
    return out;
}

Vec8Z operator-(const Vec8Z& x) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = -x[i];
    return out;
}

Rational dot(const Vec8Q& x, const Vec8Q& y) {
    Rational s;
    for (int i = 0; i < kDim; ++i) s += x[i] * y[i];
    return s;
}

Integer dot(const Vec8Z& x, const Vec8Z& y) {
    Integer s;
    for (int i = 0; i < kDim; ++i) s += x[i] * y[i];
    return s;
}

Vec8Q operator*(const Mat8Q& m, const Vec8Q& v) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) {
        Rational s;
        for (int j = 0; j < kDim; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Mat8Q operator*(const Mat8Q& x, const Mat8Q& y) {
    Mat8Q out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            Rational s;
            for (int k = 0; k < kDim; ++k) s += x(i, k) * y(k, j);
            out(i, j) = s;
        }
    return out;
}

Mat8Q operator*(const Rational& s, const Mat8Q& m) {
    Mat8Q out;
    for (int i = 0; i < 64; ++i) out.a[static_cast<std::size_t>(i)] = s * m.a[static_cast<std::size_t>(i)];
    return out;
}

Mat8Q transpose(const Mat8Q& m) {
    Mat8Q out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out(i, j) = m(j, i);
    return out;
}

Rational determinant(const Mat8Q& m) {
    Mat8Q w = m;
    Rational det(1);
    for (int k = 0; k < kDim; ++k) {
        int piv = -1;
        for (int i = k; i < kDim; ++i)
            if (w(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            for (int j = k; j < kDim; ++j) swap(w(k, j), w(piv, j));
            det = -det;
        }
        det *= w(k, k);
        Rational inv = 1 / w(k, k);
        for (int i = k + 1; i < kDim; ++i) {
            if (w(i, k) == 0) continue;
            Rational f = w(i, k) * inv;
            for (int j = k; j < kDim; ++j) w(i, j) -= f * w(k, j);
        }
    }
    return det;
}

namespace {

// Gauss-Jordan on [m | rhs...]; cols is the number of right-hand sides.
void eliminate(std::array<Rational, 8 * 16>& w, int cols) {
    const int stride = kDim + cols;
    auto at = [&](int i, int j) -> Rational& { return w[static_cast<std::size_t>(i * stride + j)]; };
    for (int k = 0; k < kDim; ++k) {
        int piv = -1;
        for (int i = k; i < kDim; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0)
            fail(errkind::singular_matrix, "matrix is singular");
        if (piv != k)
            for (int j = 0; j < stride; ++j) swap(at(k, j), at(piv, j));
        Rational inv = 1 / at(k, k);
        for (int j = 0; j < stride; ++j) at(k, j) *= inv;
        for (int i = 0; i < kDim; ++i) {
            if (i == k || at(i, k) == 0) continue;
            Rational f = at(i, k);
            for (int j = k; j < stride; ++j) at(i, j) -= f * at(k, j);
        }
    }
}

} // namespace

Vec8Q solve_linear(const Mat8Q& m, const Vec8Q& rhs) {
    std::array<Rational, 8 * 16> w;
    const int stride = kDim + 1;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) w[static_cast<std::size_t>(i * stride + j)] = m(i, j);
        w[static_cast<std::size_t>(i * stride + kDim)] = rhs[i];
    }
    eliminate(w, 1);
    Vec8Q x;
    for (int i = 0; i < kDim; ++i) x[i] = w[static_cast<std::size_t>(i * stride + kDim)];
    return x;
}

Mat8Q inverse(const Mat8Q& m) {
    std::array<Rational, 8 * 16> w;
    const int stride = 2 * kDim;
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) w[static_cast<std::size_t>(i * stride + j)] = m(i, j);
        w[static_cast<std::size_t>(i * stride + kDim + i)] = 1;
    }
    eliminate(w, kDim);
    Mat8Q out;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) out(i, j) = w[static_cast<std::size_t>(i * stride + kDim + j)];
    return out;
}

Mat8Q gram_of_columns(const Mat8Q& b, const Mat8Q& form) {
    return transpose(b) * (form * b);
}

std::array<Rational, 9> charpoly(const Mat8Q& m) {
    std::array<Rational, 9> c{};
    c[8] = 1;
    Mat8Q mk;                       // M_0 = 0
    for (int k = 1; k <= kDim; ++k) {
        if (k == 1) {
            mk = Mat8Q::identity();
        } else {
            mk = m * mk;
            for (int i = 0; i < kDim; ++i) mk(i, i) += c[static_cast<std::size_t>(kDim - k + 1)];
        }
        Mat8Q am = m * mk;
        Rational tr;
        for (int i = 0; i < kDim; ++i) tr += am(i, i);
        c[static_cast<std::size_t>(kDim - k)] = -tr / k;
    }
    return c;
}

ScaledVec8 solve_bareiss(const Mat8Z& m, const Vec8Z& rhs) {
    // Fraction-free elimination on [m | rhs]: every intermediate entry is an
    // exact integer minor, and the final pivot is +-det(m).
    std::array<Integer, 8 * 9> w;
    const int stride = kDim + 1;
    auto at = [&](int i, int j) -> Integer& { return w[static_cast<std::size_t>(i * stride + j)]; };
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) at(i, j) = m(i, j);
        at(i, kDim) = rhs[i];
    }
    Integer prev(1);
    Integer t;
    for (int k = 0; k < kDim; ++k) {
        int piv = -1;
        for (int i = k; i < kDim; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0)
            fail(errkind::singular_matrix, "matrix is singular");
        if (piv != k)
            for (int j = k; j < stride; ++j) swap(at(k, j), at(piv, j));
        for (int i = k + 1; i < kDim; ++i) {
            for (int j = k + 1; j < stride; ++j) {
                t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    // The final pivot is the determinant of the row-permuted system; back
    // substitution with it as common denominator stays in integers:
    // x_i = (d * b_i - sum_{j>i} u_ij x_j) / u_ii.
    Integer den = prev;
    ScaledVec8 out;
    for (int i = kDim - 1; i >= 0; --i) {
        Integer s = den * at(i, kDim);
        for (int j = i + 1; j < kDim; ++j) s -= at(i, j) * out.num[j];
        mpz_divexact(out.num[i].get_mpz_t(), s.get_mpz_t(), at(i, i).get_mpz_t());
    }
    if (den < 0) {
        den = -den;
        for (int i = 0; i < kDim; ++i) out.num[i] = -out.num[i];
    }
    out.den = den;
    return out;
}

Integer determinant(const Mat8Z& m) {
    std::array<Integer, 64> w;
    auto at = [&](int i, int j) -> Integer& { return w[static_cast<std::size_t>(i * 8 + j)]; };
    for (int i = 0; i < 64; ++i) w[static_cast<std::size_t>(i)] = m.a[static_cast<std::size_t>(i)];
    Integer prev(1);
    int sign = 1;
    Integer t;
    for (int k = 0; k < kDim; ++k) {
        int piv = -1;
        for (int i = k; i < kDim; ++i)
            if (at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Integer(0);
        if (piv != k) {
            for (int j = k; j < kDim; ++j) swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < kDim; ++i) {
            for (int j = k + 1; j < kDim; ++j) {
                t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign < 0 ? Integer(-prev) : prev;
}

} // namespace euclid8
