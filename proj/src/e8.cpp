#include "e8.hpp"

#include "errors.hpp"

namespace euclid8 {

const Mat8Q& e8_gram_matrix() {
    static const Mat8Q m = [] {
        const int rows[8][8] = {
            {2, 0, -1, 0, 0, 0, 0, 0},
            {0, 2, 0, -1, 0, 0, 0, 0},
            {-1, 0, 2, -1, 0, 0, 0, 0},
            {0, -1, -1, 2, -1, 0, 0, 0},
            {0, 0, 0, -1, 2, -1, 0, 0},
            {0, 0, 0, 0, -1, 2, -1, 0},
            {0, 0, 0, 0, 0, -1, 2, -1},
            {0, 0, 0, 0, 0, 0, -1, 2},
        };
        Mat8Q out;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) out(i, j) = rows[i][j];
        return out;
    }();
    return m;
}

const Mat8Q& e8_standard_simple_roots() {
    static const Mat8Q m = [] {
        // Columns (doubled to keep the table integral):
        //   a1 = (e1 + e8 - e2 - e3 - e4 - e5 - e6 - e7) / 2
        //   a2 = e1 + e2,  a_k = e_{k-1} - e_{k-2} for k = 3..8
        const int cols2[8][8] = {
            {1, -1, -1, -1, -1, -1, -1, 1},
            {2, 2, 0, 0, 0, 0, 0, 0},
            {-2, 2, 0, 0, 0, 0, 0, 0},
            {0, -2, 2, 0, 0, 0, 0, 0},
            {0, 0, -2, 2, 0, 0, 0, 0},
            {0, 0, 0, -2, 2, 0, 0, 0},
            {0, 0, 0, 0, -2, 2, 0, 0},
            {0, 0, 0, 0, 0, -2, 2, 0},
        };
        Mat8Q out;
        for (int j = 0; j < kDim; ++j)
            for (int i = 0; i < kDim; ++i) {
                Rational v(cols2[j][i], 2);
                v.canonicalize();
                out(i, j) = v;
            }
        return out;
    }();
    return m;
}

bool is_e8_point(const Vec8Q& y) {
    Integer sum2;
    bool integral = true, halves = true;
    for (int i = 0; i < kDim; ++i) {
        const Rational& v = y[i];
        if (v.get_den() == 1) {
            halves = false;
            sum2 += 2 * v.get_num();
        } else if (v.get_den() == 2) {
            integral = false;
            sum2 += v.get_num();
        } else {
            return false;
        }
    }
    if (!integral && !halves) return false;
    // coordinate sum must be an even integer
    return sum2 % 4 == 0;
}

namespace {

// round(p/q) with ties toward floor equals ceil((2p - q) / (2q)).
Integer round_half_down(const Integer& num, const Integer& den) {
    return ceil_div(2 * num - den, 2 * den);
}

Vec8Z round_scaled(const Vec8Z& num, const Integer& den) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = round_half_down(num[i], den);
    return out;
}

Vec8Z wrong_way_scaled(const Vec8Z& num, const Integer& den) {
    Vec8Z r = round_scaled(num, den);
    // distance to nearest integer in units of 1/den: |num_i - r_i * den|
    int arg = 0;
    Integer best(-1);
    std::array<Integer, 8> off;
    for (int i = 0; i < kDim; ++i) {
        off[static_cast<std::size_t>(i)] = num[i] - r[i] * den;
        Integer d = abs(off[static_cast<std::size_t>(i)]);
        if (d > best) {
            best = d;
            arg = i;
        }
    }
    // flip against the rounding direction; exact integers flip up
    r[arg] += off[static_cast<std::size_t>(arg)] >= 0 ? 1 : -1;
    return r;
}

// Best point of the integer coset D8 = {v in Z^8 : sum v_i even}, doubled.
Vec8Z best_d8_scaled2(const Vec8Z& num, const Integer& den) {
    Vec8Z r = round_scaled(num, den);
    Integer sum;
    for (int i = 0; i < kDim; ++i) sum += r[i];
    if (sum % 2 != 0) r = wrong_way_scaled(num, den);
    for (int i = 0; i < kDim; ++i) r[i] *= 2;
    return r;
}

} // namespace

Vec8Z round_nearest(const Vec8Q& x) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) out[i] = round_half_down(x[i].get_num(), x[i].get_den());
    return out;
}

Vec8Z wrong_way_round(const Vec8Q& x) {
    Vec8Z r = round_nearest(x);
    int arg = 0;
    Rational best(-1);
    for (int i = 0; i < kDim; ++i) {
        Rational d = abs(x[i] - Rational(r[i]));
        if (d > best) {
            best = d;
            arg = i;
        }
    }
    Rational off = x[arg] - Rational(r[arg]);
    r[arg] += off >= 0 ? 1 : -1;
    return r;
}

Vec8Z decode_e8_scaled2(const Vec8Z& num, const Integer& den) {
    // y0: best point of D8. y1: best point of D8 + (1/2,...,1/2), computed by
    // decoding x - 1/2 in D8 and shifting back. Both are always computed.
    Vec8Z y0 = best_d8_scaled2(num, den);

    Vec8Z num_shift;
    Integer den2 = 2 * den;
    for (int i = 0; i < kDim; ++i) num_shift[i] = 2 * num[i] - den;
    Vec8Z y1 = best_d8_scaled2(num_shift, den2);
    for (int i = 0; i < kDim; ++i) y1[i] += 1;

    // squared distances compared over the common denominator (2 den)^2
    Integer d0, d1, t;
    for (int i = 0; i < kDim; ++i) {
        t = 2 * num[i] - y0[i] * den;
        d0 += t * t;
        t = 2 * num[i] - y1[i] * den;
        d1 += t * t;
    }
    return d0 <= d1 ? y0 : y1;
}

Vec8Q decode_e8(const Vec8Q& x) {
    Integer den(1);
    for (int i = 0; i < kDim; ++i) {
        Integer g = gcd(den, x[i].get_den());
        den = den / g * x[i].get_den();
    }
    Vec8Z num;
    for (int i = 0; i < kDim; ++i) num[i] = x[i].get_num() * (den / x[i].get_den());
    Vec8Z y2 = decode_e8_scaled2(num, den);
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) {
        Rational v(y2[i], 2);
        v.canonicalize();
        out[i] = v;
    }
    return out;
}

Rational dist2(const Vec8Q& x, const Vec8Q& y) {
    Rational s;
    for (int i = 0; i < kDim; ++i) {
        Rational d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

namespace {

bool lex_less(const Vec8Q& a, const Vec8Q& b) {
    for (int i = 0; i < kDim; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

struct BoxSearch {
    // candidate doubled values per coordinate; a pass covers one coset (all
    // entries even = integer points, all odd = half-integer points)
    std::array<std::vector<Integer>, 8> cand2;
    const Vec8Q* x;
    Vec8Q point;
    Rational best;
    Vec8Q best_point;
    bool found = false;

    void run(int i, int par2, const Rational& acc) {
        if (found && acc > best) return;
        if (i == kDim) {
            if (par2 % 4 != 0) return;  // doubled coordinates must sum to 0 mod 4
            if (!found || acc < best || (acc == best && lex_less(point, best_point))) {
                best = acc;
                best_point = point;
                found = true;
            }
            return;
        }
        for (const Integer& v2 : cand2[static_cast<std::size_t>(i)]) {
            Rational half(v2, 2);
            half.canonicalize();
            Rational d = (*x)[i] - half;
            point[i] = half;
            run(i + 1, par2 + static_cast<int>(mpz_fdiv_ui(v2.get_mpz_t(), 4)), acc + d * d);
        }
    }
};

} // namespace

CvpResult cvp_bruteforce(const Vec8Q& x) {
    BoxSearch search;
    search.x = &x;
    for (int coset = 0; coset < 2; ++coset) {
        for (int i = 0; i < kDim; ++i) {
            auto& cands = search.cand2[static_cast<std::size_t>(i)];
            cands.clear();
            // doubled values w with |w/2 - x_i| <= 1 and w = coset (mod 2)
            Integer lo = ceil_div(2 * (x[i].get_num() - x[i].get_den()), x[i].get_den());
            Integer hi = floor_div(2 * (x[i].get_num() + x[i].get_den()), x[i].get_den());
            for (Integer w = lo; w <= hi; ++w)
                if (mpz_fdiv_ui(w.get_mpz_t(), 2) == static_cast<unsigned long>(coset))
                    cands.push_back(w);
        }
        search.run(0, 0, Rational(0));
    }
    if (!search.found)
        fail(errkind::certificate_failure, "cvp search box empty");
    return {search.best_point, search.best};
}

bool in_voronoi(const Vec8Q& x, const std::vector<Vec8Q>& roots_std) {
    for (const auto& r : roots_std) {
        Rational ip = dot(x, r);
        if (ip > 1 || ip < -1) return false;
    }
    return true;
}

} // namespace euclid8
