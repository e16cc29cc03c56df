#include "e8.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "field_internal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace euclid8 {

namespace {

// ---- polynomial helpers (coefficients low to high, exact) ----

std::vector<Integer> poly_divexact(std::vector<Integer> a, const std::vector<Integer>& b) {
    std::vector<Integer> q(a.size() - b.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Integer c = a[static_cast<std::size_t>(i) + b.size() - 1] / b.back();
        q[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[static_cast<std::size_t>(i) + j] -= c * b[j];
    }
    for (const auto& r : a)
        if (r != 0) fail(errkind::certificate_failure, "inexact polynomial division");
    return q;
}

std::vector<Integer> cyclotomic(int n) {
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divexact(std::move(p), cyclotomic(d));
    return p;
}

// ---- reference bases ----

void build_tables_cyclotomic(int n, MultTable& table, Mat8Q& conj_P) {
    std::vector<Integer> phi = cyclotomic(n);
    if (phi.size() != 9)
        fail(errkind::certificate_failure, "cyclotomic degree is not 8");
    // powers z^k reduced mod phi, for k = 0 .. n-1
    std::vector<Vec8Z> pw(static_cast<std::size_t>(n));
    pw[0][0] = 1;
    for (int k = 1; k < n; ++k) {
        const Vec8Z& prev = pw[static_cast<std::size_t>(k - 1)];
        Vec8Z v;
        Integer c = prev[7];
        for (int i = 7; i >= 1; --i) v[i] = prev[i - 1];
        v[0] = 0;
        if (c != 0)
            for (int i = 0; i < kDim; ++i) v[i] -= c * phi[static_cast<std::size_t>(i)];
        pw[static_cast<std::size_t>(k)] = v;
    }
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            int k = i + j;
            if (k < n) {
                table.entry(i, j) = pw[static_cast<std::size_t>(k)];
            } else {
                table.entry(i, j) = pw[static_cast<std::size_t>(k - n)];
            }
        }
    // conjugation: z^j -> z^(n-j)
    for (int j = 0; j < kDim; ++j) {
        const Vec8Z& col = pw[static_cast<std::size_t>(j == 0 ? 0 : n - j)];
        for (int i = 0; i < kDim; ++i) conj_P(i, j) = Rational(col[i]);
    }
}

void build_tables_biquadratic(MultTable& table, Mat8Q& conj_P) {
    // p_(a,b,c) = sqrt3^a sqrt5^b i^c, ordered 1, s3, s5, s15, i, is3, is5, is15
    auto index = [](int a, int b, int c) { return a + 2 * b + 4 * c; };
    for (int a1 = 0; a1 < 2; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int c1 = 0; c1 < 2; ++c1)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b2 = 0; b2 < 2; ++b2)
                        for (int c2 = 0; c2 < 2; ++c2) {
                            long coef = 1;
                            if (a1 + a2 == 2) coef *= 3;
                            if (b1 + b2 == 2) coef *= 5;
                            if (c1 + c2 == 2) coef *= -1;
                            Vec8Z v;
                            v[index((a1 + a2) % 2, (b1 + b2) % 2, (c1 + c2) % 2)] = coef;
                            table.entry(index(a1, b1, c1), index(a2, b2, c2)) = v;
                        }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                int j = index(a, b, c);
                conj_P(j, j) = c == 0 ? 1 : -1;
            }
}

// ---- temporary arithmetic over the reference basis during construction ----

struct TableCtx {
    const MultTable& table;
    Vec8Z trace_vec;

    explicit TableCtx(const MultTable& t) : table(t) {
        for (int k = 0; k < kDim; ++k) {
            Integer s;
            for (int i = 0; i < kDim; ++i) s += t.entry(k, i)[i];
            trace_vec[k] = s;
        }
    }

    Vec8Q mul(const Vec8Q& x, const Vec8Q& y) const {
        Vec8Q out;
        for (int i = 0; i < kDim; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < kDim; ++j) {
                if (y[j] == 0) continue;
                Rational c = x[i] * y[j];
                const Vec8Z& t = table.entry(i, j);
                for (int m = 0; m < kDim; ++m)
                    if (t[m] != 0) out[m] += c * Rational(t[m]);
            }
        }
        return out;
    }

    Mat8Q mult_matrix(const Vec8Q& x) const {
        Mat8Q out;
        for (int j = 0; j < kDim; ++j)
            for (int i = 0; i < kDim; ++i) {
                if (x[i] == 0) continue;
                const Vec8Z& t = table.entry(i, j);
                for (int m = 0; m < kDim; ++m)
                    if (t[m] != 0) out(m, j) += x[i] * Rational(t[m]);
            }
        return out;
    }

    Rational trace(const Vec8Q& x) const {
        Rational s;
        for (int k = 0; k < kDim; ++k)
            if (x[k] != 0) s += x[k] * Rational(trace_vec[k]);
        return s;
    }

    Vec8Q inverse(const Vec8Q& x) const {
        Vec8Q one;
        one[0] = 1;
        return solve_linear(mult_matrix(x), one);
    }

    bool is_integral_element(const Vec8Q& x) const {
        for (const Rational& c : charpoly(mult_matrix(x)))
            if (c.get_den() != 1) return false;
        return true;
    }

    // All real embeddings positive: the characteristic polynomial of a
    // totally real element has all roots real, and they are all positive
    // exactly when the coefficient signs alternate strictly.
    bool is_totally_positive(const Vec8Q& x) const {
        auto c = charpoly(mult_matrix(x));
        for (int k = 0; k <= kDim; ++k) {
            int want = (kDim - k) % 2 == 0 ? 1 : -1;
            int s = sgn(c[static_cast<std::size_t>(k)]);
            if (s != want) return false;
        }
        return true;
    }
};

// ---- integer lattice utilities ----

bool lex_less_vec(const Vec8Z& a, const Vec8Z& b) {
    for (int i = 0; i < kDim; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// Column-style reduction: returns a basis (pivot columns) of the lattice
// generated by cols. Requires the lattice to have full rank 8.
std::vector<Vec8Z> hnf_basis(std::vector<Vec8Z> cols) {
    std::vector<Vec8Z> out;
    std::size_t begin = 0;
    for (int row = 0; row < kDim; ++row) {
        while (true) {
            int nz = 0;
            std::size_t smallest = begin;
            Integer best;
            for (std::size_t j = begin; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                ++nz;
                Integer a = abs(cols[j][row]);
                if (best == 0 || a < best) {
                    best = a;
                    smallest = j;
                }
            }
            if (nz == 0)
                fail(errkind::certificate_failure, "lattice not of full rank");
            std::swap(cols[begin], cols[smallest]);
            if (nz == 1) break;
            for (std::size_t j = begin + 1; j < cols.size(); ++j) {
                if (cols[j][row] == 0) continue;
                Integer q = floor_div(cols[j][row], cols[begin][row]);
                if (q != 0)
                    for (int i = 0; i < kDim; ++i) cols[j][i] -= q * cols[begin][i];
            }
        }
        out.push_back(cols[begin]);
        ++begin;
    }
    return out;
}

// Z-basis of {x in Z^8 : a x = 0} via unimodular column operations.
std::vector<Vec8Z> integer_kernel(const Mat8Z& a) {
    std::array<Vec8Z, 8> cols;
    std::array<Vec8Z, 8> u;
    for (int j = 0; j < kDim; ++j) {
        for (int i = 0; i < kDim; ++i) cols[static_cast<std::size_t>(j)][i] = a(i, j);
        u[static_cast<std::size_t>(j)][j] = 1;
    }
    int r = 0;
    for (int row = 0; row < kDim; ++row) {
        while (true) {
            int nz = 0;
            int smallest = -1;
            Integer best;
            for (int j = r; j < kDim; ++j) {
                if (cols[static_cast<std::size_t>(j)][row] == 0) continue;
                ++nz;
                Integer v = abs(cols[static_cast<std::size_t>(j)][row]);
                if (smallest < 0 || v < best) {
                    best = v;
                    smallest = j;
                }
            }
            if (nz == 0) break;
            std::swap(cols[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(smallest)]);
            std::swap(u[static_cast<std::size_t>(r)], u[static_cast<std::size_t>(smallest)]);
            if (nz == 1) {
                ++r;
                break;
            }
            for (int j = r + 1; j < kDim; ++j) {
                Integer& head = cols[static_cast<std::size_t>(j)][row];
                if (head == 0) continue;
                Integer q = floor_div(head, cols[static_cast<std::size_t>(r)][row]);
                if (q == 0) continue;
                for (int i = 0; i < kDim; ++i) {
                    cols[static_cast<std::size_t>(j)][i] -= q * cols[static_cast<std::size_t>(r)][i];
                    u[static_cast<std::size_t>(j)][i] -= q * u[static_cast<std::size_t>(r)][i];
                }
            }
        }
    }
    std::vector<Vec8Z> kernel;
    for (int j = r; j < kDim; ++j) kernel.push_back(u[static_cast<std::size_t>(j)]);
    return kernel;
}

// ---- exact short-vector enumeration (Fincke-Pohst with rational LDL) ----

struct ShortVectors {
    int n;
    std::vector<Rational> d;   // diagonal
    std::vector<Rational> r;   // unit upper triangular, row major

    // throws certificate_failure unless gram is positive definite
    ShortVectors(const std::vector<Rational>& gram, int dim) : n(dim), d(static_cast<std::size_t>(dim)), r(static_cast<std::size_t>(dim * dim)) {
        auto G = gram;
        auto at = [&](int i, int j) -> Rational& { return G[static_cast<std::size_t>(i * n + j)]; };
        auto R = [&](int i, int j) -> Rational& { return r[static_cast<std::size_t>(i * n + j)]; };
        for (int i = 0; i < n; ++i) {
            Rational di = at(i, i);
            for (int j = 0; j < i; ++j) di -= d[static_cast<std::size_t>(j)] * R(j, i) * R(j, i);
            if (di <= 0)
                fail(errkind::certificate_failure, "form is not positive definite");
            d[static_cast<std::size_t>(i)] = di;
            R(i, i) = 1;
            for (int k = i + 1; k < n; ++k) {
                Rational s = at(i, k);
                for (int j = 0; j < i; ++j) s -= d[static_cast<std::size_t>(j)] * R(j, i) * R(j, k);
                R(i, k) = s / di;
            }
        }
    }

    // all v != 0 with v^T G v <= bound, each exactly once (both signs appear)
    std::vector<std::pair<Rational, std::vector<Integer>>> upto(const Rational& bound) const {
        std::vector<std::pair<Rational, std::vector<Integer>>> out;
        std::vector<Integer> v(static_cast<std::size_t>(n));
        rec(n - 1, bound, bound, v, out);
        return out;
    }

private:
    void rec(int i, const Rational& rem, const Rational& bound, std::vector<Integer>& v,
             std::vector<std::pair<Rational, std::vector<Integer>>>& out) const {
        if (i < 0) {
            bool zero = true;
            for (const auto& x : v)
                if (x != 0) { zero = false; break; }
            if (!zero) out.emplace_back(bound - rem, v);
            return;
        }
        Rational c;
        for (int k = i + 1; k < n; ++k)
            if (v[static_cast<std::size_t>(k)] != 0)
                c += r[static_cast<std::size_t>(i * n + k)] * Rational(v[static_cast<std::size_t>(k)]);
        // d_i (v_i + c)^2 <= rem; walk outward from -c in both directions,
        // starting at ceil(-c) so the first upward step is the nearest
        // integer >= -c (the quadratic is monotone on each side).
        Rational minus_c = -c;
        Integer start_up = ceil_div(minus_c.get_num(), minus_c.get_den());
        const Rational& di = d[static_cast<std::size_t>(i)];
        for (int dir = 0; dir < 2; ++dir) {
            Integer vi = dir == 0 ? start_up : start_up - 1;
            while (true) {
                Rational t = Rational(vi) + c;
                Rational val = di * t * t;
                if (val > rem) break;
                v[static_cast<std::size_t>(i)] = vi;
                rec(i - 1, rem - val, bound, v, out);
                vi += dir == 0 ? 1 : -1;
            }
            v[static_cast<std::size_t>(i)] = 0;
        }
    }
};

// ---- Dynkin matching ----

// Reorders 8 candidate base vectors so that gram(order[i], order[j]) equals
// the E8 matrix M; the E8 diagram has no nontrivial automorphism, so the
// result is unique when it exists.
template <typename GramFn>
std::vector<int> match_base_to_m(GramFn&& gram) {
    const Mat8Q& m = e8_gram_matrix();
    std::vector<int> order;
    std::vector<bool> used(8, false);
    std::array<std::array<Rational, 8>, 8> g;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = gram(i, j);

    std::function<bool()> bt = [&]() -> bool {
        int pos = static_cast<int>(order.size());
        if (pos == kDim) return true;
        for (int cand = 0; cand < kDim; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (g[static_cast<std::size_t>(cand)][static_cast<std::size_t>(cand)] != m(pos, pos)) continue;
            bool ok = true;
            for (int i = 0; i < pos; ++i) {
                int a = order[static_cast<std::size_t>(i)];
                if (g[static_cast<std::size_t>(a)][static_cast<std::size_t>(cand)] != m(i, pos)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(cand)] = true;
            order.push_back(cand);
            if (bt()) return true;
            order.pop_back();
            used[static_cast<std::size_t>(cand)] = false;
        }
        return false;
    };
    if (!bt())
        fail(errkind::base_not_found, "base cannot be ordered to match the E8 matrix");
    return order;
}

} // namespace

void build_tables(FieldId id, MultTable& table, Mat8Q& conj_P) {
    switch (id) {
    case FieldId::zeta15: build_tables_cyclotomic(15, table, conj_P); break;
    case FieldId::zeta20: build_tables_cyclotomic(20, table, conj_P); break;
    case FieldId::zeta24: build_tables_cyclotomic(24, table, conj_P); break;
    case FieldId::biquadratic: build_tables_biquadratic(table, conj_P); break;
    }
}

std::vector<Vec8Z> enumerate_roots(const Mat8Q& gram) {
    std::vector<Rational> g(64);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) g[static_cast<std::size_t>(i * 8 + j)] = gram(i, j);
    ShortVectors sv(g, kDim);
    std::vector<Vec8Z> roots;
    for (auto& [q, v] : sv.upto(Rational(2))) {
        if (q != 2) continue;
        Vec8Z root;
        for (int i = 0; i < kDim; ++i) root[i] = v[static_cast<std::size_t>(i)];
        roots.push_back(root);
    }
    std::sort(roots.begin(), roots.end(), lex_less_vec);
    return roots;
}

std::vector<Vec8Z> find_simple_roots(const std::vector<Vec8Z>& roots, const Mat8Q& gram) {
    // linear functional with no zeros on the roots: weights (1, k, k^2, ...)
    std::vector<Vec8Z> positive;
    for (Integer k(2); k < 200; ++k) {
        positive.clear();
        bool ok = true;
        for (const Vec8Z& v : roots) {
            Integer s;
            Integer w(1);
            for (int i = 0; i < kDim; ++i) {
                s += w * v[i];
                w *= k;
            }
            if (s == 0) {
                ok = false;
                break;
            }
            if (s > 0) positive.push_back(v);
        }
        if (ok) break;
        positive.clear();
    }
    if (positive.size() * 2 != roots.size())
        fail(errkind::base_not_found, "no functional separates the roots");

    std::set<Vec8Z, decltype(&lex_less_vec)> pos_set(&lex_less_vec);
    for (const Vec8Z& v : positive) pos_set.insert(v);

    // simple = positive and not the sum of two positive roots
    std::vector<Vec8Z> simple;
    for (const Vec8Z& v : positive) {
        bool decomposable = false;
        for (const Vec8Z& w : positive) {
            if (&w == &v) continue;
            if (pos_set.count(v - w) != 0) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple.push_back(v);
    }
    if (simple.size() != 8)
        fail(errkind::base_not_found, "expected 8 indecomposable positive roots");

    auto pair_ip = [&](const Vec8Z& a, const Vec8Z& b) {
        Rational s;
        for (int i = 0; i < kDim; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < kDim; ++j)
                if (b[j] != 0) s += Rational(a[i]) * gram(i, j) * Rational(b[j]);
        }
        return s;
    };
    std::vector<int> order = match_base_to_m([&](int i, int j) {
        return pair_ip(simple[static_cast<std::size_t>(i)], simple[static_cast<std::size_t>(j)]);
    });
    std::vector<Vec8Z> out;
    for (int idx : order) out.push_back(simple[static_cast<std::size_t>(idx)]);
    return out;
}

namespace {

// ---- per-field documented constants ----

// The sup-norm maximizer seeds are elements of |N| equal to the sup constant;
// the build replaces a seed by the first of its Galois conjugates that lands
// in the constructed Voronoi region (the region depends on which totally
// positive generator the deterministic search selects, and conjugating by an
// automorphism relabels the primitive root without changing any norm).
struct FieldConstants {
    long disc_K;
    Rational sup;
    std::optional<Rational> euclidean_min;
    Vec8Q maximizer_P;
};

FieldConstants field_constants(FieldId id) {
    Rational h(1, 2);
    FieldConstants c;
    switch (id) {
    case FieldId::zeta15:
        c.disc_K = 1125;
        c.sup = Rational(61, 256);
        c.euclidean_min = Rational(1, 16);
        // (z^7 + z^5 - z) / 2
        c.maximizer_P[7] = h;
        c.maximizer_P[5] = h;
        c.maximizer_P[1] = -h;
        break;
    case FieldId::zeta20:
        c.disc_K = 2000;
        c.sup = Rational(125, 256);
        c.euclidean_min = Rational(1, 5);
        // (z^6 + z^5 + z^4 - z) / 2
        c.maximizer_P[6] = h;
        c.maximizer_P[5] = h;
        c.maximizer_P[4] = h;
        c.maximizer_P[1] = -h;
        break;
    case FieldId::zeta24:
        c.disc_K = 2304;
        c.sup = Rational(9, 16);
        c.euclidean_min = Rational(1, 4);
        // (z^7 + z) / 2 - z^2; a Voronoi-cell vertex of norm exactly 9/16
        c.maximizer_P[7] = h;
        c.maximizer_P[2] = -1;
        c.maximizer_P[1] = h;
        break;
    case FieldId::biquadratic:
        c.disc_K = 3600;
        c.sup = Rational(225, 256);
        c.euclidean_min = std::nullopt;
        // -1 + (s3 + s15)/8 + (s5 + i s3)/4 - (i + i s5)/8
        c.maximizer_P[0] = -1;
        c.maximizer_P[1] = Rational(1, 8);
        c.maximizer_P[2] = Rational(1, 4);
        c.maximizer_P[3] = Rational(1, 8);
        c.maximizer_P[4] = Rational(-1, 8);
        c.maximizer_P[5] = Rational(1, 4);
        c.maximizer_P[6] = Rational(-1, 8);
        c.maximizer_P[7] = 0;
        break;
    }
    return c;
}

// Field automorphisms as matrices on P-coordinates, in a fixed order
// (identity first).
std::vector<Mat8Q> galois_matrices(FieldId id) {
    std::vector<Mat8Q> out;
    if (id == FieldId::biquadratic) {
        // sign flips on (sqrt3, sqrt5, i); p_(a,b,c) at index a + 2b + 4c
        for (int e3 = 0; e3 < 2; ++e3)
            for (int e5 = 0; e5 < 2; ++e5)
                for (int ei = 0; ei < 2; ++ei) {
                    Mat8Q m;
                    for (int a = 0; a < 2; ++a)
                        for (int b = 0; b < 2; ++b)
                            for (int c = 0; c < 2; ++c) {
                                int j = a + 2 * b + 4 * c;
                                int s = (a * e3 + b * e5 + c * ei) % 2 == 0 ? 1 : -1;
                                m(j, j) = s;
                            }
                    out.push_back(m);
                }
        return out;
    }
    int n = id == FieldId::zeta15 ? 15 : (id == FieldId::zeta20 ? 20 : 24);
    std::vector<Integer> phi = cyclotomic(n);
    std::vector<Vec8Z> pw(static_cast<std::size_t>(n));
    pw[0][0] = 1;
    for (int k = 1; k < n; ++k) {
        const Vec8Z& prev = pw[static_cast<std::size_t>(k - 1)];
        Vec8Z v;
        Integer c = prev[7];
        for (int i = 7; i >= 1; --i) v[i] = prev[i - 1];
        v[0] = 0;
        if (c != 0)
            for (int i = 0; i < kDim; ++i) v[i] -= c * phi[static_cast<std::size_t>(i)];
        pw[static_cast<std::size_t>(k)] = v;
    }
    for (int k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        Mat8Q m;
        for (int j = 0; j < kDim; ++j) {
            const Vec8Z& col = pw[static_cast<std::size_t>((j * k) % n)];
            for (int i = 0; i < kDim; ++i) m(i, j) = Rational(col[i]);
        }
        out.push_back(m);
    }
    return out;
}

// Gram matrix of <x|y> = Tr(x conj(y) / delta) on the given columns.
Mat8Q trace_gram(const TableCtx& ctx, const Mat8Q& conj_P, const Mat8Q& cols,
                 const Vec8Q& delta_inv) {
    std::array<Vec8Q, 8> conj_cols;
    for (int j = 0; j < kDim; ++j)
        conj_cols[static_cast<std::size_t>(j)] = ctx.mul(conj_P * cols.column(j), delta_inv);
    Mat8Q g;
    for (int i = 0; i < kDim; ++i) {
        Vec8Q ci = cols.column(i);
        for (int j = 0; j < kDim; ++j)
            g(i, j) = ctx.trace(ctx.mul(ci, conj_cols[static_cast<std::size_t>(j)]));
    }
    return g;
}

// Maximal order: saturate the reference order at 2 until the half-coordinate
// cosets contain no further algebraic integers. The E8 determinant-1
// certificate downstream proves maximality of the result.
Mat8Q integral_basis(FieldId id, const TableCtx& ctx) {
    Mat8Q b = Mat8Q::identity();
    if (id != FieldId::biquadratic) return b;  // power basis generates O_F
    bool changed = true;
    while (changed) {
        changed = false;
        for (unsigned mask = 1; mask < 256 && !changed; ++mask) {
            Vec8Q x;
            for (int j = 0; j < kDim; ++j) {
                if ((mask >> j & 1U) == 0) continue;
                for (int i = 0; i < kDim; ++i) x[i] += b(i, j) / 2;
            }
            if (!ctx.is_integral_element(x)) continue;
            Vec8Q c = solve_linear(b, x);
            if (is_integral(c)) continue;  // already in the current order
            // enlarge: common denominator, column HNF, scale back
            Integer den(1);
            auto lcm_in = [&den](const Rational& v) {
                Integer g = gcd(den, v.get_den());
                den = den / g * v.get_den();
            };
            for (int i = 0; i < 64; ++i) lcm_in(b.a[static_cast<std::size_t>(i)]);
            for (int i = 0; i < kDim; ++i) lcm_in(x[i]);
            std::vector<Vec8Z> cols;
            for (int j = 0; j < kDim; ++j) {
                Vec8Z col;
                for (int i = 0; i < kDim; ++i) {
                    Rational v = b(i, j) * Rational(den);
                    col[i] = v.get_num();
                }
                cols.push_back(col);
            }
            Vec8Z xc;
            for (int i = 0; i < kDim; ++i) xc[i] = Rational(x[i] * Rational(den)).get_num();
            cols.push_back(xc);
            std::vector<Vec8Z> basis = hnf_basis(std::move(cols));
            for (int j = 0; j < kDim; ++j)
                for (int i = 0; i < kDim; ++i) {
                    Rational v(basis[static_cast<std::size_t>(j)][i], den);
                    v.canonicalize();
                    b(i, j) = v;
                }
            changed = true;
        }
    }
    return b;
}

struct DeltaResult {
    Vec8Q delta_P;
    Mat8Q gram0;               // Gram on the integral basis columns
    std::vector<Vec8Z> roots0; // roots in integral-basis coordinates
};

// Deterministic search for a totally positive generator of Diff(K/Q):
// short vectors of the conjugation-fixed sublattice in increasing
// Tr(x conj(x)) order, filtered by |N| = disc_K^2, then total positivity,
// then the full E8 certificate on the resulting Gram matrix.
DeltaResult find_delta(const TableCtx& ctx, const Mat8Q& conj_P, const Mat8Q& b0,
                       const Integer& disc_K) {
    Mat8Q b0_inv = inverse(b0);
    Mat8Q conj_on_b = b0_inv * (conj_P * b0);
    Mat8Z cm;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (conj_on_b(i, j).get_den() != 1)
                fail(errkind::certificate_failure, "conjugation does not preserve the order");
            cm(i, j) = conj_on_b(i, j).get_num();
            if (i == j) cm(i, j) -= 1;
        }
    std::vector<Vec8Z> kernel = integer_kernel(cm);
    if (kernel.size() != 4)
        fail(errkind::certificate_failure, "fixed sublattice of conjugation is not rank 4");

    std::array<Vec8Q, 4> kp;  // kernel vectors in P-coordinates
    for (int k = 0; k < 4; ++k)
        kp[static_cast<std::size_t>(k)] = b0 * to_vec8q(kernel[static_cast<std::size_t>(k)]);

    // 4x4 form Tr(k_i conj(k_j)), positive definite
    std::vector<Rational> q(16);
    for (int i = 0; i < 4; ++i) {
        Vec8Q ci = conj_P * kp[static_cast<std::size_t>(i)];
        for (int j = 0; j < 4; ++j)
            q[static_cast<std::size_t>(4 * j + i)] =
                ctx.trace(ctx.mul(kp[static_cast<std::size_t>(j)], ci));
    }
    ShortVectors sv(q, 4);

    const Integer target = disc_K * disc_K;
    Rational prev_bound(0);
    Integer sqrt_disc;
    mpz_sqrt(sqrt_disc.get_mpz_t(), disc_K.get_mpz_t());
    Rational bound((sqrt_disc + 1) * 8);
    for (int rounds = 0; rounds < 24; ++rounds) {
        auto cands = sv.upto(bound);
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return a.second < b.second;
        });
        for (const auto& [qv, cvec] : cands) {
            if (qv <= prev_bound) continue;  // already tested in an earlier round
            Vec8Q dp;
            for (int k = 0; k < 4; ++k) {
                if (cvec[static_cast<std::size_t>(k)] == 0) continue;
                Rational c(cvec[static_cast<std::size_t>(k)]);
                for (int i = 0; i < kDim; ++i) dp[i] += c * kp[static_cast<std::size_t>(k)][i];
            }
            if (abs(determinant(ctx.mult_matrix(dp))) != target) continue;
            if (!ctx.is_totally_positive(dp)) continue;
            Vec8Q dinv = ctx.inverse(dp);
            Mat8Q g = trace_gram(ctx, conj_P, b0, dinv);
            bool integral = true;
            for (int i = 0; i < 64 && integral; ++i)
                integral = g.a[static_cast<std::size_t>(i)].get_den() == 1;
            if (!integral) continue;
            bool even = true;
            for (int i = 0; i < kDim && even; ++i) even = g(i, i).get_num() % 2 == 0;
            if (!even) continue;
            if (determinant(g) != 1) continue;
            std::vector<Vec8Z> roots;
            try {
                roots = enumerate_roots(g);  // also certifies positive definiteness
            } catch (const error&) {
                continue;
            }
            if (roots.size() != 240) continue;
            return DeltaResult{dp, g, roots};
        }
        prev_bound = bound;
        bound *= 2;
    }
    fail(errkind::certificate_failure, "no totally positive different generator found");
}

} // namespace

FieldData build_field(FieldId id) {
    FieldData f;
    f.id = id;
    build_tables(id, f.table, f.conj_P);
    TableCtx ctx(f.table);

    FieldConstants consts = field_constants(id);
    f.disc_K = consts.disc_K;
    f.norm_sup_voronoi = consts.sup;
    f.euclidean_minimum = consts.euclidean_min;
    f.sup_maximizer_P = consts.maximizer_P;

    Mat8Q b0 = integral_basis(id, ctx);
    DeltaResult delta = find_delta(ctx, f.conj_P, b0, f.disc_K);
    f.delta_P = delta.delta_P;

    std::vector<Vec8Z> simple = find_simple_roots(delta.roots0, delta.gram0);
    Mat8Q simple_mat;
    for (int j = 0; j < kDim; ++j)
        simple_mat.set_column(j, to_vec8q(simple[static_cast<std::size_t>(j)]));
    if (abs(determinant(simple_mat)) != 1)
        fail(errkind::certificate_failure, "simple roots do not span the lattice");
    f.basis_B = b0 * simple_mat;

    // all roots in B-coordinates
    Mat8Q simple_inv = inverse(simple_mat);
    f.roots.clear();
    for (const Vec8Z& v : delta.roots0) {
        Vec8Q rb = simple_inv * to_vec8q(v);
        f.roots.push_back(to_vec8z(rb));
    }
    std::sort(f.roots.begin(), f.roots.end(), lex_less_vec);

    // Gram of the inner product on the reference basis
    f.gram_P = trace_gram(ctx, f.conj_P, Mat8Q::identity(), ctx.inverse(f.delta_P));

    // standard-coordinate simple roots, reordered to match M
    const Mat8Q& std_roots = e8_standard_simple_roots();
    std::vector<int> order = match_base_to_m([&](int i, int j) {
        return dot(std_roots.column(i), std_roots.column(j));
    });
    for (int j = 0; j < kDim; ++j)
        f.embedding_S.set_column(j, std_roots.column(order[static_cast<std::size_t>(j)]));

    compute_derived(f);

    // pin the maximizer to this delta: first Galois conjugate inside the
    // constructed Voronoi region
    bool placed = false;
    for (const Mat8Q& sigma : galois_matrices(id)) {
        Vec8Q y = sigma * consts.maximizer_P;
        if (abs(norm_P(f, y)) != f.norm_sup_voronoi) continue;
        if (!in_voronoi(f.embedding_S * (f.basis_B_inv * y), f.roots_std)) continue;
        f.sup_maximizer_P = y;
        placed = true;
        break;
    }
    if (!placed)
        fail(errkind::certificate_failure,
             "no Galois conjugate of the maximizer lies in the Voronoi region");

    validate_field(f);
    return f;
}

void compute_derived(FieldData& f) {
    TableCtx ctx(f.table);
    f.trace_vec = ctx.trace_vec;
    f.basis_B_inv = inverse(f.basis_B);
    f.embedding_S_inv = inverse(f.embedding_S);
    f.delta_inv_P = ctx.inverse(f.delta_P);

    f.roots_std.clear();
    f.roots_std.reserve(f.roots.size());
    for (const Vec8Z& r : f.roots) f.roots_std.push_back(f.embedding_S * to_vec8q(r));

    Vec8Q one_p;
    one_p[0] = 1;
    f.one_B = to_vec8z(f.basis_B_inv * one_p);

    Mat8Q conj_b = f.basis_B_inv * (f.conj_P * f.basis_B);
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            if (conj_b(i, j).get_den() != 1)
                fail(errkind::certificate_failure, "conjugation is not integral on basis B");
            f.conj_B(i, j) = conj_b(i, j).get_num();
        }

    auto lcm_den = [](const Mat8Q& m) {
        Integer den(1);
        for (const Rational& v : m.a) {
            Integer g = gcd(den, v.get_den());
            den = den / g * v.get_den();
        }
        return den;
    };
    auto scaled_int = [](const Mat8Q& m, const Integer& den) {
        Mat8Z out;
        for (int i = 0; i < kDim; ++i)
            for (int j = 0; j < kDim; ++j) {
                Rational v = m(i, j) * Rational(den);
                out(i, j) = v.get_num();
            }
        return out;
    };

    f.coord_scale = lcm_den(f.basis_B);
    f.norm_scale = 1;
    for (int i = 0; i < kDim; ++i) f.norm_scale *= f.coord_scale;
    f.ps_from_b = scaled_int(f.basis_B, f.coord_scale);

    Integer d_binv = lcm_den(f.basis_B_inv);
    f.b_from_ps_num = scaled_int(f.basis_B_inv, d_binv);
    f.b_from_ps_den = d_binv * f.coord_scale;

    Mat8Q sb = f.embedding_S * f.basis_B_inv;
    Integer d_sb = lcm_den(sb);
    f.std_from_ps_num = scaled_int(sb, d_sb);
    f.std_from_ps_den = d_sb * f.coord_scale;

    Integer d_sinv = lcm_den(f.embedding_S_inv);
    f.b_from_std2_num = scaled_int(f.embedding_S_inv, d_sinv);
    f.b_from_std2_den = 2 * d_sinv;
}

void validate_field(const FieldData& f) {
    auto ensure = [](bool ok, const char* what) {
        if (!ok) fail(errkind::certificate_failure, what);
    };
    const Mat8Q& m = e8_gram_matrix();
    ensure(determinant(m) == 1, "E8 matrix determinant is not 1");

    // the trace form on basis B is exactly M
    ensure(gram_of_columns(f.basis_B, f.gram_P) == m, "Gram of basis B differs from M");

    // gram_P is itself the Gram of the inner product on P
    TableCtx ctx(f.table);
    Vec8Q dinv = ctx.inverse(f.delta_P);
    ensure(trace_gram(ctx, f.conj_P, Mat8Q::identity(), dinv) == f.gram_P,
           "stored gram_P mismatch");

    ensure(f.roots.size() == 240, "root count is not 240");
    for (const Vec8Z& r : f.roots) {
        Rational n;
        for (int i = 0; i < kDim; ++i) {
            if (r[i] == 0) continue;
            for (int j = 0; j < kDim; ++j)
                if (r[j] != 0) n += Rational(r[i]) * m(i, j) * Rational(r[j]);
        }
        ensure(n == 2, "root of inner square != 2");
    }

    ensure(gram_of_columns(f.embedding_S, Mat8Q::identity()) == m, "S^T S differs from M");
    ensure(ctx.is_totally_positive(f.delta_P), "delta is not totally positive");

    bool disc_ok = false;
    for (long d : {1125L, 2000L, 2304L, 3600L}) disc_ok |= f.disc_K == d;
    ensure(disc_ok, "unexpected real-subfield discriminant");

    Rational bound = f.lemma_bound();
    ensure(f.norm_sup_voronoi <= bound, "sup-norm constant exceeds the Lemma bound");
    if (f.euclidean_minimum)
        ensure(*f.euclidean_minimum <= f.norm_sup_voronoi,
               "Euclidean minimum exceeds the sup-norm constant");

    Vec8Q max_std = f.embedding_S * (f.basis_B_inv * f.sup_maximizer_P);
    ensure(in_voronoi(max_std, f.roots_std), "maximizer is outside the Voronoi region");
    ensure(abs(determinant(ctx.mult_matrix(f.sup_maximizer_P))) == f.norm_sup_voronoi,
           "maximizer norm differs from the sup constant");
}

} // namespace euclid8
