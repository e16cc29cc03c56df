#include "euclid.hpp"

#include "e8.hpp"
#include "errors.hpp"

namespace euclid8 {

namespace {

void check_same_field(const FieldData& f, FieldId a, FieldId b) {
    if (a != f.id || b != f.id)
        fail(errkind::field_mismatch, "elements belong to different fields");
}

Vec8Z apply_int(const Mat8Z& m, const Vec8Z& v) {
    Vec8Z out;
    for (int j = 0; j < kDim; ++j) {
        if (v[j] == 0) continue;
        for (int i = 0; i < kDim; ++i)
            if (m(i, j) != 0) out[i] += m(i, j) * v[j];
    }
    return out;
}

Vec8Z divexact_vec(const Vec8Z& v, const Integer& d, const char* what) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) {
        if (mpz_divisible_p(v[i].get_mpz_t(), d.get_mpz_t()) == 0)
            fail(errkind::certificate_failure, what);
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

} // namespace

DivisionResult divide(const FieldData& f, const RingElement& a, const RingElement& b) {
    check_same_field(f, a.field, b.field);
    if (b.coords.is_zero())
        fail(errkind::division_by_zero, "division by zero");

    // x = a/b in P-coordinates: solve mult(s b) x = (s a) over the integers.
    Vec8Z a_s = apply_int(f.ps_from_b, a.coords);
    Vec8Z b_s = apply_int(f.ps_from_b, b.coords);
    ScaledVec8 x = solve_bareiss(mult_matrix_zp(f.table, b_s), a_s);
    // the Bareiss denominator is |det| = s^8 |N(b)|
    Integer norm_b;
    mpz_divexact(norm_b.get_mpz_t(), x.den.get_mpz_t(), f.norm_scale.get_mpz_t());

    // standard coordinates x_std = num/den, fed to the decoder
    Vec8Z std_num = apply_int(f.std_from_ps_num, x.num);
    Integer std_den = x.den * f.std_from_ps_den;
    Vec8Z y2 = decode_e8_scaled2(std_num, std_den);

    // quotient back in B-coordinates (exact: y is a lattice point)
    Vec8Z q_num = apply_int(f.b_from_std2_num, y2);
    Vec8Z q = divexact_vec(q_num, f.b_from_std2_den, "decoded point is outside the lattice");

    RingElement quotient{f.id, q};
    RingElement remainder = ring_sub(a, ring_mul(f, b, quotient));
    Integer norm_r = norm_ring_abs(f, remainder);

    Rational ratio(norm_r, norm_b);
    ratio.canonicalize();
    if (!remainder.coords.is_zero() && norm_r >= norm_b)
        fail(errkind::certificate_failure, "remainder norm did not decrease");
    if (ratio > f.lemma_bound())
        fail(errkind::certificate_failure, "remainder violates the discriminant bound");
    return DivisionResult{std::move(quotient), std::move(remainder), std::move(ratio)};
}

XgcdResult xgcd(const FieldData& f, const RingElement& a, const RingElement& b) {
    check_same_field(f, a.field, b.field);
    if (a.coords.is_zero() && b.coords.is_zero())
        fail(errkind::both_zero, "gcd of (0, 0) is undefined");

    // (r0, r1) with Bezout rows; |N(r_k)| strictly decreases, so this stops.
    RingElement r0 = a, r1 = b;
    RingElement u0{f.id, f.one_B}, v0{f.id, {}};  // r0 = 1*a + 0*b
    RingElement u1{f.id, {}}, v1{f.id, f.one_B};  // r1 = 0*a + 1*b

    while (!r1.coords.is_zero()) {
        DivisionResult d = divide(f, r0, r1);
        RingElement u2 = ring_sub(u0, ring_mul(f, d.quotient, u1));
        RingElement v2 = ring_sub(v0, ring_mul(f, d.quotient, v1));
        r0 = r1;
        r1 = d.remainder;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    return XgcdResult{r0, u0, v0};
}

bool is_unit(const FieldData& f, const RingElement& x) {
    if (x.coords.is_zero()) return false;
    return norm_ring_abs(f, x) == 1;
}

std::optional<RingElement> exact_div(const FieldData& f, const RingElement& a,
                                     const RingElement& b) {
    check_same_field(f, a.field, b.field);
    if (b.coords.is_zero())
        fail(errkind::division_by_zero, "division by zero");
    Vec8Z a_s = apply_int(f.ps_from_b, a.coords);
    Vec8Z b_s = apply_int(f.ps_from_b, b.coords);
    // x_P = num/den solves b x = a; q_B = B^-1 x_P assembled exactly, then
    // tested for integrality.
    ScaledVec8 x = solve_bareiss(mult_matrix_zp(f.table, b_s), a_s);
    Vec8Z num = apply_int(f.b_from_ps_num, x.num);
    Rational scale(f.coord_scale, f.b_from_ps_den * x.den);
    scale.canonicalize();
    Vec8Q q;
    for (int i = 0; i < kDim; ++i) q[i] = Rational(num[i]) * scale;
    if (!is_integral(q)) return std::nullopt;
    return RingElement{f.id, to_vec8z(q)};
}

} // namespace euclid8
