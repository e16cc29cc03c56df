#include "errors.hpp"
#include "field.hpp"

namespace euclid8 {

const char* field_name(FieldId id) {
    switch (id) {
    case FieldId::zeta15: return "zeta15";
    case FieldId::zeta20: return "zeta20";
    case FieldId::zeta24: return "zeta24";
    case FieldId::biquadratic: return "biquadratic";
    }
    return "?";
}

std::optional<FieldId> field_from_name(std::string_view name) {
    for (FieldId id : kAllFields)
        if (name == field_name(id)) return id;
    return std::nullopt;
}

Rational FieldData::lemma_bound() const {
    Rational b(disc_K, Integer(4096));
    b.canonicalize();
    return b;
}

namespace {

void check_field(const FieldData& f, FieldId a) {
    if (a != f.id)
        fail(errkind::field_mismatch, "element does not belong to this field");
}

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

Vec8Z divexact_vec(const Vec8Z& v, const Integer& d) {
    Vec8Z out;
    for (int i = 0; i < kDim; ++i) {
        if (mpz_divisible_p(v[i].get_mpz_t(), d.get_mpz_t()) == 0)
            fail(errkind::certificate_failure, "coordinate vector left the lattice");
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), d.get_mpz_t());
    }
    return out;
}

} // namespace

Vec8Q mul_P(const FieldData& f, const Vec8Q& x, const Vec8Q& y) {
    Vec8Q out;
    for (int i = 0; i < kDim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < kDim; ++j) {
            if (y[j] == 0) continue;
            Rational c = x[i] * y[j];
            const Vec8Z& t = f.table.entry(i, j);
            for (int m = 0; m < kDim; ++m)
                if (t[m] != 0) out[m] += c * Rational(t[m]);
        }
    }
    return out;
}

Mat8Q mult_matrix_P(const FieldData& f, const Vec8Q& x) {
    Mat8Q out;
    for (int j = 0; j < kDim; ++j)
        for (int i = 0; i < kDim; ++i) {
            if (x[i] == 0) continue;
            const Vec8Z& t = f.table.entry(i, j);
            for (int m = 0; m < kDim; ++m)
                if (t[m] != 0) out(m, j) += x[i] * Rational(t[m]);
        }
    return out;
}

Vec8Q inv_P(const FieldData& f, const Vec8Q& x) {
    if (x.is_zero())
        fail(errkind::division_by_zero, "inverse of zero");
    Vec8Q one;
    one[0] = 1;
    return solve_linear(mult_matrix_P(f, x), one);
}

Rational trace_P(const FieldData& f, const Vec8Q& x) {
    Rational s;
    for (int k = 0; k < kDim; ++k)
        if (x[k] != 0) s += x[k] * Rational(f.trace_vec[k]);
    return s;
}

Rational norm_P(const FieldData& f, const Vec8Q& x) {
    // N(d x) = d^8 N(x) for the lcm denominator d, computed over the integers
    Integer den(1);
    for (int i = 0; i < kDim; ++i) {
        Integer g = gcd(den, x[i].get_den());
        den = den / g * x[i].get_den();
    }
    Vec8Z w;
    for (int i = 0; i < kDim; ++i) w[i] = x[i].get_num() * (den / x[i].get_den());
    Integer d = determinant(mult_matrix_zp(f.table, w));
    Integer den8(1);
    for (int i = 0; i < kDim; ++i) den8 *= den;
    Rational out(d, den8);
    out.canonicalize();
    return out;
}

Vec8Z table_mul_zp(const MultTable& t, const Vec8Z& w1, const Vec8Z& w2) {
    Vec8Z out;
    Integer c;
    for (int i = 0; i < kDim; ++i) {
        if (w1[i] == 0) continue;
        for (int j = 0; j < kDim; ++j) {
            if (w2[j] == 0) continue;
            c = w1[i] * w2[j];
            const Vec8Z& e = t.entry(i, j);
            for (int m = 0; m < kDim; ++m)
                if (e[m] != 0) out[m] += c * e[m];
        }
    }
    return out;
}

Mat8Z mult_matrix_zp(const MultTable& t, const Vec8Z& w) {
    Mat8Z out;
    for (int j = 0; j < kDim; ++j)
        for (int i = 0; i < kDim; ++i) {
            if (w[i] == 0) continue;
            const Vec8Z& e = t.entry(i, j);
            for (int m = 0; m < kDim; ++m)
                if (e[m] != 0) out(m, j) += w[i] * e[m];
        }
    return out;
}

FieldElement element(FieldId id, Vec8Q coords) {
    return FieldElement{id, std::move(coords)};
}

RingElement ring_element(FieldId id, Vec8Z coords) {
    return RingElement{id, std::move(coords)};
}

FieldElement mul(const FieldData& f, const FieldElement& x, const FieldElement& y) {
    check_same_field(f, x.field, y.field);
    Vec8Q p = mul_P(f, from_B(f, x.coords), from_B(f, y.coords));
    return {f.id, to_B(f, p)};
}

FieldElement inv(const FieldData& f, const FieldElement& x) {
    check_field(f, x.field);
    return {f.id, to_B(f, inv_P(f, from_B(f, x.coords)))};
}

FieldElement conj(const FieldData& f, const FieldElement& x) {
    check_field(f, x.field);
    Vec8Q out;
    for (int j = 0; j < kDim; ++j) {
        if (x.coords[j] == 0) continue;
        for (int i = 0; i < kDim; ++i)
            if (f.conj_B(i, j) != 0) out[i] += Rational(f.conj_B(i, j)) * x.coords[j];
    }
    return {f.id, out};
}

Rational trace(const FieldData& f, const FieldElement& x) {
    check_field(f, x.field);
    return trace_P(f, from_B(f, x.coords));
}

Rational norm(const FieldData& f, const FieldElement& x) {
    check_field(f, x.field);
    return norm_P(f, from_B(f, x.coords));
}

Rational inner(const FieldData& f, const FieldElement& x, const FieldElement& y) {
    check_same_field(f, x.field, y.field);
    Vec8Q xp = from_B(f, x.coords);
    Vec8Q yp = from_B(f, y.coords);
    Vec8Q ybar = f.conj_P * yp;
    return trace_P(f, mul_P(f, mul_P(f, xp, ybar), f.delta_inv_P));
}

Vec8Q to_B(const FieldData& f, const Vec8Q& p_coords) {
    return f.basis_B_inv * p_coords;
}

Vec8Q from_B(const FieldData& f, const Vec8Q& b_coords) {
    return f.basis_B * b_coords;
}

RingElement ring_mul(const FieldData& f, const RingElement& a, const RingElement& b) {
    check_same_field(f, a.field, b.field);
    // (s a)(s b) = s^2 ab in P-coordinates; mapping back to B costs another
    // factor b_from_ps_den / s, so the total exact divisor is den * s.
    Vec8Z prod = table_mul_zp(f.table, apply_int(f.ps_from_b, a.coords),
                              apply_int(f.ps_from_b, b.coords));
    Vec8Z num = apply_int(f.b_from_ps_num, prod);
    return {f.id, divexact_vec(num, f.b_from_ps_den * f.coord_scale)};
}

RingElement ring_add(const RingElement& a, const RingElement& b) {
    if (a.field != b.field)
        fail(errkind::field_mismatch, "elements belong to different fields");
    return {a.field, a.coords + b.coords};
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
    if (a.field != b.field)
        fail(errkind::field_mismatch, "elements belong to different fields");
    return {a.field, a.coords - b.coords};
}

Integer norm_ring_abs(const FieldData& f, const RingElement& a) {
    Integer d = determinant(mult_matrix_zp(f.table, apply_int(f.ps_from_b, a.coords)));
    Integer n;
    mpz_divexact(n.get_mpz_t(), d.get_mpz_t(), f.norm_scale.get_mpz_t());
    return n < 0 ? Integer(-n) : n;
}

} // namespace euclid8
