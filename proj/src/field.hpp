#pragma once

#include "linalg.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace euclid8 {

enum class FieldId { zeta15, zeta20, zeta24, biquadratic };

inline constexpr std::array<FieldId, 4> kAllFields = {
    FieldId::zeta15, FieldId::zeta20, FieldId::zeta24, FieldId::biquadratic};

const char* field_name(FieldId id);
std::optional<FieldId> field_from_name(std::string_view name);

// Structure constants over the reference basis P: entry(i, j) holds the
// P-coordinates of p_i * p_j. P is the power basis (1, z, ..., z^7) for the
// cyclotomic fields and (1, s3, s5, s15, i, i*s3, i*s5, i*s15) for
// Q(sqrt3, sqrt5, sqrt-1); in both cases the products have integer
// coordinates.
struct MultTable {
    std::array<Vec8Z, 64> t;

    Vec8Z& entry(int i, int j) { return t[static_cast<std::size_t>(i * 8 + j)]; }
    const Vec8Z& entry(int i, int j) const { return t[static_cast<std::size_t>(i * 8 + j)]; }
};

// Elements are given by their coordinates in the lattice basis B (the simple
// roots), which is a Z-basis of O_F: integer coordinates exactly when the
// element is an algebraic integer.
struct FieldElement {
    FieldId field;
    Vec8Q coords;
};

struct RingElement {
    FieldId field;
    Vec8Z coords;
};

struct FieldData {
    FieldId id;
    MultTable table;
    Mat8Q conj_P;   // complex conjugation on P-coordinates
    Vec8Q delta_P;  // totally positive generator of Diff(K/Q), P-coordinates
    Integer disc_K; // discriminant of the real subfield
    Mat8Q basis_B;  // columns: P-coordinates of the simple roots a_1..a_8
    Mat8Q gram_P;   // matrix of <x|y> = Tr(x conj(y)/delta) on basis P
    Mat8Q embedding_S;          // B-coordinates -> standard E8 coordinates, S^T S = M
    std::vector<Vec8Z> roots;   // the 240 norm-2 vectors, B-coordinates, sorted
    std::optional<Rational> euclidean_minimum;  // M_F, documentation constant
    Rational norm_sup_voronoi;  // sup of |N| on the closed Voronoi region
    Vec8Q sup_maximizer_P;      // P-coordinates of an element attaining it

    // --- derived data, recomputed from the above (not serialized) ---
    Mat8Q basis_B_inv;
    Mat8Q embedding_S_inv;
    std::vector<Vec8Q> roots_std;  // embedding_S * root, for Voronoi tests
    Vec8Z one_B;                   // B-coordinates of 1
    Vec8Q delta_inv_P;
    Vec8Z trace_vec;               // Tr(p_k) for k = 0..7 (traces are integers)
    Mat8Z conj_B;                  // conjugation on B-coordinates (integral)

    // Integer fast path. coord_scale = s is the lcm of the denominators of
    // basis_B, so s * x_P is integral for every x in O_F ("sP coordinates").
    Integer coord_scale;
    Integer norm_scale;            // s^8; |N(a)| = |det mult_matrix_zp(s a_P)| / s^8
    Mat8Z ps_from_b;               // x_sP = ps_from_b * x_B  (= s * basis_B)
    Mat8Z b_from_ps_num;           // x_B = b_from_ps_num * x_sP / b_from_ps_den
    Integer b_from_ps_den;
    Mat8Z std_from_ps_num;         // x_std = std_from_ps_num * x_sP / std_from_ps_den
    Integer std_from_ps_den;       //   (x_std = S * B^-1 * x_P)
    Mat8Z b_from_std2_num;         // x_B = b_from_std2_num * (2 x_std) / b_from_std2_den
    Integer b_from_std2_den;

    Rational lemma_bound() const;  // disc_K / 4096
};

// Runs the whole construction pipeline with its certificates; throws
// certificate_failure if any check fails.
FieldData build_field(FieldId id);

// Memoized access. When EUCLID8_CACHE_DIR is set, field data is cached there
// as JSON (validated on load) so builds are byte-identical across runs.
const FieldData& get_field(FieldId id);

// --- P-coordinate arithmetic core ---
Vec8Q mul_P(const FieldData& f, const Vec8Q& x, const Vec8Q& y);
Mat8Q mult_matrix_P(const FieldData& f, const Vec8Q& x);
Vec8Q inv_P(const FieldData& f, const Vec8Q& x);  // division_by_zero when x = 0
Rational trace_P(const FieldData& f, const Vec8Q& x);
Rational norm_P(const FieldData& f, const Vec8Q& x);

// Integer-only table kernels on literal integer P-coordinate vectors.
// table_mul_zp returns the coordinate product (w1 * w2 as field elements);
// mult_matrix_zp(w) sends y_P to (w * y)_P and has determinant N(w).
Vec8Z table_mul_zp(const MultTable& t, const Vec8Z& w1, const Vec8Z& w2);
Mat8Z mult_matrix_zp(const MultTable& t, const Vec8Z& w);

// --- operations on elements in basis B ---
FieldElement element(FieldId id, Vec8Q coords);
FieldElement mul(const FieldData& f, const FieldElement& x, const FieldElement& y);
FieldElement inv(const FieldData& f, const FieldElement& x);
FieldElement conj(const FieldData& f, const FieldElement& x);
Rational trace(const FieldData& f, const FieldElement& x);
Rational norm(const FieldData& f, const FieldElement& x);
Rational inner(const FieldData& f, const FieldElement& x, const FieldElement& y);

Vec8Q to_B(const FieldData& f, const Vec8Q& p_coords);
Vec8Q from_B(const FieldData& f, const Vec8Q& b_coords);

// --- ring element helpers (integer B-coordinates) ---
RingElement ring_element(FieldId id, Vec8Z coords);
RingElement ring_mul(const FieldData& f, const RingElement& a, const RingElement& b);
RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
Integer norm_ring_abs(const FieldData& f, const RingElement& a);  // |N(a)|

// --- lattice routines ---
// All integer vectors v != 0 with v^T gram v = 2, sorted lexicographically;
// certifies positive definiteness along the way (exact LDL^T).
std::vector<Vec8Z> enumerate_roots(const Mat8Q& gram);

// Selects a base of the root system and orders it so its Gram matrix equals
// e8_gram_matrix(); throws base_not_found when the input is not an E8 root
// system.
std::vector<Vec8Z> find_simple_roots(const std::vector<Vec8Z>& roots, const Mat8Q& gram);

} // namespace euclid8
