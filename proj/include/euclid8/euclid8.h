#ifndef EUCLID8_H
#define EUCLID8_H

/*
 * C interface to the euclid8 library: exact Euclidean division and GCD in
 * the rings of integers of Q(zeta15), Q(zeta20), Q(zeta24) and
 * Q(sqrt3, sqrt5, sqrt-1), via closest-vector decoding in the E8 lattice.
 *
 * Conventions:
 *   - field names: "zeta15", "zeta20", "zeta24", "biquadratic"
 *   - elements are arrays of 8 coordinate strings, each "p" or "p/q"
 *   - basis "B" (lattice basis, the default) or "P" (reference/power basis)
 *   - structured results come back as JSON in a malloc'd string; release
 *     with euclid8_string_free
 *   - on failure the return code classifies the error and
 *     euclid8_last_error / euclid8_last_error_kind describe it (per thread)
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum euclid8_status {
    EUCLID8_OK = 0,
    EUCLID8_ERROR_PARSE = 2,  /* malformed input or request */
    EUCLID8_ERROR_MATH = 3,   /* division by zero, field mismatch, ... */
    EUCLID8_ERROR_VERIFY = 4, /* certificate or verification failure */
    EUCLID8_ERROR_OTHER = 1
} euclid8_status;

typedef struct euclid8_field euclid8_field;

const char* euclid8_version(void);

/* Message and stable kind string ("DivisionByZero", ...) for the most
 * recent failure on the calling thread. */
const char* euclid8_last_error(void);
const char* euclid8_last_error_kind(void);

/* Builds (or loads from the cache directory in EUCLID8_CACHE_DIR) the full
 * certified field description. The handle is immutable and safe to share
 * across threads; close it with euclid8_field_close. */
euclid8_status euclid8_field_open(const char* name, euclid8_field** out);
void euclid8_field_close(euclid8_field* field);

const char* euclid8_field_name(const euclid8_field* field);

/* Complete serialized field data (schema-versioned JSON). */
euclid8_status euclid8_field_info(const euclid8_field* field, char** json_out);

/* Euclidean division a = b q + r with r = 0 or |N(r)| < |N(b)|.
 * Result JSON: {"q": [...], "r": [...], "norm_ratio": "p/q"} with q and r
 * in the requested basis. */
euclid8_status euclid8_divide(const euclid8_field* field, const char* const a[8],
                              const char* const b[8], const char* basis, char** json_out);

/* Extended gcd: {"g": [...], "u": [...], "v": [...]} with u a + v b = g.
 * g is only defined up to a unit. */
euclid8_status euclid8_gcd(const euclid8_field* field, const char* const a[8],
                           const char* const b[8], const char* basis, char** json_out);

/* Independent re-check of a division result: recomputes b q + r and the
 * norms from scratch and verifies a = b q + r with r = 0 or
 * |N(r)| < |N(b)|. */
euclid8_status euclid8_check_division(const euclid8_field* field, const char* const a[8],
                                      const char* const b[8], const char* const q[8],
                                      const char* const r[8], const char* basis);

/* One-shot JSON request -> JSON response (the CLI wire format). The
 * response document is produced for error outcomes as well. */
euclid8_status euclid8_run(const char* request_json, char** response_json);

void euclid8_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* EUCLID8_H */
