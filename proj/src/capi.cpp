#include <euclid8/euclid8.h>

#include "errors.hpp"
#include "euclid.hpp"
#include "field_io.hpp"
#include "request.hpp"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <string>

using namespace euclid8;

struct euclid8_field {
    const FieldData* data;  // owned by the process-wide cache
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_error_kind = "None";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

euclid8_status status_of(errkind k) {
    switch (errkind_exit_code(k)) {
    case 2: return EUCLID8_ERROR_PARSE;
    case 3: return EUCLID8_ERROR_MATH;
    case 4: return EUCLID8_ERROR_VERIFY;
    default: return EUCLID8_ERROR_OTHER;
    }
}

template <typename Fn>
euclid8_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        g_last_error_kind = "None";
        return EUCLID8_OK;
    } catch (const error& e) {
        g_last_error = e.what();
        g_last_error_kind = errkind_name(e.kind());
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        g_last_error_kind = "InternalError";
        return EUCLID8_ERROR_OTHER;
    }
}

Vec8Q parse_coords(const char* const coords[8], const char* what) {
    if (coords == nullptr)
        fail(errkind::parse_error, std::string(what) + ": null coordinate array");
    Vec8Q v;
    for (int i = 0; i < kDim; ++i) {
        if (coords[i] == nullptr)
            fail(errkind::parse_error, std::string(what) + ": null coordinate string");
        v[i] = parse_rational(coords[i]);
    }
    return v;
}

bool parse_basis(const char* basis) {
    if (basis == nullptr || std::strcmp(basis, "B") == 0) return false;
    if (std::strcmp(basis, "P") == 0) return true;
    fail(errkind::parse_error, "basis must be \"B\" or \"P\"");
}

RingElement parse_ring(const FieldData& f, const char* const coords[8], bool in_p,
                       const char* what) {
    Vec8Q v = parse_coords(coords, what);
    if (in_p) v = to_B(f, v);
    if (!is_integral(v))
        fail(errkind::parse_error,
             std::string(what) + " is not an algebraic integer (non-integral B-coordinates)");
    return RingElement{f.id, to_vec8z(v)};
}

nlohmann::json ring_to_json(const FieldData& f, const RingElement& x, bool in_p) {
    Vec8Q v = in_p ? from_B(f, to_vec8q(x.coords)) : to_vec8q(x.coords);
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < kDim; ++i) arr.push_back(to_string(v[i]));
    return arr;
}

} // namespace

extern "C" {

const char* euclid8_version(void) { return "0.1.0"; }

const char* euclid8_last_error(void) { return g_last_error.c_str(); }

const char* euclid8_last_error_kind(void) { return g_last_error_kind.c_str(); }

euclid8_status euclid8_field_open(const char* name, euclid8_field** out) {
    return guarded([&] {
        if (name == nullptr || out == nullptr)
            fail(errkind::parse_error, "null argument");
        auto id = field_from_name(name);
        if (!id)
            fail(errkind::parse_error, std::string("unknown field \"") + name + "\"");
        *out = new euclid8_field{&get_field(*id)};
    });
}

void euclid8_field_close(euclid8_field* field) {
    delete field;
}

const char* euclid8_field_name(const euclid8_field* field) {
    return field == nullptr ? "" : field_name(field->data->id);
}

euclid8_status euclid8_field_info(const euclid8_field* field, char** json_out) {
    return guarded([&] {
        if (field == nullptr || json_out == nullptr)
            fail(errkind::parse_error, "null argument");
        *json_out = dup_string(field_to_json(*field->data));
    });
}

euclid8_status euclid8_divide(const euclid8_field* field, const char* const a[8],
                              const char* const b[8], const char* basis, char** json_out) {
    return guarded([&] {
        if (field == nullptr || json_out == nullptr)
            fail(errkind::parse_error, "null argument");
        const FieldData& f = *field->data;
        bool in_p = parse_basis(basis);
        RingElement ea = parse_ring(f, a, in_p, "a");
        RingElement eb = parse_ring(f, b, in_p, "b");
        DivisionResult d = divide(f, ea, eb);
        nlohmann::json out;
        out["basis"] = in_p ? "P" : "B";
        out["q"] = ring_to_json(f, d.quotient, in_p);
        out["r"] = ring_to_json(f, d.remainder, in_p);
        out["norm_ratio"] = to_string(d.norm_ratio);
        *json_out = dup_string(out.dump());
    });
}

euclid8_status euclid8_gcd(const euclid8_field* field, const char* const a[8],
                           const char* const b[8], const char* basis, char** json_out) {
    return guarded([&] {
        if (field == nullptr || json_out == nullptr)
            fail(errkind::parse_error, "null argument");
        const FieldData& f = *field->data;
        bool in_p = parse_basis(basis);
        RingElement ea = parse_ring(f, a, in_p, "a");
        RingElement eb = parse_ring(f, b, in_p, "b");
        XgcdResult g = xgcd(f, ea, eb);
        nlohmann::json out;
        out["basis"] = in_p ? "P" : "B";
        out["g"] = ring_to_json(f, g.g, in_p);
        out["u"] = ring_to_json(f, g.u, in_p);
        out["v"] = ring_to_json(f, g.v, in_p);
        *json_out = dup_string(out.dump());
    });
}

euclid8_status euclid8_check_division(const euclid8_field* field, const char* const a[8],
                                      const char* const b[8], const char* const q[8],
                                      const char* const r[8], const char* basis) {
    return guarded([&] {
        if (field == nullptr)
            fail(errkind::parse_error, "null argument");
        const FieldData& f = *field->data;
        bool in_p = parse_basis(basis);
        RingElement ea = parse_ring(f, a, in_p, "a");
        RingElement eb = parse_ring(f, b, in_p, "b");
        RingElement eq = parse_ring(f, q, in_p, "q");
        RingElement er = parse_ring(f, r, in_p, "r");
        RingElement back = ring_add(ring_mul(f, eb, eq), er);
        if (!(back.coords == ea.coords))
            fail(errkind::verification_failed, "a != b*q + r");
        if (!er.coords.is_zero() && norm_ring_abs(f, er) >= norm_ring_abs(f, eb))
            fail(errkind::verification_failed, "|N(r)| >= |N(b)|");
    });
}

euclid8_status euclid8_run(const char* request_json, char** response_json) {
    if (response_json == nullptr) return EUCLID8_ERROR_PARSE;
    RunOutcome outcome = run_request(request_json == nullptr ? "" : request_json);
    *response_json = dup_string(outcome.response_json);
    g_last_error = outcome.message;
    g_last_error_kind = outcome.error_kind.empty() ? "None" : outcome.error_kind;
    switch (outcome.exit_code) {
    case 0: return EUCLID8_OK;
    case 2: return EUCLID8_ERROR_PARSE;
    case 3: return EUCLID8_ERROR_MATH;
    case 4: return EUCLID8_ERROR_VERIFY;
    default: return EUCLID8_ERROR_OTHER;
    }
}

void euclid8_string_free(char* s) {
    std::free(s);
}

} // extern "C"
