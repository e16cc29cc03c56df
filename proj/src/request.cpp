#include "request.hpp"

#include "analysis.hpp"
#include "e8.hpp"
#include "errors.hpp"
#include "euclid.hpp"
#include "field_io.hpp"
#include "rng.hpp"

#include <json.hpp>

namespace euclid8 {

using nlohmann::json;

namespace {

const FieldData& field_arg(const json& req) {
    if (!req.contains("field"))
        fail(errkind::bad_request, "missing \"field\"");
    auto id = field_from_name(req.at("field").get<std::string>());
    if (!id)
        fail(errkind::parse_error, "unknown field \"" + req.at("field").get<std::string>() + "\"");
    return get_field(*id);
}

bool basis_is_p(const json& req) {
    std::string basis = req.value("basis", std::string("B"));
    if (basis == "B") return false;
    if (basis == "P") return true;
    fail(errkind::parse_error, "basis must be \"B\" or \"P\"");
}

Vec8Q coords_arg(const json& req, const char* key) {
    if (!req.contains(key))
        fail(errkind::bad_request, std::string("missing operand \"") + key + "\"");
    const json& arr = req.at(key);
    if (!arr.is_array() || arr.size() != 8)
        fail(errkind::parse_error, std::string("operand \"") + key + "\" must have 8 coordinates");
    Vec8Q v;
    for (int i = 0; i < kDim; ++i) {
        const json& c = arr[static_cast<std::size_t>(i)];
        if (c.is_number_integer()) {
            v[i] = Rational(static_cast<long>(c.get<long>()));
        } else if (c.is_string()) {
            v[i] = parse_rational(c.get<std::string>());
        } else {
            fail(errkind::parse_error, "coordinates must be strings like \"p/q\" (or integers)");
        }
    }
    return v;
}

RingElement ring_arg(const FieldData& f, const json& req, const char* key, bool in_p) {
    Vec8Q v = coords_arg(req, key);
    if (in_p) v = to_B(f, v);
    if (!is_integral(v))
        fail(errkind::parse_error,
             std::string("operand \"") + key + "\" is not an algebraic integer (non-integral B-coordinates)");
    return RingElement{f.id, to_vec8z(v)};
}

json coords_json(const Vec8Q& v) {
    json out = json::array();
    for (int i = 0; i < kDim; ++i) out.push_back(to_string(v[i]));
    return out;
}

json ring_json(const FieldData& f, const RingElement& x, bool in_p) {
    if (!in_p) return coords_json(to_vec8q(x.coords));
    return coords_json(from_B(f, to_vec8q(x.coords)));
}

long count_arg(const json& req, long fallback, long max_allowed = 100000000L) {
    long count = req.value("count", fallback);
    if (count < 1 || count > max_allowed)
        fail(errkind::bad_request, "count out of range");
    return count;
}

std::uint64_t seed_arg(const json& req) { return req.value("seed", std::uint64_t{0}); }

int threads_arg(const json& req) {
    int threads = req.value("threads", 1);
    if (threads < 1 || threads > 256)
        fail(errkind::bad_request, "threads out of range");
    return threads;
}

// Re-derives a = b q + r and the norm inequality from scratch, without
// trusting the decoder path that produced the result.
void check_division(const FieldData& f, const RingElement& a, const RingElement& b,
                    const RingElement& q, const RingElement& r) {
    RingElement recomputed = ring_add(ring_mul(f, b, q), r);
    if (!(recomputed.coords == a.coords))
        fail(errkind::verification_failed, "a != b*q + r on recomputation");
    if (!r.coords.is_zero()) {
        if (norm_ring_abs(f, r) >= norm_ring_abs(f, b))
            fail(errkind::verification_failed, "|N(r)| >= |N(b)| on recomputation");
    }
}

json table_row_json(const TableRow& row) {
    json out;
    out["field"] = field_name(row.field);
    out["bound"] = to_string(row.bound);
    out["sup_value"] = to_string(row.sup_value);
    out["maximizer_P"] = coords_json(row.maximizer_P);
    out["euclidean_minimum"] =
        row.euclidean_minimum ? json(to_string(*row.euclidean_minimum)) : json(nullptr);
    return out;
}

json cmd_field_info(const json& req) {
    const FieldData& f = field_arg(req);
    return json::parse(field_to_json(f));
}

json cmd_divide(const json& req) {
    const FieldData& f = field_arg(req);
    bool in_p = basis_is_p(req);
    RingElement a = ring_arg(f, req, "a", in_p);
    RingElement b = ring_arg(f, req, "b", in_p);
    DivisionResult d = divide(f, a, b);
    if (req.value("check", false)) check_division(f, a, b, d.quotient, d.remainder);
    json out;
    out["basis"] = in_p ? "P" : "B";
    out["q"] = ring_json(f, d.quotient, in_p);
    out["r"] = ring_json(f, d.remainder, in_p);
    out["norm_ratio"] = to_string(d.norm_ratio);
    return out;
}

json cmd_gcd(const json& req) {
    const FieldData& f = field_arg(req);
    bool in_p = basis_is_p(req);
    RingElement a = ring_arg(f, req, "a", in_p);
    RingElement b = ring_arg(f, req, "b", in_p);
    XgcdResult g = xgcd(f, a, b);
    json out;
    out["basis"] = in_p ? "P" : "B";
    out["g"] = ring_json(f, g.g, in_p);
    out["u"] = ring_json(f, g.u, in_p);
    out["v"] = ring_json(f, g.v, in_p);
    return out;
}

json cmd_verify(const json&) {
    json rows = json::array();
    for (FieldId id : kAllFields) {
        const FieldData& f = get_field(id);  // build certificates run here
        TableRow row = verify_table(f);      // throws on any mismatch
        rows.push_back(table_row_json(row));
    }
    json out;
    out["rows"] = rows;
    out["all_ok"] = true;
    return out;
}

json cmd_estimate_af(const json& req) {
    const FieldData& f = field_arg(req);
    long count = count_arg(req, 1000);
    std::uint64_t seed = seed_arg(req);
    Rational bound = estimate_af(f, count, seed, threads_arg(req));
    json out;
    out["field"] = field_name(f.id);
    out["count"] = count;
    out["seed"] = seed;
    out["lower_bound"] = to_string(bound);
    out["upper_bound"] = to_string(f.lemma_bound());
    return out;
}

json cmd_bench(const json& req) {
    const FieldData& f = field_arg(req);
    std::vector<long> bits;
    if (req.contains("bit_sizes")) {
        for (const json& b : req.at("bit_sizes")) bits.push_back(b.get<long>());
    } else {
        bits = {1024, 4096, 16384};
    }
    int reps = req.value("reps", 3);
    std::uint64_t seed = seed_arg(req);
    auto rows = bench_divide(f, bits, reps, seed);
    json jrows = json::array();
    for (const auto& row : rows) {
        json r;
        r["bits"] = row.bits;
        r["mean_seconds"] = row.mean_seconds;
        jrows.push_back(r);
    }
    json out;
    out["field"] = field_name(f.id);
    out["seed"] = seed;
    out["reps"] = reps;
    out["rows"] = jrows;
    out["csv"] = bench_to_csv(rows);
    return out;
}

json cmd_selftest(const json& req) {
    std::uint64_t seed = seed_arg(req);
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        json c;
        c["name"] = name;
        c["ok"] = ok;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(c);
        all_ok = all_ok && ok;
    };

    // decoder against the exhaustive oracle
    {
        bool ok = true;
        std::string detail;
        for (long k = 0; k < 60 && ok; ++k) {
            Rng rng(seed, static_cast<std::uint64_t>(k));
            Vec8Q x;
            for (int i = 0; i < kDim; ++i) {
                Rational c(rng.coordinate(3), rng.denominator(5));
                c.canonicalize();
                x[i] = c;
            }
            Rational fast = dist2(x, decode_e8(x));
            CvpResult slow = cvp_bruteforce(x);
            if (fast != slow.dist2 || fast > 1) {
                ok = false;
                detail = "mismatch at sample " + std::to_string(k);
            }
        }
        record("e8-decoder-oracle", ok, detail);
    }

    for (FieldId id : kAllFields) {
        std::string base = field_name(id);
        try {
            const FieldData& f = get_field(id);
            record(base + "-certificates", true, "");
            try {
                verify_table(f);
                record(base + "-table", true, "");
            } catch (const error& e) {
                record(base + "-table", false, e.what());
            }
            bool ok = true;
            std::string detail;
            for (long k = 0; k < 100 && ok; ++k) {
                Rng rng(seed ^ 0x5eedULL, static_cast<std::uint64_t>(k));
                Vec8Z ac, bc;
                for (int i = 0; i < kDim; ++i) ac[i] = rng.coordinate(24);
                for (int i = 0; i < kDim; ++i) bc[i] = rng.coordinate(24);
                if (bc.is_zero()) continue;
                RingElement a{f.id, ac}, b{f.id, bc};
                DivisionResult d = divide(f, a, b);  // contract asserted inside
                RingElement back = ring_add(ring_mul(f, b, d.quotient), d.remainder);
                if (!(back.coords == a.coords)) {
                    ok = false;
                    detail = "identity failed at sample " + std::to_string(k);
                }
            }
            record(base + "-division", ok, detail);
        } catch (const error& e) {
            record(base + "-certificates", false, e.what());
        }
    }

    json out;
    out["checks"] = checks;
    out["all_ok"] = all_ok;
    if (!all_ok)
        fail(errkind::verification_failed, "selftest found failures");
    return out;
}

} // namespace

RunOutcome run_request(const std::string& request_json) {
    json req;
    json resp;
    try {
        try {
            req = json::parse(request_json);
        } catch (const json::exception& e) {
            fail(errkind::parse_error, std::string("invalid request JSON: ") + e.what());
        }
        if (!req.is_object() || !req.contains("command"))
            fail(errkind::bad_request, "request must be an object with a \"command\"");
        std::string cmd = req.at("command").get<std::string>();
        json payload;
        if (cmd == "field-info") {
            payload = cmd_field_info(req);
        } else if (cmd == "divide") {
            payload = cmd_divide(req);
        } else if (cmd == "gcd") {
            payload = cmd_gcd(req);
        } else if (cmd == "verify") {
            payload = cmd_verify(req);
        } else if (cmd == "estimate-af") {
            payload = cmd_estimate_af(req);
        } else if (cmd == "bench") {
            payload = cmd_bench(req);
        } else if (cmd == "selftest") {
            payload = cmd_selftest(req);
        } else {
            fail(errkind::bad_request, "unknown command \"" + cmd + "\"");
        }
        resp["status"] = "ok";
        resp["payload"] = payload;
        return {resp.dump(), 0, "", ""};
    } catch (const error& e) {
        resp = json::object();
        resp["status"] = "error";
        resp["error_kind"] = errkind_name(e.kind());
        resp["message"] = e.what();
        return {resp.dump(), errkind_exit_code(e.kind()), errkind_name(e.kind()), e.what()};
    } catch (const json::exception& e) {
        resp = json::object();
        resp["status"] = "error";
        resp["error_kind"] = "ParseError";
        resp["message"] = e.what();
        return {resp.dump(), 2, "ParseError", e.what()};
    } catch (const std::exception& e) {
        resp = json::object();
        resp["status"] = "error";
        resp["error_kind"] = "InternalError";
        resp["message"] = e.what();
        return {resp.dump(), 1, "InternalError", e.what()};
    }
}

} // namespace euclid8
