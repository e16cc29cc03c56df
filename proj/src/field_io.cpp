#include "field_io.hpp"

#include "errors.hpp"
#include "field_internal.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace euclid8 {

using nlohmann::json;

namespace {

json vec_to_json(const Vec8Q& v) {
    json a = json::array();
    for (int i = 0; i < kDim; ++i) a.push_back(to_string(v[i]));
    return a;
}

json mat_to_json(const Mat8Q& m) {
    json a = json::array();
    for (const Rational& r : m.a) a.push_back(to_string(r));
    return a;
}

Vec8Q vec_from_json(const json& a) {
    if (!a.is_array() || a.size() != 8)
        fail(errkind::parse_error, "expected an array of 8 rationals");
    Vec8Q v;
    for (int i = 0; i < kDim; ++i)
        v[i] = parse_rational(a[static_cast<std::size_t>(i)].get<std::string>());
    return v;
}

Mat8Q mat_from_json(const json& a) {
    if (!a.is_array() || a.size() != 64)
        fail(errkind::parse_error, "expected a row-major array of 64 rationals");
    Mat8Q m;
    for (std::size_t i = 0; i < 64; ++i) m.a[i] = parse_rational(a[i].get<std::string>());
    return m;
}

} // namespace

std::string field_to_json(const FieldData& f, bool pretty) {
    json j;
    j["schema_version"] = kFieldSchemaVersion;
    j["field"] = field_name(f.id);
    j["disc_K"] = to_string(f.disc_K);
    j["delta_P"] = vec_to_json(f.delta_P);
    j["conj_P"] = mat_to_json(f.conj_P);
    j["gram_P"] = mat_to_json(f.gram_P);
    j["basis_B"] = mat_to_json(f.basis_B);
    j["embedding_S"] = mat_to_json(f.embedding_S);

    json table = json::array();
    for (int i = 0; i < kDim; ++i) {
        json row = json::array();
        for (int jj = 0; jj < kDim; ++jj) {
            json cell = json::array();
            const Vec8Z& e = f.table.entry(i, jj);
            for (int m = 0; m < kDim; ++m) cell.push_back(to_string(Rational(e[m])));
            row.push_back(cell);
        }
        table.push_back(row);
    }
    j["power_mult_table"] = table;

    json roots = json::array();
    for (const Vec8Z& r : f.roots) {
        json root = json::array();
        for (int i = 0; i < kDim; ++i) {
            if (!r[i].fits_slong_p())
                fail(errkind::certificate_failure, "root coordinate out of range");
            root.push_back(static_cast<long>(r[i].get_si()));
        }
        roots.push_back(root);
    }
    j["roots_B"] = roots;

    j["euclidean_minimum"] =
        f.euclidean_minimum ? json(to_string(*f.euclidean_minimum)) : json(nullptr);
    j["norm_sup_voronoi"] = to_string(f.norm_sup_voronoi);
    j["sup_maximizer_P"] = vec_to_json(f.sup_maximizer_P);
    return pretty ? j.dump(2) : j.dump();
}

FieldData field_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(errkind::parse_error, std::string("invalid field JSON: ") + e.what());
    }
    try {
        if (j.at("schema_version").get<int>() != kFieldSchemaVersion)
            fail(errkind::parse_error, "unsupported field schema version");
        FieldData f;
        auto id = field_from_name(j.at("field").get<std::string>());
        if (!id) fail(errkind::parse_error, "unknown field name");
        f.id = *id;
        f.disc_K = parse_integer(j.at("disc_K").get<std::string>());
        f.delta_P = vec_from_json(j.at("delta_P"));
        f.conj_P = mat_from_json(j.at("conj_P"));
        f.gram_P = mat_from_json(j.at("gram_P"));
        f.basis_B = mat_from_json(j.at("basis_B"));
        f.embedding_S = mat_from_json(j.at("embedding_S"));

        const json& table = j.at("power_mult_table");
        if (!table.is_array() || table.size() != 8)
            fail(errkind::parse_error, "bad multiplication table");
        for (int i = 0; i < kDim; ++i)
            for (int jj = 0; jj < kDim; ++jj) {
                const json& cell = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)];
                Vec8Q v = vec_from_json(cell);
                f.table.entry(i, jj) = to_vec8z(v);
            }

        const json& roots = j.at("roots_B");
        if (!roots.is_array()) fail(errkind::parse_error, "bad roots array");
        for (const json& root : roots) {
            if (!root.is_array() || root.size() != 8)
                fail(errkind::parse_error, "bad root vector");
            Vec8Z r;
            for (int i = 0; i < kDim; ++i) r[i] = root[static_cast<std::size_t>(i)].get<long>();
            f.roots.push_back(r);
        }

        const json& em = j.at("euclidean_minimum");
        if (!em.is_null()) f.euclidean_minimum = parse_rational(em.get<std::string>());
        f.norm_sup_voronoi = parse_rational(j.at("norm_sup_voronoi").get<std::string>());
        f.sup_maximizer_P = vec_from_json(j.at("sup_maximizer_P"));

        // reference tables must agree with the ones derived from the field id
        MultTable fresh_table;
        Mat8Q fresh_conj;
        build_tables(f.id, fresh_table, fresh_conj);
        for (int i = 0; i < kDim; ++i)
            for (int jj = 0; jj < kDim; ++jj)
                if (!(fresh_table.entry(i, jj) == f.table.entry(i, jj)))
                    fail(errkind::certificate_failure, "cached multiplication table mismatch");
        if (!(fresh_conj == f.conj_P))
            fail(errkind::certificate_failure, "cached conjugation matrix mismatch");

        compute_derived(f);
        validate_field(f);
        return f;
    } catch (const json::exception& e) {
        fail(errkind::parse_error, std::string("invalid field JSON: ") + e.what());
    }
}

namespace {

std::filesystem::path cache_path(FieldId id) {
    const char* dir = std::getenv("EUCLID8_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    return std::filesystem::path(dir) / (std::string(field_name(id)) + ".json");
}

std::unique_ptr<FieldData> try_load_cached(FieldId id) {
    auto path = cache_path(id);
    if (path.empty()) return nullptr;
    std::ifstream in(path);
    if (!in) return nullptr;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto f = std::make_unique<FieldData>(field_from_json(buf.str()));
        if (f->id != id) return nullptr;
        return f;
    } catch (const error&) {
        return nullptr;  // stale or corrupt cache entry; rebuild
    }
}

void try_store_cached(const FieldData& f) {
    auto path = cache_path(f.id);
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::trunc);
    if (!out) return;
    out << field_to_json(f) << '\n';
}

} // namespace

const FieldData& get_field(FieldId id) {
    static std::mutex mu;
    static std::map<FieldId, std::unique_ptr<FieldData>> loaded;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = loaded[id];
    if (!slot) {
        slot = try_load_cached(id);
        if (!slot) {
            slot = std::make_unique<FieldData>(build_field(id));
            try_store_cached(*slot);
        }
    }
    return *slot;
}

} // namespace euclid8
