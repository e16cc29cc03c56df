// euclid8 command-line interface. Builds a JSON request from the arguments
// (or reads one from stdin with `run`), executes it through the shared
// library's C API, and writes the JSON response to stdout.

#include <euclid8/euclid8.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

int emit(const std::string& response, euclid8_status status, bool pretty, bool csv) {
    if (csv) {
        // bench responses carry a preformatted CSV payload
        try {
            json r = json::parse(response);
            if (r.value("status", "") == "ok" && r.at("payload").contains("csv")) {
                std::cout << r.at("payload").at("csv").get<std::string>();
                return 0;
            }
        } catch (const json::exception&) {
            // fall through to JSON output
        }
    }
    if (pretty) {
        try {
            std::cout << json::parse(response).dump(2) << '\n';
            return static_cast<int>(status);
        } catch (const json::exception&) {
            // fall through
        }
    }
    std::cout << response << '\n';
    return static_cast<int>(status);
}

int run_json(const std::string& request, bool pretty, bool csv) {
    char* response = nullptr;
    euclid8_status status = euclid8_run(request.c_str(), &response);
    std::string text = response != nullptr ? response : "";
    euclid8_string_free(response);
    int code = emit(text, status, pretty, csv);
    if (status != EUCLID8_OK)
        std::cerr << "error: " << euclid8_last_error_kind() << '\n';
    return code != 0 ? code : static_cast<int>(status);
}

std::vector<std::string> split_coords(const std::string& text) {
    // accepts "1,2,3,..." or a JSON array of strings/integers
    std::vector<std::string> out;
    if (!text.empty() && text.front() == '[') {
        json arr = json::parse(text, nullptr, false);
        if (!arr.is_discarded() && arr.is_array()) {
            for (const json& v : arr)
                out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
            return out;
        }
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

json coords_json(const std::string& text) {
    json arr = json::array();
    for (const std::string& c : split_coords(text)) arr.push_back(c);
    return arr;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euclidean division and GCD in four degree-8 norm-Euclidean rings "
                 "(Z[zeta15], Z[zeta20], Z[zeta24], and the integers of Q(sqrt3,sqrt5,i)) "
                 "via E8 closest-vector decoding"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    std::string field = "zeta15";
    std::string basis = "B";
    std::string a_text, b_text;
    std::uint64_t seed = 0;
    long count = 1000;
    int reps = 3;
    int threads = 1;
    bool check = false;
    std::string format = "json";
    std::vector<long> bit_sizes;

    auto* info = app.add_subcommand("field-info", "emit the certified field description");
    info->add_option("--field", field, "zeta15|zeta20|zeta24|biquadratic");

    auto* div = app.add_subcommand("divide", "Euclidean division a = b q + r");
    div->add_option("--field", field, "zeta15|zeta20|zeta24|biquadratic");
    div->add_option("--basis", basis, "coordinate basis of operands and results (B|P)");
    div->add_option("-a", a_text, "8 coordinates, comma separated or JSON array")->required();
    div->add_option("-b", b_text, "8 coordinates, comma separated or JSON array")->required();
    div->add_flag("--check", check, "independently recompute and verify the result");

    auto* gcd = app.add_subcommand("gcd", "extended gcd: g = u a + v b");
    gcd->add_option("--field", field, "zeta15|zeta20|zeta24|biquadratic");
    gcd->add_option("--basis", basis, "coordinate basis of operands and results (B|P)");
    gcd->add_option("-a", a_text, "8 coordinates, comma separated or JSON array")->required();
    gcd->add_option("-b", b_text, "8 coordinates, comma separated or JSON array")->required();

    auto* verify = app.add_subcommand("verify", "reproduce the sup-norm table and all field certificates");

    auto* af = app.add_subcommand("estimate-af", "sampled lower bound for the worst-case remainder ratio");
    af->add_option("--field", field, "zeta15|zeta20|zeta24|biquadratic");
    af->add_option("--count", count, "number of sampled points");
    af->add_option("--seed", seed, "PRNG seed");
    af->add_option("--threads", threads, "sampling workers (result is thread-count independent)");

    auto* bench = app.add_subcommand("bench", "time divisions at growing coordinate bit sizes");
    bench->add_option("--field", field, "zeta15|zeta20|zeta24|biquadratic");
    bench->add_option("--bits", bit_sizes, "coordinate bit lengths to measure");
    bench->add_option("--reps", reps, "timed repetitions per size");
    bench->add_option("--seed", seed, "PRNG seed");
    bench->add_option("--format", format, "json|csv");

    auto* selftest = app.add_subcommand("selftest", "reduced-size oracle and invariant suite");
    selftest->add_option("--seed", seed, "PRNG seed");

    auto* run = app.add_subcommand("run", "execute a JSON request document from stdin");

    CLI11_PARSE(app, argc, argv);

    json req;
    if (run->parsed()) {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return run_json(buffer.str(), pretty, false);
    }
    if (info->parsed()) {
        req["command"] = "field-info";
        req["field"] = field;
    } else if (div->parsed()) {
        req["command"] = "divide";
        req["field"] = field;
        req["basis"] = basis;
        req["a"] = coords_json(a_text);
        req["b"] = coords_json(b_text);
        if (check) req["check"] = true;
    } else if (gcd->parsed()) {
        req["command"] = "gcd";
        req["field"] = field;
        req["basis"] = basis;
        req["a"] = coords_json(a_text);
        req["b"] = coords_json(b_text);
    } else if (verify->parsed()) {
        req["command"] = "verify";
    } else if (af->parsed()) {
        req["command"] = "estimate-af";
        req["field"] = field;
        req["count"] = count;
        req["seed"] = seed;
        req["threads"] = threads;
    } else if (bench->parsed()) {
        req["command"] = "bench";
        req["field"] = field;
        if (!bit_sizes.empty()) req["bit_sizes"] = bit_sizes;
        req["reps"] = reps;
        req["seed"] = seed;
    } else if (selftest->parsed()) {
        req["command"] = "selftest";
        req["seed"] = seed;
    }
    return run_json(req.dump(), pretty, format == "csv");
}
