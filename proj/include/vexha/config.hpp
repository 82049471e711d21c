#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "duality_czo.hpp"
#include "exponent.hpp"
#include "grid.hpp"
#include "littlewood_paley.hpp"

namespace vexha {

using json = nlohmann::json;

// Structured spec documents consumed by the CLI.  Unknown fields are
// rejected; every spec validates before any computation starts.

namespace detail {

inline void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                                  const std::string& ctx) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw config_error(ctx + ": unknown field '" + it.key() + "'");
}

inline double require_number(const json& j, const std::string& key, const std::string& ctx) {
    if (!j.contains(key) || !j[key].is_number())
        throw config_error(ctx + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

} // namespace detail

// {"kind": "constant"|"sinusoid"|"smoothstep"|"samples", ...}
struct ExponentSpec {
    json doc;

    static ExponentSpec parse(const json& j) {
        if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
            throw config_error("exponent spec: expected an object with a string 'kind'");
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "constant") {
            detail::reject_unknown_fields(j, {"kind", "value"}, "exponent spec (constant)");
            detail::require_number(j, "value", "exponent spec (constant)");
        } else if (kind == "sinusoid") {
            detail::reject_unknown_fields(j, {"kind", "base", "amplitude", "frequency", "phase"},
                                          "exponent spec (sinusoid)");
            detail::require_number(j, "base", "exponent spec (sinusoid)");
            detail::require_number(j, "amplitude", "exponent spec (sinusoid)");
        } else if (kind == "smoothstep") {
            detail::reject_unknown_fields(j, {"kind", "low", "high", "center", "width"},
                                          "exponent spec (smoothstep)");
            for (const char* k : {"low", "high", "center", "width"})
                detail::require_number(j, k, "exponent spec (smoothstep)");
        } else if (kind == "samples") {
            detail::reject_unknown_fields(j, {"kind", "values"}, "exponent spec (samples)");
            if (!j.contains("values") || !j["values"].is_array())
                throw config_error("exponent spec (samples): missing 'values' array");
        } else {
            throw config_error("exponent spec: unknown kind '" + kind + "'");
        }
        return ExponentSpec{j};
    }

    ExponentFunction build(const Grid& g) const {
        const std::string kind = doc["kind"].get<std::string>();
        if (kind == "constant") return ExponentFunction::constant(g, doc["value"].get<double>());
        if (kind == "sinusoid")
            return ExponentFunction::sinusoid(g, doc["base"].get<double>(),
                                              doc["amplitude"].get<double>(),
                                              doc.value("frequency", 1),
                                              doc.value("phase", 0.0));
        if (kind == "smoothstep")
            return ExponentFunction::smoothstep(g, doc["low"].get<double>(),
                                                doc["high"].get<double>(),
                                                doc["center"].get<double>(),
                                                doc["width"].get<double>());
        std::vector<double> vals = doc["values"].get<std::vector<double>>();
        if (static_cast<int>(vals.size()) != g.size)
            throw config_error("exponent spec (samples): need exactly " +
                               std::to_string(g.size) + " values");
        return ExponentFunction(g, std::move(vals));
    }
};

// {"window": "meyer_smooth"|"shannon_sharp", "j_min": .., "j_max": .., "shift": ..}
// Compact string form: "meyer:1:7:1" (window:j_min:j_max:shift); j_max may be
// "top" meaning log2_size - 1 - max(shift - 1, 0).
struct KernelSpec {
    std::string window = "meyer_smooth";
    int j_min = 1;
    int j_max = -1; // -1: resolve against the grid
    int shift = 1;

    static KernelSpec parse(const json& j) {
        detail::reject_unknown_fields(j, {"window", "j_min", "j_max", "shift"}, "kernel spec");
        KernelSpec ks;
        ks.window = j.value("window", std::string("meyer_smooth"));
        if (ks.window != "meyer_smooth" && ks.window != "shannon_sharp")
            throw config_error("kernel spec: unknown window '" + ks.window + "'");
        ks.j_min = j.value("j_min", 1);
        ks.j_max = j.value("j_max", -1);
        ks.shift = j.value("shift", 1);
        return ks;
    }

    static KernelSpec parse_compact(const std::string& text) {
        KernelSpec ks;
        std::vector<std::string> parts;
        std::string cur;
        for (char c : text) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.empty() || parts.size() > 4)
            throw config_error("kernel spec: expected window[:j_min:j_max[:shift]]");
        if (parts[0] == "meyer" || parts[0] == "meyer_smooth") ks.window = "meyer_smooth";
        else if (parts[0] == "shannon" || parts[0] == "shannon_sharp") ks.window = "shannon_sharp";
        else throw config_error("kernel spec: unknown window '" + parts[0] + "'");
        try {
            if (parts.size() >= 2 && !parts[1].empty()) ks.j_min = std::stoi(parts[1]);
            if (parts.size() >= 3 && !parts[2].empty())
                ks.j_max = parts[2] == "top" ? -1 : std::stoi(parts[2]);
            if (parts.size() >= 4 && !parts[3].empty()) ks.shift = std::stoi(parts[3]);
        } catch (const std::exception&) {
            throw config_error("kernel spec: malformed '" + text + "'");
        }
        return ks;
    }

    WindowKind window_kind() const {
        return window == "meyer_smooth" ? WindowKind::meyer_smooth : WindowKind::shannon_sharp;
    }

    // Default scale range reaches the grid's sampling resolution:
    // j_max = log2_size - shift (full covered band [1, N/2]).
    KernelFamily build(const Grid& g) const {
        int top = j_max >= 0 ? j_max : g.log2_size - std::max(shift, 1);
        return build_family(g, j_min, top, window_kind(), shift);
    }

    json to_json() const {
        return json{{"window", window}, {"j_min", j_min}, {"j_max", j_max}, {"shift", shift}};
    }
};

// {"kind": "hilbert_smooth"|"hilbert_sharp", "gamma": ..}
struct OperatorSpec {
    std::string kind = "hilbert_smooth";
    double gamma = 1.0;

    static OperatorSpec parse(const json& j) {
        detail::reject_unknown_fields(j, {"kind", "gamma"}, "operator spec");
        OperatorSpec os;
        os.kind = j.value("kind", std::string("hilbert_smooth"));
        if (os.kind != "hilbert_smooth" && os.kind != "hilbert_sharp")
            throw config_error("operator spec: unknown kind '" + os.kind + "'");
        os.gamma = j.value("gamma", 1.0);
        return os;
    }

    MultiplierOperator build(const Grid& g) const {
        MultiplierKind k = kind == "hilbert_smooth" ? MultiplierKind::hilbert_smooth
                                                    : MultiplierKind::hilbert_sharp;
        return build_multiplier_czo(g, k, gamma);
    }
};

// Validated run configuration shared by the CLI and the suites.
struct RunConfig {
    int grid_log2 = 8;
    ExponentSpec exponent{json{{"kind", "constant"}, {"value", 1.0}}};
    KernelSpec kernels;
    int trials = 0; // 0: each suite uses its pinned per-criterion count
    uint64_t seed = 1;
    int threads = 1;
    std::string out_dir;
    std::string format = "structured"; // structured | csv

    json echo() const {
        json j;
        j["grid"] = grid_log2;
        j["exponent"] = exponent.doc;
        j["kernels"] = kernels.to_json();
        j["trials"] = trials;
        j["seed"] = seed;
        return j;
    }

    void validate() const {
        if (grid_log2 < 4 || grid_log2 > 22)
            throw config_error("config: --grid must lie in [4, 22]");
        if (trials < 0) throw config_error("config: --trials must be >= 0");
        if (threads < 1) throw config_error("config: --threads must be >= 1");
        if (format != "structured" && format != "csv")
            throw config_error("config: --format must be structured or csv");
    }
};

// Parse an inline JSON document or @file reference.
inline json parse_json_arg(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw config_error("cannot open " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw config_error("malformed JSON document: " + arg);
    return j;
}

} // namespace vexha
