#pragma once

#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rng.hpp"

namespace vexha {

using json = nlohmann::json;

// One measured check.  threshold is NaN for record-only entries.
struct Check {
    std::string name;
    std::map<std::string, double> values;
    double threshold = std::numeric_limits<double>::quiet_NaN();
    bool pass = true;
    double wall_ms = 0.0;
};

// Deterministic machine-readable run record.  canonical_text() excludes the
// timing block, so identical (config, seed) runs compare byte-for-byte at any
// thread count; the full serialization keeps per-check wall clock.
struct Report {
    int schema_version = 1;
    std::string suite;
    json config_echo = json::object();
    // deque: Check references handed out by add() stay valid as later checks
    // are appended (timers hold them across subsequent add() calls)
    std::deque<Check> checks;

    bool verdict() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    Check& add(const std::string& name) {
        checks.push_back(Check{name, {}, std::numeric_limits<double>::quiet_NaN(), true, 0.0});
        return checks.back();
    }

    json to_json(bool include_timing = true) const {
        json j;
        j["schema_version"] = schema_version;
        j["suite"] = suite;
        j["rng"] = kRngAlgorithm;
        j["config"] = config_echo;
        j["verdict"] = verdict() ? "pass" : "fail";
        json arr = json::array();
        for (const auto& c : checks) {
            json jc;
            jc["name"] = c.name;
            jc["values"] = c.values;
            if (std::isfinite(c.threshold)) jc["threshold"] = c.threshold;
            jc["pass"] = c.pass;
            if (include_timing) jc["wall_ms"] = c.wall_ms;
            arr.push_back(std::move(jc));
        }
        j["checks"] = std::move(arr);
        return j;
    }

    std::string canonical_text() const { return to_json(false).dump(2); }

    std::string to_csv() const {
        std::string out = "suite,check,key,value,pass\n";
        for (const auto& c : checks) {
            for (const auto& [k, v] : c.values) {
                out += suite + "," + c.name + "," + k + "," + std::to_string(v) + "," +
                       (c.pass ? "1" : "0") + "\n";
            }
        }
        return out;
    }
};

} // namespace vexha
