// Acceptance gate: runs every verification suite at its pinned defaults and
// prints one pass/fail line per criterion.  Exits nonzero when any criterion
// fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "vexha/verify.hpp"

using namespace vexha;

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.grid_log2 = 8;
    cfg.threads = hardware_threads();
    cfg.seed = 1;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) cfg.threads = std::atoi(argv[++i]);
        else if (arg == "--seed" && i + 1 < argc) cfg.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--only" && i + 1 < argc) only = argv[++i];
    }

    int failures = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& entry : verify::registry()) {
        if (!only.empty() && entry.name != only) continue;
        auto s0 = std::chrono::steady_clock::now();
        Report rep;
        try {
            rep = entry.fn(cfg);
        } catch (const std::exception& e) {
            rep.suite = entry.name;
            auto& c = rep.add("suite_error");
            c.pass = false;
            std::fprintf(stderr, "suite %s: %s\n", entry.name.c_str(), e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              s0)
                        .count();
        bool ok = rep.verdict();
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d (%s)  %.0f ms\n", ok ? "PASS" : "FAIL",
                    entry.criterion, entry.name.c_str(), ms);
        for (const auto& c : rep.checks) {
            if (c.pass) continue;
            std::printf("         failed check: %s", c.name.c_str());
            for (const auto& [k, v] : c.values) std::printf("  %s=%.6g", k.c_str(), v);
            std::printf("\n");
        }
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d criterion(s) failed; total %.1f s\n", failures, total);
    return failures == 0 ? 0 : 1;
}
