#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dyadic.hpp"
#include "grid.hpp"

namespace vexha {

// Signal files: CSV rows "index,re,im" (path ending in .csv) or raw
// little-endian float64 (re, im) pairs otherwise.
// Coefficient fields: text lines "j k re im".

inline bool is_csv_path(const std::string& path) {
    return path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
}

inline void write_signal(const std::string& path, const Signal& f) {
    if (is_csv_path(path)) {
        std::ofstream out(path);
        if (!out) throw config_error("write_signal: cannot open " + path);
        out << "index,re,im\n";
        out.precision(17);
        for (int i = 0; i < f.size(); ++i)
            out << i << "," << f[i].real() << "," << f[i].imag() << "\n";
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw config_error("write_signal: cannot open " + path);
    for (int i = 0; i < f.size(); ++i) {
        double re = f[i].real(), im = f[i].imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof(double));
        out.write(reinterpret_cast<const char*>(&im), sizeof(double));
    }
}

inline Signal read_signal(const std::string& path, const Grid& g) {
    Signal f(g);
    if (is_csv_path(path)) {
        std::ifstream in(path);
        if (!in) throw config_error("read_signal: cannot open " + path);
        std::string line;
        std::getline(in, line); // header
        int rows = 0;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream ss(line);
            std::string tok;
            std::getline(ss, tok, ',');
            int idx = std::stoi(tok);
            std::getline(ss, tok, ',');
            double re = std::stod(tok);
            std::getline(ss, tok, ',');
            double im = std::stod(tok);
            if (idx < 0 || idx >= g.size)
                throw config_error("read_signal: index " + std::to_string(idx) +
                                   " out of range for grid size " + std::to_string(g.size));
            f[idx] = cplx{re, im};
            ++rows;
        }
        if (rows != g.size)
            throw config_error("read_signal: expected " + std::to_string(g.size) +
                               " rows, found " + std::to_string(rows));
        return f;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("read_signal: cannot open " + path);
    for (int i = 0; i < g.size; ++i) {
        double re, im;
        in.read(reinterpret_cast<char*>(&re), sizeof(double));
        in.read(reinterpret_cast<char*>(&im), sizeof(double));
        if (!in)
            throw config_error("read_signal: short read, expected " +
                               std::to_string(g.size) + " float64 pairs");
        f[i] = cplx{re, im};
    }
    return f;
}

inline void write_coeff_field(const std::string& path, const CoeffField& s) {
    std::ofstream out(path);
    if (!out) throw config_error("write_coeff_field: cannot open " + path);
    out.precision(17);
    for (const auto& [q, v] : s.entries)
        out << q.scale << " " << q.position << " " << v.real() << " " << v.imag() << "\n";
}

// Auto-ranged read: the field's scale range is the min/max scale present.
inline CoeffField read_coeff_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("read_coeff_field: cannot open " + path);
    std::string line;
    int lo = 1 << 30, hi = -1;
    std::vector<std::tuple<int, int, double, double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int j, k;
        double re, im;
        if (!(ss >> j >> k >> re >> im))
            throw config_error("read_coeff_field: malformed line '" + line + "'");
        lo = std::min(lo, j);
        hi = std::max(hi, j);
        rows.emplace_back(j, k, re, im);
    }
    if (hi < 0) throw config_error("read_coeff_field: empty field " + path);
    CoeffField field(lo, hi);
    for (const auto& [j, k, re, im] : rows) field.set(DyadicInterval(j, k), cplx{re, im});
    return field;
}

inline CoeffField read_coeff_field(const std::string& path, int scale_min, int scale_max) {
    std::ifstream in(path);
    if (!in) throw config_error("read_coeff_field: cannot open " + path);
    CoeffField field(scale_min, scale_max);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        int j, k;
        double re, im;
        if (!(ss >> j >> k >> re >> im))
            throw config_error("read_coeff_field: malformed line '" + line + "'");
        field.set(DyadicInterval(j, k), cplx{re, im});
    }
    return field;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot open " + path + " for writing");
    out << text;
}

} // namespace vexha
