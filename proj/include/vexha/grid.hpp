#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "errors.hpp"

namespace vexha {

using cplx = std::complex<double>;

// Finite model of the periodic unit interval [0,1): N = 2^J samples at
// spacing 1/N, each carrying quadrature weight 1/N (total measure 1).
struct Grid {
    int log2_size = 0;
    int size = 0;

    Grid() = default;
    explicit Grid(int j) : log2_size(j), size(1 << j) {
        if (j < 4 || j > 22)
            throw config_error("Grid: log2_size must be in [4, 22], got " + std::to_string(j));
    }

    double sample_pos(int i) const { return static_cast<double>(i) / size; }
    // Periodic distance between sample i and sample j, in [0, 1/2].
    double periodic_dist(int i, int j) const {
        int d = std::abs(i - j) % size;
        d = std::min(d, size - d);
        return static_cast<double>(d) / size;
    }
    bool operator==(const Grid& o) const { return size == o.size; }
};

// A complex-valued function sampled on a Grid.
struct Signal {
    Grid grid;
    std::vector<cplx> values;

    Signal() = default;
    explicit Signal(const Grid& g) : grid(g), values(g.size, cplx{0.0, 0.0}) {}
    Signal(const Grid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.size)
            throw config_error("Signal: sample count does not match grid size");
    }

    int size() const { return grid.size; }
    cplx& operator[](int i) { return values[static_cast<size_t>(i)]; }
    const cplx& operator[](int i) const { return values[static_cast<size_t>(i)]; }
};

inline cplx mean(const Signal& f) {
    cplx s{0.0, 0.0};
    for (const auto& v : f.values) s += v;
    return s / static_cast<double>(f.size());
}

inline double max_abs(const Signal& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

// L^2 norm with the 1/N quadrature weight.
inline double l2_norm(const Signal& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return std::sqrt(s / f.size());
}

// <f, g> = (1/N) sum f conj(g).
inline cplx inner(const Signal& f, const Signal& g) {
    cplx s{0.0, 0.0};
    for (int i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s / static_cast<double>(f.size());
}

inline bool is_mean_zero(const Signal& f, double rel_tol = 1e-9) {
    return std::abs(mean(f)) <= rel_tol * (max_abs(f) + 1e-300);
}

inline Signal operator+(const Signal& a, const Signal& b) {
    Signal r(a.grid);
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Signal operator-(const Signal& a, const Signal& b) {
    Signal r(a.grid);
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Signal operator*(cplx c, const Signal& a) {
    Signal r(a.grid);
    for (int i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// Pointwise modulus, returned as a real-valued Signal.
inline Signal abs_signal(const Signal& f) {
    Signal r(f.grid);
    for (int i = 0; i < f.size(); ++i) r[i] = std::abs(f[i]);
    return r;
}

} // namespace vexha
