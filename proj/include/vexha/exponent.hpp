#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "grid.hpp"

namespace vexha {

namespace detail {

// Smallest C >= 0 with |p(x_i) - p(x_j)| <= C / (-log d(x_i, x_j)) over all
// sample pairs at periodic distance d <= 1/2.  Exhaustive pair scan; the
// decay-at-infinity half of the log-Hoelder condition is vacuous on the torus
// and not checked.
inline double scan_lh_constant(const Grid& g, const std::vector<double>& samples) {
    const int n = g.size;
    double c = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double d = g.periodic_dist(i, j);
            double gap = std::abs(samples[i] - samples[j]);
            c = std::max(c, gap * (-std::log(d)));
        }
    }
    return c;
}

} // namespace detail

// A variable exponent p(.) stored as grid samples, with cached extrema and
// log-Hoelder constant.  Requires 0 < p^- <= p^+ < inf.
struct ExponentFunction {
    Grid grid;
    std::vector<double> samples;
    double p_minus = 0.0;
    double p_plus = 0.0;
    double lh_const = 0.0;

    ExponentFunction(const Grid& g, std::vector<double> vals)
        : grid(g), samples(std::move(vals)) {
        if (static_cast<int>(samples.size()) != g.size)
            throw config_error("ExponentFunction: sample count does not match grid size");
        p_minus = *std::min_element(samples.begin(), samples.end());
        p_plus = *std::max_element(samples.begin(), samples.end());
        if (!(p_minus > 0.0) || !std::isfinite(p_plus))
            throw config_error("ExponentFunction: need 0 < p_minus <= p_plus < inf");
        lh_const = detail::scan_lh_constant(grid, samples);
    }

    static ExponentFunction constant(const Grid& g, double p0) {
        return ExponentFunction(g, std::vector<double>(g.size, p0));
    }

    static ExponentFunction sinusoid(const Grid& g, double base, double amplitude,
                                     int frequency = 1, double phase = 0.0) {
        std::vector<double> v(g.size);
        for (int i = 0; i < g.size; ++i)
            v[i] = base + amplitude *
                              std::sin(2.0 * std::numbers::pi * frequency * g.sample_pos(i) + phase);
        return ExponentFunction(g, std::move(v));
    }

    // Smooth tanh-profile step from `low` to `high` around `center`,
    // mirrored so the samples are continuous across the torus seam.
    static ExponentFunction smoothstep(const Grid& g, double low, double high, double center,
                                       double width) {
        std::vector<double> v(g.size);
        for (int i = 0; i < g.size; ++i) {
            double x = g.sample_pos(i);
            double up = 0.5 * (1.0 + std::tanh((x - (center - 0.25)) / width));
            double dn = 0.5 * (1.0 + std::tanh((x - (center + 0.25)) / width));
            v[i] = low + (high - low) * (up - dn);
        }
        return ExponentFunction(g, std::move(v));
    }

    // Two constant halves with a hard jump; used to exercise LH growth.
    static ExponentFunction step(const Grid& g, double left, double right) {
        std::vector<double> v(g.size);
        for (int i = 0; i < g.size; ++i) v[i] = (i < g.size / 2) ? left : right;
        return ExponentFunction(g, std::move(v));
    }

    double operator[](int i) const { return samples[static_cast<size_t>(i)]; }
    bool is_constant() const { return p_minus == p_plus; }
};

inline double lh_constant(const ExponentFunction& p) { return p.lh_const; }

inline std::pair<double, double> exponent_bounds(const ExponentFunction& p) {
    return {p.p_minus, p.p_plus};
}

// Smallest d >= 0 with p^- (d + 2) > 1 (one-dimensional moment degree).
inline int min_moment_degree(const ExponentFunction& p) {
    int d = 0;
    while (!(p.p_minus * (d + 2) > 1.0)) ++d;
    return d;
}

inline int min_moment_degree(double p_minus) {
    int d = 0;
    while (!(p_minus * (d + 2) > 1.0)) ++d;
    return d;
}

// Pointwise harmonic combination 1/p = 1/p1 + 1/p2.
inline ExponentFunction harmonic_exponent(const ExponentFunction& p1, const ExponentFunction& p2) {
    std::vector<double> v(p1.grid.size);
    for (int i = 0; i < p1.grid.size; ++i) v[i] = 1.0 / (1.0 / p1[i] + 1.0 / p2[i]);
    return ExponentFunction(p1.grid, std::move(v));
}

} // namespace vexha
