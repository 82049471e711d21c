#pragma once

// Independent brute-force oracles used by the unit tests.  Everything here is
// O(N^2)-ish direct computation sharing nothing with the fast paths it checks.

#include <complex>
#include <numbers>
#include <vector>

#include "vexha/grid.hpp"
#include "vexha/littlewood_paley.hpp"

namespace oracles {

using vexha::cplx;
using vexha::Grid;
using vexha::Signal;

// Naive DFT, textbook sum.
inline std::vector<cplx> naive_dft(const std::vector<cplx>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<cplx> out(n, cplx{0, 0});
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            out[m] += v[i] * std::polar(1.0, -2.0 * std::numbers::pi * m * i / n);
    return out;
}

// Dense circular convolution under the 1/N quadrature weight.
inline Signal dense_conv(const Signal& f, const Signal& kernel) {
    const int n = f.size();
    Signal out(f.grid);
    for (int i = 0; i < n; ++i) {
        cplx acc{0, 0};
        for (int y = 0; y < n; ++y) acc += kernel[((i - y) % n + n) % n] * f[y];
        out[i] = acc / static_cast<double>(n);
    }
    return out;
}

// Spatial kernel of a real multiplier by direct summation.
inline Signal direct_kernel(const Grid& g, const std::vector<double>& mult) {
    const int n = g.size;
    Signal k(g);
    for (int i = 0; i < n; ++i) {
        cplx acc{0, 0};
        for (int idx = 0; idx < n; ++idx) {
            if (mult[idx] == 0.0) continue;
            int m = vexha::freq_of_index(idx, n);
            acc += mult[idx] * std::polar(1.0, 2.0 * std::numbers::pi * m * i / n);
        }
        k[i] = acc;
    }
    return k;
}

// Centered Hardy-Littlewood maximal function, direct averages.
inline Signal brute_hl_maximal(const Signal& f) {
    const int n = f.size();
    Signal out(f.grid);
    for (int i = 0; i < n; ++i) {
        double best = 0.0;
        for (int k = 0; k <= n / 2; ++k) {
            int win = std::min(2 * k + 1, n);
            double s = 0.0;
            for (int d = 0; d < win; ++d) s += std::abs(f[((i - k + d) % n + n) % n]);
            best = std::max(best, s / win);
        }
        out[i] = best;
    }
    return out;
}

// Per-interval modulus extrema of a signal over the sampling lattice.
inline double brute_interval_sup(const Signal& g, int js, int k) {
    int len = g.size() >> js;
    double best = 0.0;
    for (int i = k * len; i < (k + 1) * len; ++i) best = std::max(best, std::abs(g[i]));
    return best;
}

} // namespace oracles
