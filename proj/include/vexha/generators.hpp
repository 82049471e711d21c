#pragma once

#include <cmath>
#include <vector>

#include "dyadic.hpp"
#include "fft.hpp"
#include "littlewood_paley.hpp"
#include "rng.hpp"

namespace vexha {

// Seeded signal and coefficient-field generators shared by the verification
// suites and the CLI `gen` subcommand.  Everything is a pure function of the
// CounterRng stream, so suites reproduce bit-identically at any thread count.

// Complex white noise, one unit Gaussian pair per sample.
inline Signal random_signal(const Grid& g, CounterRng& rng) {
    Signal f(g);
    for (int i = 0; i < g.size; ++i) {
        double re = rng.gaussian();
        double im = rng.gaussian();
        f[i] = cplx{re, im};
    }
    return f;
}

// White noise restricted to the family's covered band (mean-zero by
// construction), scaled to unit expected L^2 norm.
inline Signal random_band_signal(const KernelFamily& fam, CounterRng& rng) {
    const Grid& g = fam.grid;
    std::vector<cplx> spec(g.size, cplx{0, 0});
    int covered = fam.covered_count();
    double scale = 1.0 / std::sqrt(2.0 * covered);
    for (int idx = 0; idx < g.size; ++idx) {
        if (!fam.covered[idx]) continue;
        spec[idx] = cplx{rng.gaussian(), rng.gaussian()} * scale;
    }
    return from_spectrum(g, std::move(spec));
}

// Sparse coefficient field on the family's sampling lattice.  heavy_tailed
// scales magnitudes by 10^{3u}, exercising sup-type norms.
inline CoeffField random_sparse_field(const KernelFamily& fam, CounterRng& rng, int entries,
                                      bool heavy_tailed) {
    const int lo = fam.j_min + fam.shift;
    const int hi = fam.j_max + fam.shift;
    CoeffField field(lo, hi);
    for (int e = 0; e < entries; ++e) {
        int js = lo + static_cast<int>(rng.below(static_cast<uint64_t>(hi - lo + 1)));
        int k = static_cast<int>(rng.below(uint64_t{1} << js));
        cplx v{rng.gaussian(), rng.gaussian()};
        if (heavy_tailed) v *= std::pow(10.0, 3.0 * rng.uniform());
        field.set(DyadicInterval(js, k), v);
    }
    return field;
}

// Deterministic smooth mean-zero test functions (trigonometric blends and
// periodic bumps), comparable across grid refinements.
inline Signal smooth_test_function(const Grid& g, int index) {
    Signal f(g);
    const double tau = 2.0 * std::numbers::pi;
    int a = 1 + (index % 4);
    int b = 2 + (index % 7);
    double phase = tau * index / 20.0;
    double kappa = 1.0 + 0.25 * (index % 5);
    double center = (index % 8) / 8.0;
    // exp(kappa cos) has mean I_0(kappa); subtract the grid mean instead so
    // the sample sequence is exactly mean-zero.
    std::vector<double> bump(g.size);
    double bump_mean = 0.0;
    for (int i = 0; i < g.size; ++i) {
        bump[i] = std::exp(kappa * std::cos(tau * (g.sample_pos(i) - center)));
        bump_mean += bump[i];
    }
    bump_mean /= g.size;
    for (int i = 0; i < g.size; ++i) {
        double x = g.sample_pos(i);
        double v = std::sin(tau * a * x + phase) + 0.3 * std::sin(tau * b * x) +
                   0.2 * (bump[i] - bump_mean);
        f[i] = v;
    }
    return f;
}

} // namespace vexha
