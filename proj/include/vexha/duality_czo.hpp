#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "phi_transform.hpp"

namespace vexha {

// Duality pairing L_g(f) = sum_Q <f, phi_Q> conj(<g, psi_Q>).  For an
// exact-tiling alias-free family this equals <f_band, g_band>.
inline cplx pairing(const Signal& f, const Signal& g, const KernelFamily& fam,
                    ProbePolicy policy = ProbePolicy::left) {
    CoeffField cf = analyze(f, fam, policy, KernelSlot::analysis);
    CoeffField cg = analyze(g, fam, policy, KernelSlot::synthesis);
    cplx acc{0, 0};
    for (const auto& [q, v] : cf.entries) acc += v * std::conj(cg.get(q));
    return acc;
}

struct DualityReport {
    int trials_requested = 0;
    int trials_used = 0;
    int degenerate_skipped = 0;
    double max_ratio = 0.0;
    bool insufficient_data = false;
};

// Empirical max of |L_g(f)| / (||f||_H ||g||_CMO) over seeded pairs.  Each
// trial evaluates two candidates against a heavy-tailed synthesized g: an
// independent covered-band noise f, and the aligned extremizer f = band part
// of g.  Independent pairs alone concentrate toward orthogonality as the grid
// refines (the max decays like N^{-1/2}); the aligned candidate keeps the
// recorded constant a refinement-stable lower estimate of the true bound.
inline DualityReport duality_constant(const ExponentFunction& p, const KernelFamily& fam,
                                      int trials, uint64_t seed,
                                      const ChiNormTable* chi = nullptr) {
    if (p.p_plus > 1.0)
        throw std::invalid_argument("duality_constant: requires p_plus <= 1, got " +
                                    std::to_string(p.p_plus));
    if (trials < 1) throw std::invalid_argument("duality_constant: trials must be >= 1");
    std::optional<ChiNormTable> local;
    if (!chi) local.emplace(fam.grid, p, fam.j_max);
    const ChiNormTable& table = chi ? *chi : *local;

    DualityReport rep;
    rep.trials_requested = trials;
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<uint64_t>(t));
        Signal f = random_band_signal(fam, rng);
        Signal g = synthesize(random_sparse_field(fam, rng, 10, true), fam);
        double hf = hardy_norm(f, p, fam);
        double cg = cmo_norm(g, p, fam, CmoForm::integral, ProbePolicy::left, &table);
        if (hf == 0.0 || cg == 0.0) {
            ++rep.degenerate_skipped;
            continue;
        }
        rep.max_ratio = std::max(rep.max_ratio, std::abs(pairing(f, g, fam)) / (hf * cg));
        Signal aligned = project_covered(g, fam);
        double ha = hardy_norm(aligned, p, fam);
        if (ha > 0.0)
            rep.max_ratio =
                std::max(rep.max_ratio, std::abs(pairing(aligned, g, fam)) / (ha * cg));
        ++rep.trials_used;
    }
    rep.insufficient_data = rep.trials_used == 0;
    return rep;
}

enum class MultiplierKind { hilbert_smooth, hilbert_sharp, custom };

inline std::string to_string(MultiplierKind k) {
    switch (k) {
        case MultiplierKind::hilbert_smooth: return "hilbert_smooth";
        case MultiplierKind::hilbert_sharp: return "hilbert_sharp";
        default: return "custom";
    }
}

// Convolution operator given by a frequency multiplier with m(0) = 0.
struct MultiplierOperator {
    Grid grid;
    MultiplierKind kind = MultiplierKind::custom;
    std::vector<cplx> multiplier;
    double gamma = 1.0;
    Signal kernel_space; // k(x) = sum_m m(xi) e^{2 pi i m x}, cached for SK checks

    double l2_operator_norm() const {
        double v = 0.0;
        for (const auto& m : multiplier) v = std::max(v, std::abs(m));
        return v;
    }
};

inline MultiplierOperator make_multiplier_operator(const Grid& g, std::vector<cplx> mult,
                                                   double gamma, MultiplierKind kind) {
    if (!(gamma > 0.0) || gamma > 1.0)
        throw config_error("multiplier operator: gamma must lie in (0, 1]");
    if (static_cast<int>(mult.size()) != g.size)
        throw config_error("multiplier operator: multiplier length must equal grid size");
    if (mult[0] != cplx{0, 0})
        throw config_error("multiplier operator: cancellation requires m(0) = 0");
    MultiplierOperator op;
    op.grid = g;
    op.kind = kind;
    op.gamma = gamma;
    op.kernel_space = kernel_of_multiplier(g, mult);
    op.multiplier = std::move(mult);
    return op;
}

// hilbert_smooth: m(xi) = -i sign(xi) theta(|xi|) with a C-infinity ramp
// rising over |m| in [1, 8] and rolled off over [N/8, N/4] (zero at Nyquist).
// hilbert_sharp: m(xi) = -i sign(xi) with no roll-off (Nyquist bin zeroed so
// real signals map to real signals); the non-smooth negative control.
inline MultiplierOperator build_multiplier_czo(const Grid& g, MultiplierKind kind,
                                               double gamma) {
    if (kind == MultiplierKind::custom)
        throw config_error("build_multiplier_czo: custom kind requires an explicit multiplier");
    const int n = g.size;
    std::vector<cplx> mult(n, cplx{0, 0});
    for (int idx = 1; idx < n; ++idx) {
        int m = freq_of_index(idx, n);
        int m_abs = std::abs(m);
        double theta = 1.0;
        if (kind == MultiplierKind::hilbert_smooth) {
            double rise = detail::smooth_step(std::log2(static_cast<double>(m_abs)) / 3.0);
            double fall =
                1.0 - detail::smooth_step(std::log2(8.0 * m_abs / n) + 1.0); // [N/8, N/4]
            theta = rise * fall;
        } else if (m_abs == n / 2) {
            theta = 0.0;
        }
        double s = m > 0 ? 1.0 : -1.0;
        mult[idx] = cplx{0.0, -s * theta};
    }
    return make_multiplier_operator(g, std::move(mult), gamma, kind);
}

inline Signal apply(const MultiplierOperator& op, const Signal& f) {
    return conv_multiplier(f, op.multiplier);
}

inline Signal apply_adjoint(const MultiplierOperator& op, const Signal& f) {
    std::vector<cplx> conj_mult(op.multiplier.size());
    for (size_t i = 0; i < conj_mult.size(); ++i) conj_mult[i] = std::conj(op.multiplier[i]);
    return conv_multiplier(f, conj_mult);
}

struct StandardKernelReport {
    double gamma = 1.0;
    double c_size = 0.0;   // max_{x != 0} |x| |k(x)|
    double c_smooth = 0.0; // max |k(x) - k(x - y)| |x|^{1+gamma} / |y|^gamma, |x| >= 2|y|
};

// Measured standard-kernel constants of the cached spatial kernel.
inline StandardKernelReport standard_kernel_report(const MultiplierOperator& op) {
    const Grid& g = op.grid;
    const int n = g.size;
    StandardKernelReport rep;
    rep.gamma = op.gamma;
    const Signal& k = op.kernel_space;
    for (int i = 1; i < n; ++i) {
        double x = g.periodic_dist(i, 0);
        rep.c_size = std::max(rep.c_size, x * std::abs(k[i]));
    }
    for (int i = 1; i < n; ++i) {
        double x = g.periodic_dist(i, 0);
        double xw = std::pow(x, 1.0 + op.gamma);
        for (int dy = 1; dy <= n / 2; ++dy) {
            double y = static_cast<double>(dy) / n;
            if (x < 2.0 * y) break;
            double diff = std::abs(k[i] - k[(i - dy + n) % n]);
            rep.c_smooth = std::max(rep.c_smooth, diff * xw / std::pow(y, op.gamma));
        }
    }
    return rep;
}

struct CzoCmoReport {
    int trials_requested = 0;
    int trials_used = 0;
    double max_ratio = 0.0;        // cmo(T g) / cmo(g)
    double max_adjoint_err = 0.0;  // |<Tg, f> - <g, T* f>| / scale
};

// CMO boundedness experiment for a cancellation multiplier, plus the adjoint
// pairing consistency check.
inline CzoCmoReport czo_cmo_experiment(const MultiplierOperator& op, const ExponentFunction& p,
                                       const KernelFamily& fam, int trials, uint64_t seed,
                                       const ChiNormTable* chi = nullptr) {
    if (p.p_plus > 1.0)
        throw std::invalid_argument("czo_cmo_experiment: requires p_plus <= 1, got " +
                                    std::to_string(p.p_plus));
    double floor = 1.0 / (1.0 + op.gamma);
    if (!(p.p_minus > floor))
        throw std::invalid_argument("czo_cmo_experiment: requires p_minus > 1/(1+gamma) = " +
                                    std::to_string(floor) + ", got " +
                                    std::to_string(p.p_minus));
    if (trials < 1) throw std::invalid_argument("czo_cmo_experiment: trials must be >= 1");

    std::optional<ChiNormTable> local;
    if (!chi) local.emplace(fam.grid, p, fam.j_max);
    const ChiNormTable& table = chi ? *chi : *local;

    CzoCmoReport rep;
    rep.trials_requested = trials;
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<uint64_t>(t));
        Signal g = synthesize(random_sparse_field(fam, rng, 10, true), fam);
        double cg = cmo_norm(g, p, fam, CmoForm::integral, ProbePolicy::left, &table);
        if (cg == 0.0) continue;
        Signal tg = apply(op, g);
        rep.max_ratio = std::max(
            rep.max_ratio,
            cmo_norm(tg, p, fam, CmoForm::integral, ProbePolicy::left, &table) / cg);

        Signal f = random_band_signal(fam, rng);
        cplx lhs = inner(tg, f);
        cplx rhs = inner(g, apply_adjoint(op, f));
        double scale = std::max(1.0, std::abs(lhs));
        rep.max_adjoint_err = std::max(rep.max_adjoint_err, std::abs(lhs - rhs) / scale);
        ++rep.trials_used;
    }
    return rep;
}

// Partial sum f_m = sum_{j_min <= j <= m} psi_j * psi_j * f, as one combined
// multiplier.  m below j_min gives the zero signal; m at or above j_max gives
// the covered-band projection (energy tiling).
inline Signal partial_sum(const Signal& f, const KernelFamily& fam, int m) {
    std::vector<double> combined(f.size(), 0.0);
    for (int j = fam.j_min; j <= std::min(m, fam.j_max); ++j) {
        const auto& w = fam.mult(j, KernelSlot::synthesis);
        for (int idx = 0; idx < f.size(); ++idx) combined[idx] += w[idx] * w[idx];
    }
    return conv_multiplier(f, combined);
}

} // namespace vexha
