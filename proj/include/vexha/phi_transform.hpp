#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "dyadic.hpp"
#include "fft.hpp"
#include "generators.hpp"
#include "littlewood_paley.hpp"
#include "space_norms.hpp"

namespace vexha {

// Analysis map S: f -> { |Q|^{1/2} (phi~_j * f)(x_Q) } with one coefficient
// per interval at scale j + shift.  The default probe is the left corner z_Q.
// Multipliers are real and even, so phi~ = phi.
inline CoeffField analyze(const Signal& f, const KernelFamily& fam,
                          ProbePolicy policy = ProbePolicy::left,
                          KernelSlot slot = KernelSlot::analysis) {
    CoeffField field(fam.j_min + fam.shift, fam.j_max + fam.shift);
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        Signal g = conv_scale(f, fam, j, slot);
        const double w = std::sqrt(std::ldexp(1.0, -js));
        for (int k = 0; k < (1 << js); ++k)
            field.set(DyadicInterval(js, k), w * detail::probe_value(g, js, k, policy));
    }
    return field;
}

// Synthesis map T: {s_Q} -> sum_Q s_Q psi_Q.  Realized per scale by placing
// s_Q |Q|^{1/2} at z_Q as a discrete delta (weight N under the 1/N
// quadrature) and convolving with psi_j.
inline Signal synthesize(const CoeffField& s, const KernelFamily& fam) {
    const Grid& g = fam.grid;
    Signal out(g);
    std::map<int, Signal> impulses;
    for (const auto& [q, v] : s.entries) {
        int j = q.scale - fam.shift;
        if (!fam.scale_in_range(j))
            throw std::out_of_range("synthesize: field scale " + std::to_string(q.scale) +
                                    " does not match family coverage");
        auto it = impulses.find(j);
        if (it == impulses.end()) it = impulses.emplace(j, Signal(g)).first;
        double w = std::sqrt(q.length()) * g.size;
        it->second[q.sample_first(g)] += v * w;
    }
    for (const auto& [j, imp] : impulses) {
        Signal part = conv_scale(imp, fam, j, KernelSlot::synthesis);
        for (int i = 0; i < g.size; ++i) out[i] += part[i];
    }
    return out;
}

struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<cplx> a;
    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, cplx{0, 0}) {}
    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

inline std::vector<cplx> matvec(const DenseMatrix& m, const std::vector<cplx>& v) {
    std::vector<cplx> out(m.rows, cplx{0, 0});
    for (int r = 0; r < m.rows; ++r) {
        cplx acc{0, 0};
        const cplx* row = &m.a[static_cast<size_t>(r) * m.cols];
        for (int c = 0; c < m.cols; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
    return out;
}

inline DenseMatrix matmul(const DenseMatrix& x, const DenseMatrix& y) {
    DenseMatrix out(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            cplx v = x.at(r, k);
            if (v == cplx{0, 0}) continue;
            for (int c = 0; c < y.cols; ++c) out.at(r, c) += v * y.at(k, c);
        }
    return out;
}

// Explicit analysis/synthesis matrices with left probes, built from direct
// DFT sums (independent of the FFT fast path) so they can serve as the
// oracle for the transform pipeline.
struct DenseOperators {
    std::vector<DyadicInterval> keys;
    DenseMatrix analysis;  // (#coeffs) x N
    DenseMatrix synthesis; // N x (#coeffs)
};

namespace detail {

// Spatial kernel by naive DFT over the root table: k(i) = sum_m mult(m) w^{m i}.
inline std::vector<cplx> kernel_direct(const Grid& g, const std::vector<double>& mult) {
    const int n = g.size;
    std::vector<cplx> roots(n);
    for (int r = 0; r < n; ++r)
        roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
    std::vector<cplx> k(n, cplx{0, 0});
    for (int idx = 0; idx < n; ++idx) {
        if (mult[idx] == 0.0) continue;
        int m = freq_of_index(idx, n);
        for (int i = 0; i < n; ++i) {
            int e = static_cast<int>((static_cast<long long>(m) * i) % n);
            if (e < 0) e += n;
            k[i] += mult[idx] * roots[e];
        }
    }
    return k;
}

} // namespace detail

inline DenseOperators dense_operators(const Grid& g, const KernelFamily& fam) {
    if (g.size > 4096)
        throw resource_error("dense_operators: grid size exceeds the 4096 dense cap");
    const int n = g.size;
    DenseOperators ops;
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        for (int k = 0; k < (1 << js); ++k) ops.keys.emplace_back(js, k);
    }
    const int c_total = static_cast<int>(ops.keys.size());
    ops.analysis = DenseMatrix(c_total, n);
    ops.synthesis = DenseMatrix(n, c_total);

    int row = 0;
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        const int js = fam.sampling_scale(j);
        auto ka = detail::kernel_direct(g, fam.mult(j, KernelSlot::analysis));
        auto ks = detail::kernel_direct(g, fam.mult(j, KernelSlot::synthesis));
        const double w = std::sqrt(std::ldexp(1.0, -js));
        for (int k = 0; k < (1 << js); ++k, ++row) {
            const int z = k * (n >> js);
            for (int i = 0; i < n; ++i) {
                int off = (i - z + n) % n;
                ops.analysis.at(row, i) = w * std::conj(ka[off]) / static_cast<double>(n);
                ops.synthesis.at(i, row) = w * ks[off];
            }
        }
    }
    return ops;
}

// Spectral norm of (synthesis*analysis - band projector), the projector built
// by direct DFT.  Power iteration on E^H E with a deterministic start.
inline double band_projector_discrepancy(const DenseOperators& ops, const KernelFamily& fam) {
    const Grid& g = fam.grid;
    const int n = g.size;
    DenseMatrix product = matmul(ops.synthesis, ops.analysis);
    std::vector<cplx> roots(n);
    for (int r = 0; r < n; ++r)
        roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
    DenseMatrix err = product;
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            cplx pv{0, 0};
            for (int idx = 0; idx < n; ++idx) {
                if (!fam.covered[idx]) continue;
                int m = freq_of_index(idx, n);
                int e = static_cast<int>((static_cast<long long>(m) * (i - l)) % n);
                if (e < 0) e += n;
                pv += roots[e];
            }
            err.at(i, l) -= pv / static_cast<double>(n);
        }
    }
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i) v[i] = cplx{1.0 + i * 1e-3, 0.3 - i * 7e-4};
    double norm_est = 0.0;
    for (int it = 0; it < 200; ++it) {
        auto ev = matvec(err, v);
        // multiply by E^H
        std::vector<cplx> w(n, cplx{0, 0});
        for (int r = 0; r < n; ++r) {
            cplx val = ev[r];
            if (val == cplx{0, 0}) continue;
            const cplx* rowp = &err.a[static_cast<size_t>(r) * n];
            for (int c = 0; c < n; ++c) w[c] += std::conj(rowp[c]) * val;
        }
        double nn = 0.0;
        for (auto& x : w) nn += std::norm(x);
        nn = std::sqrt(nn);
        if (nn == 0.0) return 0.0;
        for (auto& x : w) x /= nn;
        v = std::move(w);
        norm_est = std::sqrt(nn);
    }
    return norm_est;
}

struct ReconstructionResult {
    double error = 0.0;
    bool degenerate = false;
};

// Relative L^2 error of f -> T(S(f)).
inline ReconstructionResult reconstruction_error(const Signal& f, const KernelFamily& fam) {
    double base = l2_norm(f);
    if (base == 0.0) return {0.0, true};
    Signal rec = synthesize(analyze(f, fam), fam);
    return {l2_norm(f - rec) / base, false};
}

struct OperatorNormReport {
    int trials_requested = 0;
    int trials_used = 0;
    double s_of_hardy_max = 0.0;   // ||S f||_s / ||f||_H
    double t_to_hardy_max = 0.0;   // ||T s||_H / ||s||_s
    double c_of_cmo_max = 0.0;     // ||S g||_c / ||g||_CMO
    double t_to_cmo_max = 0.0;     // ||T t||_CMO / ||t||_c
};

// Empirical operator norms of S and T on (H^{p(.)}, s^{p(.)}) and
// (CMO^{p(.)}, c^{p(.)}) over seeded random inputs.
inline OperatorNormReport operator_norm_report(const KernelFamily& fam,
                                               const ExponentFunction& p, int trials,
                                               uint64_t seed,
                                               const ChiNormTable* chi = nullptr) {
    if (trials < 1) throw std::invalid_argument("operator_norm_report: trials must be >= 1");
    std::optional<ChiNormTable> local;
    if (!chi) local.emplace(fam.grid, p, fam.grid.log2_size);
    const ChiNormTable& table = chi ? *chi : *local;

    OperatorNormReport rep;
    rep.trials_requested = trials;
    for (int t = 0; t < trials; ++t) {
        CounterRng rng(seed, static_cast<uint64_t>(t));
        Signal f = random_band_signal(fam, rng);
        CoeffField s = random_sparse_field(fam, rng, 12, false);
        Signal gsig = random_band_signal(fam, rng);
        CoeffField tf = random_sparse_field(fam, rng, 12, true);

        double hf = hardy_norm(f, p, fam);
        double sn = seq_s_norm(s, p);
        double gc = cmo_norm(gsig, p, fam, CmoForm::integral, ProbePolicy::left, &table);
        double tc = seq_c_norm(tf, p, &table);
        if (hf == 0.0 || sn == 0.0 || gc == 0.0 || tc == 0.0) continue;

        rep.s_of_hardy_max =
            std::max(rep.s_of_hardy_max, seq_s_norm(analyze(f, fam), p) / hf);
        rep.t_to_hardy_max =
            std::max(rep.t_to_hardy_max, hardy_norm(synthesize(s, fam), p, fam) / sn);
        rep.c_of_cmo_max = std::max(
            rep.c_of_cmo_max, seq_c_norm(analyze(gsig, fam), p, &table) / gc);
        rep.t_to_cmo_max =
            std::max(rep.t_to_cmo_max,
                     cmo_norm(synthesize(tf, fam), p, fam, CmoForm::integral,
                              ProbePolicy::left, &table) /
                         tc);
        ++rep.trials_used;
    }
    return rep;
}

struct PlancherelPolyaResult {
    double ratio = 0.0;
    bool degenerate = false;
};

namespace detail {

inline double probe_carleson_quantity(const Signal& f, const KernelFamily& fam,
                                      ProbePolicy policy, const ChiNormTable& chi) {
    std::vector<ScaleMass> masses;
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        Signal v = conv_scale(f, fam, j, KernelSlot::analysis);
        ScaleMass sm;
        sm.scale = js;
        sm.mass.resize(size_t{1} << js);
        const double qlen = std::ldexp(1.0, -js);
        for (int k = 0; k < (1 << js); ++k)
            sm.mass[k] = qlen * std::norm(probe_value(v, js, k, policy));
        masses.push_back(std::move(sm));
    }
    return carleson_sup(masses, chi, fam.j_max);
}

} // namespace detail

// Ratio of the sup-probe Carleson quantity (kernels fam_a) to the inf-probe
// quantity (kernels fam_b).
inline PlancherelPolyaResult pp_ratio(const Signal& f, const ExponentFunction& p,
                                      const KernelFamily& fam_a, const KernelFamily& fam_b,
                                      const ChiNormTable* chi = nullptr) {
    if (fam_a.j_min != fam_b.j_min || fam_a.j_max != fam_b.j_max ||
        fam_a.shift != fam_b.shift)
        throw std::invalid_argument("pp_ratio: families must cover the same scales");
    std::optional<ChiNormTable> local;
    if (!chi) local.emplace(fam_a.grid, p, fam_a.j_max);
    const ChiNormTable& table = chi ? *chi : *local;
    double num = detail::probe_carleson_quantity(f, fam_a, ProbePolicy::sup, table);
    double den = detail::probe_carleson_quantity(f, fam_b, ProbePolicy::inf, table);
    if (den == 0.0) return {0.0, true};
    return {num / den, false};
}

} // namespace vexha
