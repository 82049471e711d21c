#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "exponent.hpp"
#include "fft.hpp"
#include "grid.hpp"
#include "luxemburg.hpp"

namespace vexha {

enum class WindowKind { meyer_smooth, shannon_sharp };
enum class KernelSlot { analysis, synthesis };

// Probe selection inside a sampling interval.  left/center pick a fixed
// sample; sup/inf pick the sample where the convolved signal has the largest
// (smallest) modulus, ties resolved to the lowest index.
enum class ProbePolicy { left, center, sup, inf };

inline std::string to_string(WindowKind w) {
    return w == WindowKind::meyer_smooth ? "meyer_smooth" : "shannon_sharp";
}

namespace detail {

// C-infinity step: 0 below 0, 1 above 1, sigma(s)/(sigma(s)+sigma(1-s)) inside.
inline double smooth_step(double s) {
    if (s <= 0.0) return 0.0;
    if (s >= 1.0) return 1.0;
    double a = std::exp(-1.0 / s);
    double b = std::exp(-1.0 / (1.0 - s));
    return a / (a + b);
}

} // namespace detail

// A frequency-tiled family {phi_j, psi_j} on the discrete torus.
//
// Multipliers are real and depend on |m| only, so spatial kernels are real
// and even and the reflected-conjugate kernel equals the kernel itself.
// Scale j occupies the annulus 2^{j-1} <= |m| <= 2^{j+1}:
//   meyer_smooth: raised-cosine profile in log2|m| centered at 2^j, with a
//     plateau down to 2^{j_min - 1} on the bottom scale and (when the family
//     reaches the sampling resolution, j_max + shift >= J) up to N/2 on the
//     top scale;
//   shannon_sharp: indicator of the lower octave [2^{j-1}, 2^j), the top
//     scale extending through N/2 when the family reaches resolution.
//
// After construction the windows are pointwise-normalized so that
// sum_j conj(phi_j) psi_j = sum_j |psi_j|^2 = 1 exactly on the covered set;
// frequencies with only partial tiling (possible on a truncated top scale)
// are dropped from every window so that synthesis∘analysis can act as an
// exact projector onto the covered band.
struct KernelFamily {
    Grid grid;
    WindowKind window = WindowKind::meyer_smooth;
    int j_min = 1;
    int j_max = 1;
    int shift = 1;
    std::vector<std::vector<double>> analysis_hat;  // [j - j_min][freq index]
    std::vector<std::vector<double>> synthesis_hat; // same values: phi = psi
    std::vector<uint8_t> covered;                   // by freq index, excludes m = 0

    int scale_count() const { return j_max - j_min + 1; }
    int sampling_scale(int j) const { return j + shift; }
    bool scale_in_range(int j) const { return j >= j_min && j <= j_max; }

    const std::vector<double>& mult(int j, KernelSlot slot) const {
        if (!scale_in_range(j)) throw std::out_of_range("KernelFamily: scale out of range");
        return slot == KernelSlot::analysis ? analysis_hat[j - j_min]
                                            : synthesis_hat[j - j_min];
    }

    void require_sampling(int j) const {
        if (sampling_scale(j) > grid.log2_size)
            throw std::out_of_range("KernelFamily: scale " + std::to_string(j) + " + shift " +
                                    std::to_string(shift) + " exceeds grid resolution");
    }

    // Primary band [lower, upper] of scale j in |m|: the region the scale
    // owns at full strength (edge plateaus) or is centered on (interior
    // raised-cosine).  The per-scale lower-bound check samples the middle
    // half of this band in log2.
    std::pair<double, double> primary_band(int j) const {
        bool top_plateau = (j == j_max) && (j_max + shift >= grid.log2_size);
        double cap = std::min(std::ldexp(1.0, j + 1), grid.size / 2.0);
        if (window == WindowKind::shannon_sharp)
            return {std::ldexp(1.0, j - 1), top_plateau ? cap : std::ldexp(1.0, j)};
        double lo = std::ldexp(1.0, j - 1);
        if (top_plateau) return {j == j_min ? lo : std::ldexp(1.0, j), cap};
        if (j == j_min) return {lo, std::ldexp(1.0, j)};
        return {lo, cap};
    }

    int covered_count() const {
        int c = 0;
        for (auto v : covered) c += v;
        return c;
    }
};

namespace detail {

inline double raw_window(WindowKind kind, int j, bool bottom, bool top, bool top_plateau,
                         int m_abs) {
    if (m_abs == 0) return 0.0;
    const double t = std::log2(static_cast<double>(m_abs)) - j;
    if (kind == WindowKind::shannon_sharp) {
        if (top && top_plateau)
            return (t >= -1.0 && t <= 1.0) ? 1.0 : 0.0; // [2^{j-1}, min(N/2, 2^{j+1})]
        return (t >= -1.0 && t < 0.0) ? 1.0 : 0.0;      // [2^{j-1}, 2^j)
    }
    if (t <= 0.0) {
        if (bottom) return (t >= -1.0) ? 1.0 : 0.0; // plateau over [2^{j-1}, 2^j]
        if (t <= -1.0) return 0.0;
        return std::sin(0.5 * std::numbers::pi * smooth_step(t + 1.0));
    }
    if (top && top_plateau) return (t <= 1.0) ? 1.0 : 0.0; // [2^j, min(N/2, 2^{j+1})]
    if (t >= 1.0) return 0.0;
    return std::cos(0.5 * std::numbers::pi * smooth_step(t));
}

} // namespace detail

inline KernelFamily build_family(const Grid& g, int j_min, int j_max, WindowKind window,
                                 int shift) {
    if (j_min < 1 || j_min > j_max || j_max > g.log2_size - 1)
        throw config_error("build_family: need 1 <= j_min <= j_max <= log2_size - 1");
    if (shift < 0 || shift > g.log2_size)
        throw config_error("build_family: shift must lie in [0, log2_size]");

    KernelFamily fam;
    fam.grid = g;
    fam.window = window;
    fam.j_min = j_min;
    fam.j_max = j_max;
    fam.shift = shift;

    const int n = g.size;
    const bool top_plateau = (j_max + shift >= g.log2_size);
    fam.analysis_hat.assign(fam.scale_count(), std::vector<double>(n, 0.0));
    for (int j = j_min; j <= j_max; ++j) {
        auto& w = fam.analysis_hat[j - j_min];
        for (int idx = 0; idx < n; ++idx) {
            int m_abs = std::abs(freq_of_index(idx, n));
            w[idx] = detail::raw_window(window, j, j == j_min, j == j_max, top_plateau, m_abs);
        }
    }

    // Tiling sum, covered set, pointwise normalization.
    fam.covered.assign(n, 0);
    int covered_count = 0;
    for (int idx = 0; idx < n; ++idx) {
        if (idx == 0) continue;
        double s = 0.0;
        for (auto& w : fam.analysis_hat) s += w[idx] * w[idx];
        if (s > 1.0 - 1e-9) {
            fam.covered[idx] = 1;
            double inv = 1.0 / std::sqrt(s);
            for (auto& w : fam.analysis_hat) w[idx] *= inv;
            ++covered_count;
        } else {
            for (auto& w : fam.analysis_hat) w[idx] = 0.0;
        }
    }
    if (covered_count == 0)
        throw config_error("build_family: scale range covers no nonzero frequency");
    fam.synthesis_hat = fam.analysis_hat;
    return fam;
}

// psi_j * f (or phi_j * f) by frequency multiplication; exact circular
// convolution under the 1/N quadrature weight.
inline Signal conv_scale(const Signal& f, const KernelFamily& fam, int j,
                         KernelSlot slot = KernelSlot::synthesis) {
    return conv_multiplier(f, fam.mult(j, slot));
}

// Zero out every frequency outside the family's covered band (and m = 0).
inline Signal project_covered(const Signal& f, const KernelFamily& fam) {
    auto spec = spectrum(f);
    for (int idx = 0; idx < f.size(); ++idx)
        if (!fam.covered[idx]) spec[idx] = 0.0;
    return from_spectrum(f.grid, std::move(spec));
}

namespace detail {

// Complex probe value of a convolved signal over sampling interval k at
// sampling scale js.
inline cplx probe_value(const Signal& g, int js, int k, ProbePolicy policy) {
    const int len = g.size() >> js;
    const int first = k * len;
    switch (policy) {
        case ProbePolicy::left: return g[first];
        case ProbePolicy::center: return g[first + len / 2];
        case ProbePolicy::sup: {
            int best = first;
            double bv = std::abs(g[first]);
            for (int i = first + 1; i < first + len; ++i) {
                double v = std::abs(g[i]);
                if (v > bv) bv = v, best = i;
            }
            return g[best];
        }
        case ProbePolicy::inf: {
            int best = first;
            double bv = std::abs(g[first]);
            for (int i = first + 1; i < first + len; ++i) {
                double v = std::abs(g[i]);
                if (v < bv) bv = v, best = i;
            }
            return g[best];
        }
    }
    return g[first];
}

} // namespace detail

// G(f)(x) = (sum_j |psi_j * f(x)|^2)^{1/2}, full resolution.
inline Signal square_function(const Signal& f, const KernelFamily& fam) {
    Signal acc(f.grid);
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        Signal g = conv_scale(f, fam, j, KernelSlot::synthesis);
        for (int i = 0; i < f.size(); ++i) acc[i] += std::norm(g[i]);
    }
    for (int i = 0; i < f.size(); ++i) acc[i] = std::sqrt(acc[i].real());
    return acc;
}

// G^d(f): per scale j, freeze psi_j * f at the probe of each interval at
// scale j + shift and spread it over the interval.
inline Signal discrete_square_function(const Signal& f, const KernelFamily& fam,
                                       ProbePolicy policy = ProbePolicy::left) {
    Signal acc(f.grid);
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        Signal g = conv_scale(f, fam, j, KernelSlot::synthesis);
        const int len = f.size() >> js;
        for (int k = 0; k < (1 << js); ++k) {
            double v = std::norm(detail::probe_value(g, js, k, policy));
            for (int i = k * len; i < (k + 1) * len; ++i) acc[i] += v;
        }
    }
    for (int i = 0; i < f.size(); ++i) acc[i] = std::sqrt(acc[i].real());
    return acc;
}

// Maximal square function: per-interval sup of |phi_j * f| (dominates G^d).
inline Signal maximal_square_function(const Signal& f, const KernelFamily& fam) {
    Signal acc(f.grid);
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        Signal g = conv_scale(f, fam, j, KernelSlot::analysis);
        const int len = f.size() >> js;
        for (int k = 0; k < (1 << js); ++k) {
            double v = std::norm(detail::probe_value(g, js, k, ProbePolicy::sup));
            for (int i = k * len; i < (k + 1) * len; ++i) acc[i] += v;
        }
    }
    for (int i = 0; i < f.size(); ++i) acc[i] = std::sqrt(acc[i].real());
    return acc;
}

// Hardy-Littlewood maximal operator over centered periodic windows of
// 2k+1 samples (radius k/N, k = 0..N/2, window capped at the full torus).
// Exact averages via prefix sums.
inline Signal hl_maximal(const Signal& f) {
    const int n = f.size();
    std::vector<double> a(n);
    for (int i = 0; i < n; ++i) a[i] = std::abs(f[i]);
    std::vector<double> prefix(2 * n + 1, 0.0);
    for (int i = 0; i < 2 * n; ++i) prefix[i + 1] = prefix[i] + a[i % n];
    const double total = prefix[n];

    Signal out(f.grid);
    for (int i = 0; i < n; ++i) {
        double best = a[i];
        for (int k = 1; k <= n / 2; ++k) {
            int win = 2 * k + 1;
            double avg;
            if (win >= n) {
                avg = total / n;
            } else {
                int lo = ((i - k) % n + n) % n; // window start in [0, n)
                avg = (prefix[lo + win] - prefix[lo]) / win;
            }
            best = std::max(best, avg);
            if (win >= n) break;
        }
        out[i] = best;
    }
    return out;
}

struct VectorMaximalReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool degenerate = false;
};

// || || M f_i ||_{l^q} ||_{L^{p(.)}}  vs  || || f_i ||_{l^q} ||_{L^{p(.)}}.
inline VectorMaximalReport vector_maximal_report(const std::vector<Signal>& fs,
                                                 const ExponentFunction& p, double q,
                                                 double rel_tol = 1e-10) {
    if (!(q > 1.0)) throw std::invalid_argument("vector_maximal_report: q must exceed 1");
    if (fs.empty()) throw std::invalid_argument("vector_maximal_report: empty family");
    const Grid& g = fs.front().grid;
    Signal lq_m(g), lq_f(g);
    for (const auto& f : fs) {
        Signal mf = hl_maximal(f);
        for (int i = 0; i < g.size; ++i) {
            lq_m[i] += std::pow(std::abs(mf[i]), q);
            lq_f[i] += std::pow(std::abs(f[i]), q);
        }
    }
    for (int i = 0; i < g.size; ++i) {
        lq_m[i] = std::pow(lq_m[i].real(), 1.0 / q);
        lq_f[i] = std::pow(lq_f[i].real(), 1.0 / q);
    }
    VectorMaximalReport rep;
    rep.lhs = luxemburg_norm(lq_m, p, rel_tol);
    rep.rhs = luxemburg_norm(lq_f, p, rel_tol);
    if (rep.rhs == 0.0) {
        rep.degenerate = true;
        rep.ratio = 0.0;
    } else {
        rep.ratio = rep.lhs / rep.rhs;
    }
    return rep;
}

struct AlmostOrthTable {
    int decay_order = 1;  // L
    int tail_order = 1;   // M
    std::vector<std::vector<double>> constants; // [j - j_min][j' - j_min]
    double max_constant = 0.0;
};

// Smallest C(j, j') such that |psi_j * phi_{j'}(x)| <=
// C 2^{-|j-j'| L} 2^{j^j'} / (1 + 2^{j^j'} |x|)^{1 + M} on the grid.
inline AlmostOrthTable almost_orthogonality_table(const KernelFamily& fam, int decay_order,
                                                  int tail_order) {
    if (decay_order < 1 || tail_order < 1)
        throw std::invalid_argument("almost_orthogonality_table: orders must be >= 1");
    const int n = fam.grid.size;
    const int sc = fam.scale_count();
    AlmostOrthTable table;
    table.decay_order = decay_order;
    table.tail_order = tail_order;
    table.constants.assign(sc, std::vector<double>(sc, 0.0));
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        for (int jp = fam.j_min; jp <= fam.j_max; ++jp) {
            std::vector<double> prod(n);
            const auto& a = fam.mult(j, KernelSlot::synthesis);
            const auto& b = fam.mult(jp, KernelSlot::analysis);
            for (int idx = 0; idx < n; ++idx) prod[idx] = a[idx] * b[idx];
            Signal k = kernel_of_multiplier(fam.grid, prod);
            const double jmin2 = std::ldexp(1.0, std::min(j, jp));
            const double decay = std::ldexp(1.0, -std::abs(j - jp) * decay_order);
            double c = 0.0;
            for (int i = 0; i < n; ++i) {
                double x = fam.grid.periodic_dist(i, 0);
                double bound = decay * jmin2 / std::pow(1.0 + jmin2 * x, 1 + tail_order);
                c = std::max(c, std::abs(k[i]) / bound);
            }
            table.constants[j - fam.j_min][jp - fam.j_min] = c;
            table.max_constant = std::max(table.max_constant, c);
        }
    }
    return table;
}

} // namespace vexha
