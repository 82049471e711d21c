#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include "dyadic.hpp"
#include "exponent.hpp"
#include "littlewood_paley.hpp"
#include "luxemburg.hpp"

namespace vexha {

// Luxemburg norms of dyadic indicators, solved once per (grid, exponent) and
// reused by every sup-over-P traversal.  For constant exponents the norm
// depends on the interval length only, so one solve per scale suffices.
class ChiNormTable {
  public:
    ChiNormTable(const Grid& g, const ExponentFunction& p, int max_scale = -1,
                 double rel_tol = 1e-10)
        : grid_(g) {
        if (max_scale < 0) max_scale = g.log2_size;
        norms_.resize(max_scale + 1);
        for (int s = 0; s <= max_scale; ++s) {
            const int count = 1 << s;
            norms_[s].resize(count);
            if (p.is_constant()) {
                double v = luxemburg_norm(indicator(g, DyadicInterval(s, 0)), p, rel_tol);
                std::fill(norms_[s].begin(), norms_[s].end(), v);
            } else {
                for (int k = 0; k < count; ++k)
                    norms_[s][k] =
                        luxemburg_norm(indicator(g, DyadicInterval(s, k)), p, rel_tol);
            }
        }
    }

    double operator()(int scale, int pos) const { return norms_[scale][pos]; }
    double operator()(const DyadicInterval& q) const { return norms_[q.scale][q.position]; }
    int max_scale() const { return static_cast<int>(norms_.size()) - 1; }

  private:
    Grid grid_;
    std::vector<std::vector<double>> norms_;
};

namespace detail {

// Per-scale nonnegative masses attached to dyadic intervals.
struct ScaleMass {
    int scale;
    std::vector<double> mass; // indexed by position, size 2^scale
};

// sup over dyadic P with scale(P) <= p_scale_max of
//   sqrt( |P| / ||chi_P||^2 * sum over mass intervals contained in P ).
inline double carleson_sup(const std::vector<ScaleMass>& masses, const ChiNormTable& chi,
                           int p_scale_max) {
    std::vector<ScaleMass> prefixed;
    prefixed.reserve(masses.size());
    for (const auto& sm : masses) {
        ScaleMass ps;
        ps.scale = sm.scale;
        ps.mass.assign(sm.mass.size() + 1, 0.0);
        for (size_t k = 0; k < sm.mass.size(); ++k) ps.mass[k + 1] = ps.mass[k] + sm.mass[k];
        prefixed.push_back(std::move(ps));
    }
    double best = 0.0;
    for (int sp = 0; sp <= p_scale_max; ++sp) {
        const double plen = std::ldexp(1.0, -sp);
        for (int kp = 0; kp < (1 << sp); ++kp) {
            double total = 0.0;
            for (const auto& ps : prefixed) {
                if (ps.scale < sp) continue;
                int shift = ps.scale - sp;
                int lo = kp << shift;
                int hi = (kp + 1) << shift;
                total += ps.mass[hi] - ps.mass[lo];
            }
            if (total == 0.0) continue;
            double w = chi(sp, kp);
            best = std::max(best, std::sqrt(plen / (w * w) * total));
        }
    }
    return best;
}

} // namespace detail

enum class CmoForm { integral, discrete };

// Carleson measure norm.  The integral form accumulates the wavelet
// coefficients |<g, psi_Q>|^2 = |Q| |psi~_j * g(z_Q)|^2; the discrete form
// freezes |phi_j * g| at the chosen probe of each sampling interval.  With
// left probes and phi = psi the two are the same sum reorganized.  The sup
// ranges over dyadic P with l(P) >= 2^{-j_max}.
inline double cmo_norm(const Signal& g, const ExponentFunction& p, const KernelFamily& fam,
                       CmoForm form = CmoForm::integral, ProbePolicy policy = ProbePolicy::left,
                       const ChiNormTable* chi = nullptr, double rel_tol = 1e-10) {
    std::vector<detail::ScaleMass> masses;
    masses.reserve(fam.scale_count());
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        const int js = fam.sampling_scale(j);
        Signal v = conv_scale(g, fam, j,
                              form == CmoForm::integral ? KernelSlot::synthesis
                                                        : KernelSlot::analysis);
        ProbePolicy pol = form == CmoForm::integral ? ProbePolicy::left : policy;
        detail::ScaleMass sm;
        sm.scale = js;
        sm.mass.resize(size_t{1} << js);
        const double qlen = std::ldexp(1.0, -js);
        for (int k = 0; k < (1 << js); ++k)
            sm.mass[k] = qlen * std::norm(detail::probe_value(v, js, k, pol));
        masses.push_back(std::move(sm));
    }
    if (chi && chi->max_scale() >= fam.j_max)
        return detail::carleson_sup(masses, *chi, fam.j_max);
    ChiNormTable table(g.grid, p, fam.j_max, rel_tol);
    return detail::carleson_sup(masses, table, fam.j_max);
}

// Hardy norm via the square-function characterization:
// || G^d(f) ||_{L^{p(.)}}.  Requires a mean-zero input.
inline double hardy_norm(const Signal& f, const ExponentFunction& p, const KernelFamily& fam,
                         ProbePolicy policy = ProbePolicy::left, double rel_tol = 1e-10) {
    if (!is_mean_zero(f))
        throw std::invalid_argument("hardy_norm: input signal must have zero mean");
    return luxemburg_norm(discrete_square_function(f, fam, policy), p, rel_tol);
}

// || {s_Q} ||_{s^{p(.)}} = || (sum_Q |s_Q|^2 |Q|^{-1} chi_Q)^{1/2} ||_{L^{p(.)}}.
inline double seq_s_norm(const CoeffField& s, const ExponentFunction& p,
                         double rel_tol = 1e-10) {
    Signal agg(p.grid);
    for (const auto& [q, v] : s.entries) {
        double add = std::norm(v) / q.length();
        int first = q.sample_first(p.grid);
        int count = q.sample_count(p.grid);
        for (int i = first; i < first + count; ++i) agg[i] += add;
    }
    for (int i = 0; i < p.grid.size; ++i) agg[i] = std::sqrt(agg[i].real());
    return luxemburg_norm(agg, p, rel_tol);
}

// || {t_Q} ||_{c^{p(.)}} = sup_P sqrt( |P| / ||chi_P||^2 sum_{Q subset P} |t_Q|^2 ).
// The sup descends to the coefficient scales present in the field.
inline double seq_c_norm(const CoeffField& t, const ExponentFunction& p,
                         const ChiNormTable* chi = nullptr, double rel_tol = 1e-10) {
    if (t.empty()) return 0.0;
    int deepest = 0;
    std::map<int, detail::ScaleMass> per_scale;
    for (const auto& [q, v] : t.entries) {
        auto it = per_scale.find(q.scale);
        if (it == per_scale.end()) {
            detail::ScaleMass sm;
            sm.scale = q.scale;
            sm.mass.assign(size_t{1} << q.scale, 0.0);
            it = per_scale.emplace(q.scale, std::move(sm)).first;
        }
        it->second.mass[q.position] += std::norm(v);
        deepest = std::max(deepest, q.scale);
    }
    std::vector<detail::ScaleMass> masses;
    masses.reserve(per_scale.size());
    for (auto& [s, sm] : per_scale) masses.push_back(std::move(sm));
    if (chi && chi->max_scale() >= deepest) return detail::carleson_sup(masses, *chi, deepest);
    ChiNormTable table(p.grid, p, deepest, rel_tol);
    return detail::carleson_sup(masses, table, deepest);
}

// Discrete least-squares projection onto polynomials of degree <= d over the
// samples of Q, in a centered/scaled basis orthonormalized against the
// samples.  coeffs[a] multiplies u^a with u = (x - x_mid) / (l(Q)/2).
struct PolyProjection {
    std::vector<cplx> coeffs;
    Signal projection; // zero outside Q
    Signal residual;   // zero outside Q
};

inline PolyProjection poly_project(const Signal& f, const DyadicInterval& q, int d) {
    const Grid& g = f.grid;
    const int count = q.sample_count(g);
    const int first = q.sample_first(g);
    if (count < d + 1)
        throw std::invalid_argument("poly_project: interval has fewer than d+1 samples");

    // Centered/scaled sample coordinates.
    std::vector<double> u(count);
    const double mid = first + 0.5 * (count - 1);
    const double halfw = 0.5 * count;
    for (int i = 0; i < count; ++i) u[i] = (first + i - mid) / halfw;

    // Orthonormal basis over the samples (modified Gram-Schmidt, one
    // re-orthogonalization pass), tracked as coefficient vectors in u^a.
    std::vector<std::vector<double>> basis(d + 1, std::vector<double>(count));
    std::vector<std::vector<double>> basis_coeffs(d + 1, std::vector<double>(d + 1, 0.0));
    for (int a = 0; a <= d; ++a) {
        for (int i = 0; i < count; ++i) basis[a][i] = std::pow(u[i], a);
        basis_coeffs[a][a] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (int b = 0; b < a; ++b) {
                double dot = 0.0;
                for (int i = 0; i < count; ++i) dot += basis[a][i] * basis[b][i];
                for (int i = 0; i < count; ++i) basis[a][i] -= dot * basis[b][i];
                for (int c = 0; c <= d; ++c) basis_coeffs[a][c] -= dot * basis_coeffs[b][c];
            }
        }
        double nrm = 0.0;
        for (int i = 0; i < count; ++i) nrm += basis[a][i] * basis[a][i];
        nrm = std::sqrt(nrm);
        for (int i = 0; i < count; ++i) basis[a][i] /= nrm;
        for (int c = 0; c <= d; ++c) basis_coeffs[a][c] /= nrm;
    }

    PolyProjection out{std::vector<cplx>(d + 1, cplx{0, 0}), Signal(g), Signal(g)};
    std::vector<cplx> proj(count, cplx{0, 0});
    for (int a = 0; a <= d; ++a) {
        cplx dot{0, 0};
        for (int i = 0; i < count; ++i) dot += f[first + i] * basis[a][i];
        for (int i = 0; i < count; ++i) proj[i] += dot * basis[a][i];
        for (int c = 0; c <= d; ++c) out.coeffs[c] += dot * basis_coeffs[a][c];
    }
    for (int i = 0; i < count; ++i) {
        out.projection[first + i] = proj[i];
        out.residual[first + i] = f[first + i] - proj[i];
    }
    return out;
}

// Campanato norm: sup over dyadic Q (with at least d+1 samples) of
//   (|Q| / ||chi_Q||) * ( (1/|Q|) int_Q |f - P_Q^d f|^q )^{1/q}.
inline double campanato_norm(const Signal& f, const ExponentFunction& p, double q, int d,
                             const ChiNormTable* chi = nullptr, double rel_tol = 1e-10) {
    if (!(q >= 1.0) || !std::isfinite(q))
        throw std::invalid_argument("campanato_norm: need 1 <= q < inf");
    if (d < 0) throw std::invalid_argument("campanato_norm: need d >= 0");
    const Grid& g = f.grid;
    std::optional<ChiNormTable> local;
    if (!chi) local.emplace(g, p, -1, rel_tol);
    const ChiNormTable& table = chi ? *chi : *local;

    double best = 0.0;
    for (int s = 0; s <= g.log2_size; ++s) {
        DyadicInterval probe(s, 0);
        if (probe.sample_count(g) < d + 1) break;
        const double qlen = std::ldexp(1.0, -s);
        for (int k = 0; k < (1 << s); ++k) {
            DyadicInterval cube(s, k);
            auto pp = poly_project(f, cube, d);
            int first = cube.sample_first(g);
            int count = cube.sample_count(g);
            double acc = 0.0;
            for (int i = first; i < first + count; ++i)
                acc += std::pow(std::abs(pp.residual[i]), q);
            double osc = std::pow(acc / count, 1.0 / q);
            best = std::max(best, qlen / table(s, k) * osc);
        }
    }
    return best;
}

// Periodic forward difference iterated `order` times, step = k_samples.
inline Signal iterated_difference(const Signal& f, int k_samples, int order) {
    const int n = f.size();
    Signal cur = f;
    for (int it = 0; it < order; ++it) {
        Signal next(f.grid);
        for (int i = 0; i < n; ++i) next[i] = cur[(i + k_samples) % n] - cur[i];
        cur = std::move(next);
    }
    return cur;
}

// Hoelder-Zygmund norm: sup over grid points x and steps h = k/N (k = 1..N/2)
// of (|Q| / ||chi_Q||) |Delta_h^{d+1} f(x)|, where Q is the grid interval of
// measure min(2|h|, 1) centered at x.  Indicator norms are memoized (by width
// alone when the exponent is constant) and candidates are pruned with the
// bound ||chi_Q|| >= |Q|^{1/p^-}.
inline double zygmund_norm(const Signal& f, const ExponentFunction& p, int d,
                           double rel_tol = 1e-10) {
    if (d < 0) throw std::invalid_argument("zygmund_norm: need d >= 0");
    const Grid& g = f.grid;
    const int n = g.size;

    std::vector<double> width_norm_cache(n + 1, -1.0); // constant exponent
    std::map<std::pair<int, int>, double> pos_cache;   // variable exponent

    auto indicator_norm = [&](int center, int k) -> double {
        int width = std::min(2 * k, n);
        if (p.is_constant()) {
            if (width_norm_cache[width] < 0.0) {
                Signal chi(g);
                for (int i = 0; i < width; ++i) chi[i] = 1.0;
                width_norm_cache[width] = luxemburg_norm(chi, p, rel_tol);
            }
            return width_norm_cache[width];
        }
        int start = ((center - k) % n + n) % n;
        auto key = std::make_pair(start, width);
        auto it = pos_cache.find(key);
        if (it != pos_cache.end()) return it->second;
        Signal chi(g);
        for (int i = 0; i < width; ++i) chi[(start + i) % n] = 1.0;
        double v = luxemburg_norm(chi, p, rel_tol);
        pos_cache.emplace(key, v);
        return v;
    };

    double best = 0.0;
    for (int k = 1; k <= n / 2; ++k) {
        Signal diff = iterated_difference(f, k, d + 1);
        double qlen = std::min(2.0 * k / n, 1.0);
        double ub_weight = std::pow(qlen, 1.0 - 1.0 / p.p_minus);
        for (int i = 0; i < n; ++i) {
            double mag = std::abs(diff[i]);
            if (mag == 0.0) continue;
            if (ub_weight * mag <= best) continue;
            double term = qlen / indicator_norm(i, k) * mag;
            best = std::max(best, term);
        }
    }
    return best;
}

} // namespace vexha
