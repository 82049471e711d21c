#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "phi_transform.hpp"
#include "space_norms.hpp"

namespace vexha {

struct LevelSet {
    int index = 0;              // i with Omega_i = { G > 2^i }
    std::vector<uint8_t> mask;  // per sample
};

struct LevelSets {
    std::vector<LevelSet> levels; // ascending i, nested decreasing masks
    bool degenerate = false;
};

// Level sets Omega_i = {x : gdf(x) > 2^i} for i in
// [floor(log2 min+ gdf) - 1, ceil(log2 max gdf)], nonempty ones only.
// The i-range is capped at 128 thresholds from the top; values below the cap
// fall through to the stopping construction's residual generation.
inline LevelSets level_sets(const Signal& gdf) {
    const int n = gdf.size();
    double mx = 0.0;
    double mn_pos = 0.0;
    for (int i = 0; i < n; ++i) {
        double v = gdf[i].real();
        if (v < 0.0 || gdf[i].imag() != 0.0)
            throw std::invalid_argument("level_sets: input must be real and nonnegative");
        mx = std::max(mx, v);
        if (v > 0.0) mn_pos = mn_pos == 0.0 ? v : std::min(mn_pos, v);
    }
    LevelSets out;
    if (mx == 0.0) {
        out.degenerate = true;
        return out;
    }
    int i_hi = static_cast<int>(std::ceil(std::log2(mx)));
    int i_lo = static_cast<int>(std::floor(std::log2(mn_pos))) - 1;
    i_lo = std::max(i_lo, i_hi - 128);
    for (int i = i_lo; i <= i_hi; ++i) {
        const double thr = std::ldexp(1.0, i);
        LevelSet ls;
        ls.index = i;
        ls.mask.resize(n);
        int count = 0;
        for (int s = 0; s < n; ++s) {
            ls.mask[s] = gdf[s].real() > thr ? 1 : 0;
            count += ls.mask[s];
        }
        if (count == 0) continue;
        out.levels.push_back(std::move(ls));
    }
    return out;
}

struct StoppingCube {
    DyadicInterval cube;
    int generation = 0;
};

struct StoppingFamily {
    std::vector<StoppingCube> maximal;                 // inclusion-maximal per generation
    std::map<DyadicInterval, DyadicInterval> assignment; // interval -> its maximal ancestor
    std::map<DyadicInterval, int> generation;          // interval -> generation index
    int residual_generation = 0;
};

// B_i membership: the largest i with |Q ∩ Omega_i| > |Q|/2 (then
// |Q ∩ Omega_{i+1}| <= |Q|/2 follows from nesting).  Intervals never
// exceeding the half-overlap threshold go to the residual generation
// i_min - 1 so the dyadic sum exhausts every coefficient.
inline StoppingFamily stopping_cubes(const LevelSets& levels,
                                     const std::vector<DyadicInterval>& tree, const Grid& g) {
    StoppingFamily fam;
    const int n = g.size;
    int i_min = levels.levels.empty() ? 0 : levels.levels.front().index;
    fam.residual_generation = i_min - 1;

    std::vector<std::vector<int>> prefix(levels.levels.size());
    for (size_t l = 0; l < levels.levels.size(); ++l) {
        prefix[l].assign(n + 1, 0);
        for (int i = 0; i < n; ++i)
            prefix[l][i + 1] = prefix[l][i] + levels.levels[l].mask[i];
    }

    for (const auto& q : tree) {
        int first = q.sample_first(g);
        int count = q.sample_count(g);
        int gen = fam.residual_generation;
        for (size_t l = 0; l < levels.levels.size(); ++l) {
            int overlap = prefix[l][first + count] - prefix[l][first];
            if (2 * overlap > count) gen = levels.levels[l].index;
        }
        fam.generation[q] = gen;
    }

    // Maximal ancestor within the same generation: the coarsest one.
    std::map<int, std::set<DyadicInterval>> members;
    for (const auto& [q, gen] : fam.generation) members[gen].insert(q);
    std::set<DyadicInterval> maximal_seen;
    for (const auto& [q, gen] : fam.generation) {
        DyadicInterval anc = q;
        const auto& gen_set = members[gen];
        for (int s = 0; s < q.scale; ++s) {
            DyadicInterval cand = q.ancestor(s);
            if (gen_set.count(cand)) {
                anc = cand;
                break;
            }
        }
        fam.assignment[q] = anc;
        if (maximal_seen.insert(anc).second) fam.maximal.push_back({anc, gen});
    }
    std::sort(fam.maximal.begin(), fam.maximal.end(),
              [](const StoppingCube& a, const StoppingCube& b) { return a.cube < b.cube; });
    return fam;
}

// Output of the stopping-time construction: maximal cubes, scalars, atoms.
// Atoms are hard-truncated to the periodic 5-fold dilate 5Q~ so the support
// condition holds exactly; when 5 l(Q~) >= 1 the condition is vacuous and no
// truncation is applied (vacuous_support records these).  truncation_l2 is
// the L^2 mass removed by all truncations, the honest gap between
// sum lambda a and the covered-band part of the input.
struct AtomicDecomposition {
    std::vector<StoppingCube> stopping_cubes;
    std::map<DyadicInterval, double> lambdas;
    std::map<DyadicInterval, Signal> atoms;
    std::map<DyadicInterval, bool> vacuous_support;
    double source_norm = 0.0;
    double truncation_l2 = 0.0;
    Grid grid;

    Signal reconstruction() const {
        Signal out(grid);
        for (const auto& [q, a] : atoms) {
            double lam = lambdas.at(q);
            for (int i = 0; i < grid.size; ++i) out[i] += lam * a[i];
        }
        return out;
    }
};

namespace detail {

// Sample mask of the concentric 5-fold periodic dilate of q.
inline std::vector<uint8_t> dilate5_mask(const Grid& g, const DyadicInterval& q) {
    const int n = g.size;
    std::vector<uint8_t> mask(n, 0);
    int len = q.sample_count(g);
    int first = q.sample_first(g) - 2 * len;
    int total = 5 * len;
    if (total >= n) {
        std::fill(mask.begin(), mask.end(), 1);
        return mask;
    }
    for (int i = 0; i < total; ++i) mask[((first + i) % n + n) % n] = 1;
    return mask;
}

} // namespace detail

// hard_5q: atoms are cut to their periodic 5-fold dilate, making the support
// condition exact at the cost of the cut tail mass (the kernels are frequency
// supported, so their spatial tails are rapid-decay, not compactly supported;
// the removed mass shows up in truncation_l2 and in the atom moments).
// none: atoms keep their full synthesized tails; reconstruction and moment
// cancellation are then exact and the support condition only holds up to the
// kernel decay.
enum class AtomTruncation { hard_5q, none };

// Stopping-time atomic decomposition driven by the maximal square function.
// lambda_Q~ = (||chi_Q~|| / |Q~|^{1/2}) (sum_{Q assigned to Q~} |c_Q|^2)^{1/2},
// a_Q~ = lambda^{-1} * synthesis of the assigned coefficients.
inline AtomicDecomposition atomic_decompose(const Signal& f, const ExponentFunction& p,
                                            const KernelFamily& fam,
                                            ProbePolicy policy = ProbePolicy::left,
                                            const ChiNormTable* chi = nullptr,
                                            AtomTruncation truncation = AtomTruncation::hard_5q) {
    if (!is_mean_zero(f))
        throw std::invalid_argument("atomic_decompose: input signal must have zero mean");
    AtomicDecomposition dec;
    dec.grid = f.grid;

    Signal gdf = maximal_square_function(f, fam);
    LevelSets levels = level_sets(gdf);
    if (levels.degenerate) return dec;

    std::vector<DyadicInterval> tree;
    for (int j = fam.j_min; j <= fam.j_max; ++j) {
        fam.require_sampling(j);
        int js = fam.sampling_scale(j);
        for (int k = 0; k < (1 << js); ++k) tree.emplace_back(js, k);
    }
    StoppingFamily stopping = stopping_cubes(levels, tree, f.grid);
    CoeffField coeffs = analyze(f, fam, policy);

    std::optional<ChiNormTable> local;
    if (!chi || chi->max_scale() < fam.j_max + fam.shift)
        local.emplace(f.grid, p, fam.j_max + fam.shift);
    const ChiNormTable& table = local ? *local : *chi;

    dec.source_norm = hardy_norm(f, p, fam, policy);

    std::map<DyadicInterval, CoeffField> groups;
    for (const auto& [q, v] : coeffs.entries) {
        const DyadicInterval& root = stopping.assignment.at(q);
        auto it = groups.find(root);
        if (it == groups.end())
            it = groups.emplace(root, CoeffField(coeffs.scale_min, coeffs.scale_max)).first;
        it->second.set(q, v);
    }

    for (const auto& sc : stopping.maximal) {
        auto git = groups.find(sc.cube);
        if (git == groups.end()) continue;
        double energy = 0.0;
        for (const auto& [q, v] : git->second.entries) energy += std::norm(v);
        if (energy == 0.0) continue;
        double lambda = table(sc.cube) / std::sqrt(sc.cube.length()) * std::sqrt(energy);
        Signal piece = synthesize(git->second, fam);

        bool vacuous = 5.0 * sc.cube.length() >= 1.0;
        if (!vacuous && truncation == AtomTruncation::hard_5q) {
            auto mask = detail::dilate5_mask(f.grid, sc.cube);
            double cut = 0.0;
            for (int i = 0; i < f.grid.size; ++i) {
                if (!mask[i]) {
                    cut += std::norm(piece[i]);
                    piece[i] = 0.0;
                }
            }
            dec.truncation_l2 += cut / f.grid.size;
        }
        double inv = 1.0 / lambda;
        for (int i = 0; i < f.grid.size; ++i) piece[i] *= inv;
        dec.stopping_cubes.push_back(sc);
        dec.lambdas[sc.cube] = lambda;
        dec.atoms[sc.cube] = std::move(piece);
        dec.vacuous_support[sc.cube] = vacuous;
    }
    dec.truncation_l2 = std::sqrt(dec.truncation_l2);
    return dec;
}

struct AtomCheckReport {
    bool support_ok = false;
    bool support_vacuous = false;
    double size_constant = 0.0; // ||a||_{L^q} ||chi_Q||_p / |Q|^{1/q}
    bool size_ok = false;
    double moment_max = 0.0;    // max_alpha |(1/N) sum a x^alpha| / ||a||_inf
    bool moments_ok = false;
};

// (p(.), q)-atom audit: support in 5Q, size against |Q|^{1/q}/||chi_Q||_p
// (reported as the measured constant), vanishing moments through degree d.
inline AtomCheckReport atom_check(const Signal& a, const DyadicInterval& q,
                                  const ExponentFunction& p, double lq_exponent, int d,
                                  double moment_tol = 1e-8, double rel_tol = 1e-10) {
    if (!(lq_exponent > 1.0)) throw std::invalid_argument("atom_check: q must exceed 1");
    const Grid& g = a.grid;
    AtomCheckReport rep;

    rep.support_vacuous = 5.0 * q.length() >= 1.0;
    auto mask = detail::dilate5_mask(g, q);
    double outside = 0.0;
    for (int i = 0; i < g.size; ++i)
        if (!mask[i]) outside = std::max(outside, std::abs(a[i]));
    rep.support_ok = rep.support_vacuous || outside == 0.0;

    double amax = max_abs(a);
    if (amax == 0.0) {
        rep.support_ok = true;
        rep.size_ok = true;
        rep.moments_ok = true;
        return rep;
    }

    double lq = 0.0;
    for (int i = 0; i < g.size; ++i) lq += std::pow(std::abs(a[i]), lq_exponent);
    lq = std::pow(lq / g.size, 1.0 / lq_exponent);
    double chi_q = luxemburg_norm(indicator(g, q), p, rel_tol);
    rep.size_constant = lq * chi_q / std::pow(q.length(), 1.0 / lq_exponent);
    rep.size_ok = std::isfinite(rep.size_constant);

    for (int alpha = 0; alpha <= d; ++alpha) {
        cplx m{0, 0};
        for (int i = 0; i < g.size; ++i) m += a[i] * std::pow(g.sample_pos(i), alpha);
        rep.moment_max = std::max(rep.moment_max, std::abs(m) / g.size / amax);
    }
    rep.moments_ok = rep.moment_max <= moment_tol;
    return rep;
}

// A({lambda_j}, {Q_j}) = || ( sum_j (|lambda_j| chi_{Q_j} / ||chi_{Q_j}||)^{p^-} )^{1/p^-} ||_{L^{p(.)}}.
inline double a_quantity(const std::vector<double>& lambdas,
                         const std::vector<DyadicInterval>& cubes, const ExponentFunction& p,
                         const ChiNormTable* chi = nullptr, double rel_tol = 1e-10) {
    if (lambdas.size() != cubes.size())
        throw std::invalid_argument("a_quantity: lambda/cube length mismatch");
    const Grid& g = p.grid;
    int deepest = 0;
    for (const auto& q : cubes) deepest = std::max(deepest, q.scale);
    std::optional<ChiNormTable> local;
    if (!chi || chi->max_scale() < deepest) local.emplace(g, p, g.log2_size, rel_tol);
    const ChiNormTable& table = local ? *local : *chi;

    Signal agg(g);
    const double pm = p.p_minus;
    for (size_t j = 0; j < cubes.size(); ++j) {
        double base = std::abs(lambdas[j]) / table(cubes[j]);
        if (base == 0.0) continue;
        double add = std::pow(base, pm);
        int first = cubes[j].sample_first(g);
        int count = cubes[j].sample_count(g);
        for (int i = first; i < first + count; ++i) agg[i] += add;
    }
    for (int i = 0; i < g.size; ++i) agg[i] = std::pow(agg[i].real(), 1.0 / pm);
    return luxemburg_norm(agg, p, rel_tol);
}

} // namespace vexha
