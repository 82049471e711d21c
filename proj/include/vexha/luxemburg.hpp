#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dyadic.hpp"
#include "exponent.hpp"
#include "grid.hpp"

namespace vexha {

// Variable-exponent modular: (1/N) sum_i (|f(x_i)| / lambda)^{p(x_i)}.
// Strictly decreasing in lambda wherever f is not identically zero.
inline double modular(const Signal& f, const ExponentFunction& p, double lambda) {
    if (!(lambda > 0.0)) throw std::domain_error("modular: lambda must be positive");
    const int n = f.size();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = std::abs(f[i]);
        if (a == 0.0) continue;
        acc += std::pow(a / lambda, p[i]);
    }
    return acc / n;
}

// Luxemburg norm: inf{lambda > 0 : modular(f, p, lambda) <= 1}, located as
// the unique modular root by bisection on log(lambda).
//
// The initial bracket [max|f| N^{-1/p^-}/2, 2 max|f|] encloses the root for
// every nonzero signal; it is still verified and widened geometrically as the
// contract requires.  Signals of constant modulus are returned exactly: their
// modular at lambda = max|f| is a mean of N exact ones, and N is a power of
// two, so the screen below sees exactly 1.0.
inline double luxemburg_norm(const Signal& f, const ExponentFunction& p,
                             double rel_tol = 1e-10) {
    if (!(rel_tol > 0.0) || rel_tol > 1e-2)
        throw std::invalid_argument("luxemburg_norm: rel_tol must lie in (0, 1e-2]");
    const double m = max_abs(f);
    if (m == 0.0) return 0.0;
    if (modular(f, p, m) == 1.0) return m;

    double lo = 0.5 * m * std::pow(static_cast<double>(f.size()), -1.0 / p.p_minus);
    double hi = 2.0 * m;
    int widenings = 0;
    while (modular(f, p, lo) < 1.0) {
        lo *= 0.25;
        if (++widenings > 64)
            throw numeric_error("luxemburg_norm: lower bracket failure");
    }
    while (modular(f, p, hi) > 1.0) {
        hi *= 4.0;
        if (++widenings > 64)
            throw numeric_error("luxemburg_norm: upper bracket failure");
    }

    double llo = std::log(lo), lhi = std::log(hi);
    const double width_goal = std::log1p(rel_tol);
    for (int it = 0; it < 60 && (lhi - llo) > width_goal; ++it) {
        double lmid = 0.5 * (llo + lhi);
        if (modular(f, p, std::exp(lmid)) >= 1.0)
            llo = lmid;
        else
            lhi = lmid;
    }
    return std::exp(0.5 * (llo + lhi));
}

// One B superset S case of the characteristic-function norm comparison.
struct CharRatioCase {
    DyadicInterval big;
    DyadicInterval small;
    double normalized_ratio = 0.0; // (||chi_B|| / ||chi_S||) * (|S| / |B|)
};

struct CharRatioReport {
    std::vector<CharRatioCase> cases;
    double max_ratio = 0.0;
};

// Checks ||chi_B|| / ||chi_S|| <= C |B|/|S| over nested dyadic pairs by
// reporting the normalized per-case ratio and its maximum.  norm_of supplies
// the indicator norms (exhaustive scans pass a precomputed table).
template <typename NormFn>
CharRatioReport char_ratio_report(
    const std::vector<std::pair<DyadicInterval, DyadicInterval>>& cases, NormFn&& norm_of) {
    CharRatioReport rep;
    rep.cases.reserve(cases.size());
    for (const auto& [big, small] : cases) {
        if (!interval_contains(big, small))
            throw std::invalid_argument("char_ratio_report: S must be contained in B");
        double ratio =
            (norm_of(big) / norm_of(small)) * (small.length() / big.length());
        rep.cases.push_back({big, small, ratio});
        rep.max_ratio = std::max(rep.max_ratio, ratio);
    }
    return rep;
}

inline CharRatioReport char_ratio_report(
    const Grid& g, const ExponentFunction& p,
    const std::vector<std::pair<DyadicInterval, DyadicInterval>>& cases,
    double rel_tol = 1e-10) {
    return char_ratio_report(cases, [&](const DyadicInterval& q) {
        return luxemburg_norm(indicator(g, q), p, rel_tol);
    });
}

struct HolderReport {
    double lhs = 0.0;   // ||f g||_{p}
    double rhs = 0.0;   // ||f||_{p1} ||g||_{p2}
    double ratio = 0.0; // lhs / rhs, 0 when rhs = 0
};

// Generalized Hoelder with 1/p = 1/p1 + 1/p2 taken pointwise.
inline HolderReport holder_report(const Signal& f, const Signal& g, const ExponentFunction& p1,
                                  const ExponentFunction& p2, double rel_tol = 1e-10) {
    ExponentFunction p = harmonic_exponent(p1, p2);
    Signal prod(f.grid);
    for (int i = 0; i < f.size(); ++i) prod[i] = f[i] * g[i];
    HolderReport rep;
    rep.lhs = luxemburg_norm(prod, p, rel_tol);
    rep.rhs = luxemburg_norm(f, p1, rel_tol) * luxemburg_norm(g, p2, rel_tol);
    rep.ratio = rep.rhs == 0.0 ? 0.0 : rep.lhs / rep.rhs;
    return rep;
}

} // namespace vexha
