#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "grid.hpp"

namespace vexha {

// One dyadic interval Q_{j,k} = [k 2^-j, (k+1) 2^-j) of the unit torus.
// Carries only (scale, position); sample ranges are derived against a grid,
// so the same key works across refinement levels.
struct DyadicInterval {
    int scale = 0;    // j
    int position = 0; // k in [0, 2^j)

    DyadicInterval() = default;
    DyadicInterval(int j, int k) : scale(j), position(k) {
        if (j < 0 || k < 0 || k >= (1 << j))
            throw config_error("DyadicInterval: position " + std::to_string(k) +
                               " out of range at scale " + std::to_string(j));
    }

    double length() const { return std::ldexp(1.0, -scale); }
    double anchor() const { return position * length(); } // left endpoint z_Q

    int sample_count(const Grid& g) const { return g.size >> scale; }
    int sample_first(const Grid& g) const { return position * (g.size >> scale); }

    bool operator<(const DyadicInterval& o) const {
        return scale != o.scale ? scale < o.scale : position < o.position;
    }
    bool operator==(const DyadicInterval& o) const {
        return scale == o.scale && position == o.position;
    }

    DyadicInterval parent() const { return DyadicInterval(scale - 1, position >> 1); }
    DyadicInterval ancestor(int coarser_scale) const {
        return DyadicInterval(coarser_scale, position >> (scale - coarser_scale));
    }

    std::string str() const {
        return "Q(" + std::to_string(scale) + "," + std::to_string(position) + ")";
    }
};

// Q subset of P, as index arithmetic (reflexive).
inline bool interval_contains(const DyadicInterval& p, const DyadicInterval& q) {
    if (p.scale > q.scale) return false;
    return (q.position >> (q.scale - p.scale)) == p.position;
}

// All intervals with scale in [j_min, j_max], ordered by (scale, position).
inline std::vector<DyadicInterval> build_dyadic_tree(const Grid& g, int j_min, int j_max) {
    if (j_min < 0 || j_min > j_max || j_max > g.log2_size)
        throw std::out_of_range("build_dyadic_tree: need 0 <= j_min <= j_max <= log2_size");
    std::vector<DyadicInterval> out;
    out.reserve((size_t{2} << j_max));
    for (int j = j_min; j <= j_max; ++j)
        for (int k = 0; k < (1 << j); ++k) out.emplace_back(j, k);
    return out;
}

inline Signal indicator(const Grid& g, const DyadicInterval& q) {
    Signal s(g);
    int first = q.sample_first(g);
    int count = q.sample_count(g);
    for (int i = 0; i < count; ++i) s[first + i] = 1.0;
    return s;
}

// Sparse complex coefficients indexed by dyadic interval; absent keys are 0.
struct CoeffField {
    std::map<DyadicInterval, cplx> entries;
    int scale_min = 0;
    int scale_max = 0;

    CoeffField() = default;
    CoeffField(int j_lo, int j_hi) : scale_min(j_lo), scale_max(j_hi) {
        if (j_lo < 0 || j_lo > j_hi)
            throw config_error("CoeffField: invalid scale range");
    }

    void set(const DyadicInterval& q, cplx v) {
        if (q.scale < scale_min || q.scale > scale_max)
            throw std::out_of_range("CoeffField::set: scale " + std::to_string(q.scale) +
                                    " outside [" + std::to_string(scale_min) + ", " +
                                    std::to_string(scale_max) + "]");
        entries[q] = v;
    }
    cplx get(const DyadicInterval& q) const {
        auto it = entries.find(q);
        return it == entries.end() ? cplx{0.0, 0.0} : it->second;
    }
    bool empty() const { return entries.empty(); }
    size_t size() const { return entries.size(); }
};

} // namespace vexha
