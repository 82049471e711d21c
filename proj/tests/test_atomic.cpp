#include <catch2/catch_amalgamated.hpp>

#include "vexha/atomic.hpp"
#include "vexha/duality_czo.hpp"
#include "vexha/generators.hpp"

using namespace vexha;

TEST_CASE("level sets") {
    Grid g(6);

    Signal c(g);
    for (int i = 0; i < g.size; ++i) c[i] = 3.0; // between 2^1 and 2^2
    auto ls = level_sets(c);
    CHECK_FALSE(ls.degenerate);
    for (const auto& lvl : ls.levels) {
        bool expect_full = std::ldexp(1.0, lvl.index) < 3.0;
        int count = 0;
        for (auto m : lvl.mask) count += m;
        CHECK(count == (expect_full ? g.size : 0));
        CHECK(count > 0); // empty levels are dropped
    }

    CHECK(level_sets(Signal(g)).degenerate);

    Signal neg(g);
    neg[0] = -1.0;
    CHECK_THROWS_AS(level_sets(neg), std::invalid_argument);

    // nesting on random nonnegative input
    CounterRng rng(1, 0);
    Signal r(g);
    for (int i = 0; i < g.size; ++i) r[i] = std::abs(rng.gaussian());
    auto lr = level_sets(r);
    for (size_t l = 1; l < lr.levels.size(); ++l)
        for (int i = 0; i < g.size; ++i)
            if (lr.levels[l].mask[i]) CHECK(lr.levels[l - 1].mask[i]);

    // thresholds match brute-force comparison
    for (const auto& lvl : lr.levels) {
        double thr = std::ldexp(1.0, lvl.index);
        for (int i = 0; i < g.size; ++i)
            CHECK(static_cast<bool>(lvl.mask[i]) == (r[i].real() > thr));
    }
}

TEST_CASE("stopping cubes partition and B_i membership") {
    Grid g(6);
    KernelFamily fam = build_family(g, 1, 5, WindowKind::shannon_sharp, 1);

    // constant gdf: every interval lands in one generation, maximal cubes are
    // the coarsest tree intervals
    Signal c(g);
    for (int i = 0; i < g.size; ++i) c[i] = 1.5;
    auto lc = level_sets(c);
    std::vector<DyadicInterval> tree = build_dyadic_tree(g, 2, 6);
    auto sc = stopping_cubes(lc, tree, g);
    int gen0 = sc.generation.begin()->second;
    for (const auto& [q, gen] : sc.generation) CHECK(gen == gen0);
    for (const auto& m : sc.maximal) CHECK(m.cube.scale == 2);
    CHECK(sc.maximal.size() == 4);

    // random gdf: exhaustive B_i membership against the masks
    CounterRng rng(2, 0);
    Signal f = random_band_signal(fam, rng);
    Signal gdf = maximal_square_function(f, fam);
    auto ls = level_sets(gdf);
    auto fam_tree = build_dyadic_tree(g, 2, 6);
    auto stopping = stopping_cubes(ls, fam_tree, g);

    auto overlap = [&](const DyadicInterval& q, const std::vector<uint8_t>& mask) {
        int first = q.sample_first(g), count = q.sample_count(g), n = 0;
        for (int i = first; i < first + count; ++i) n += mask[i];
        return n;
    };
    for (const auto& q : fam_tree) {
        int gen = stopping.generation.at(q);
        int count = q.sample_count(g);
        int best = stopping.residual_generation;
        for (const auto& lvl : ls.levels)
            if (2 * overlap(q, lvl.mask) > count) best = lvl.index;
        CHECK(gen == best);

        // assignment is a same-generation ancestor, and is maximal
        const auto& root = stopping.assignment.at(q);
        CHECK(interval_contains(root, q));
        CHECK(stopping.generation.at(root) == gen);
        for (int s = 0; s < root.scale; ++s) {
            auto anc = root.ancestor(s);
            if (stopping.generation.count(anc))
                CHECK(stopping.generation.at(anc) != gen);
        }
    }

    // a concentrated bump puts the top-generation cubes where the bump lives
    Signal bump(g);
    for (int i = 0; i < g.size / 4; ++i) bump[i] = 10.0;
    for (int i = g.size / 4; i < g.size; ++i) bump[i] = 0.01;
    auto lb = level_sets(bump);
    auto sb = stopping_cubes(lb, fam_tree, g);
    int top_gen = -1000;
    for (const auto& m : sb.maximal) top_gen = std::max(top_gen, m.generation);
    for (const auto& m : sb.maximal) {
        if (m.generation != top_gen) continue;
        // more than half of the cube sits inside [0, 1/4)
        int first = m.cube.sample_first(g), count = m.cube.sample_count(g);
        int inside = 0;
        for (int i = first; i < first + count; ++i) inside += i < g.size / 4 ? 1 : 0;
        CHECK(2 * inside > count);
    }
}

TEST_CASE("atomic decomposition") {
    Grid g(7);
    auto p = ExponentFunction::constant(g, 0.9);
    KernelFamily fam = build_family(g, 1, 5, WindowKind::meyer_smooth, 2);
    ChiNormTable table(g, p, g.log2_size);

    CHECK(atomic_decompose(Signal(g), p, fam).atoms.empty());

    Signal biased(g);
    for (int i = 0; i < g.size; ++i) biased[i] = 1.0;
    CHECK_THROWS_AS(atomic_decompose(biased, p, fam), std::invalid_argument);

    // single synthesized psi_Q: dominant stopping cube sits on Q0, and the
    // untruncated decomposition reconstructs exactly
    DyadicInterval q0(4, 5);
    CoeffField s(4, 4);
    s.set(q0, 1.0);
    Signal psi = synthesize(s, fam);
    auto dec = atomic_decompose(psi, p, fam, ProbePolicy::left, &table, AtomTruncation::none);
    REQUIRE(!dec.atoms.empty());
    double best_lambda = 0;
    DyadicInterval best(0, 0);
    for (const auto& [q, l] : dec.lambdas)
        if (l > best_lambda) best_lambda = l, best = q;
    int anchor = q0.sample_first(g);
    CHECK(best.sample_first(g) <= anchor);
    CHECK(anchor < best.sample_first(g) + best.sample_count(g));
    Signal band = project_covered(psi, fam);
    CHECK(l2_norm(band - dec.reconstruction()) <= 1e-6 * l2_norm(band));

    // random input, both policies
    CounterRng rng(3, 0);
    Signal f = random_band_signal(fam, rng);
    Signal fband = project_covered(f, fam);
    auto none = atomic_decompose(f, p, fam, ProbePolicy::left, &table, AtomTruncation::none);
    CHECK(l2_norm(fband - none.reconstruction()) <= 1e-6 * l2_norm(fband));
    auto hard = atomic_decompose(f, p, fam, ProbePolicy::left, &table, AtomTruncation::hard_5q);
    for (const auto& [q, a] : hard.atoms) {
        auto rep = atom_check(a, q, p, 2.0, min_moment_degree(p));
        CHECK(rep.support_ok); // exact by truncation (or vacuous)
    }
    CHECK(hard.truncation_l2 > 0.0); // the honest cost of hard truncation
    // lambdas agree across policies
    for (const auto& [q, l] : hard.lambdas)
        CHECK(l == Catch::Approx(none.lambdas.at(q)).epsilon(1e-12));
}

TEST_CASE("atom check") {
    Grid g(7);
    auto p = ExponentFunction::constant(g, 1.0);

    DyadicInterval q(3, 2);
    CHECK(atom_check(Signal(g), q, p, 2.0, 1).moments_ok);

    // Haar-like blip scaled to the exact size bound: ratio 1
    Signal blip(g);
    int first = q.sample_first(g), count = q.sample_count(g);
    double h = 1.0 / q.length(); // makes ||a||_2 = |Q|^{1/2} / ||chi_Q||_1
    for (int i = 0; i < count; ++i) blip[first + i] = (i < count / 2 ? h : -h);
    auto rep = atom_check(blip, q, p, 2.0, 0);
    CHECK(rep.support_ok);
    CHECK(rep.size_constant == Catch::Approx(1.0).epsilon(1e-9));
    CHECK(rep.moment_max < 1e-15);
    CHECK(rep.moments_ok);

    CHECK_THROWS_AS(atom_check(blip, q, p, 1.0, 0), std::invalid_argument);
}

TEST_CASE("a-quantity") {
    Grid g(7);
    auto p08 = ExponentFunction::constant(g, 0.8);
    auto p1 = ExponentFunction::constant(g, 1.0);

    CHECK(a_quantity({2.75}, {DyadicInterval(3, 2)}, p08) ==
          Catch::Approx(2.75).epsilon(1e-9));

    // disjoint cubes at p = 1 add up
    CHECK(a_quantity({1.5, 2.5}, {DyadicInterval(2, 0), DyadicInterval(2, 3)}, p1) ==
          Catch::Approx(4.0).epsilon(1e-9));

    ChiNormTable table(g, p08, g.log2_size);
    for (int t = 0; t < 50; ++t) {
        CounterRng rng(9, t);
        int count = 3 + static_cast<int>(rng.below(10));
        std::vector<double> lams(count);
        std::vector<DyadicInterval> cubes;
        for (int c = 0; c < count; ++c) {
            lams[c] = std::pow(10.0, 2.0 * rng.uniform() - 1.0);
            int s = static_cast<int>(rng.below(8));
            cubes.emplace_back(s, static_cast<int>(rng.below(uint64_t{1} << s)));
        }
        double a = a_quantity(lams, cubes, p08, &table);
        double sum = 0;
        for (double l : lams) sum += l;
        CHECK(sum <= a * (1 + 1e-9));
    }

    CHECK_THROWS_AS(a_quantity({1.0, 2.0}, {DyadicInterval(1, 0)}, p1),
                    std::invalid_argument);
}

TEST_CASE("duality chain through the decomposition") {
    Grid g(7);
    auto p = ExponentFunction::constant(g, 0.9);
    KernelFamily fam = build_family(g, 1, 5, WindowKind::meyer_smooth, 2);
    ChiNormTable table(g, p, g.log2_size);

    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        CounterRng rng(12, t);
        Signal f = random_band_signal(fam, rng);
        Signal gg = synthesize(random_sparse_field(fam, rng, 8, true), fam);
        auto dec = atomic_decompose(f, p, fam, ProbePolicy::left, &table);
        std::vector<double> lams;
        std::vector<DyadicInterval> cubes;
        for (const auto& [q, l] : dec.lambdas) {
            lams.push_back(l);
            cubes.push_back(q);
        }
        double a = a_quantity(lams, cubes, p, &table);
        double cg = cmo_norm(gg, p, fam, CmoForm::integral, ProbePolicy::left, &table);
        if (a == 0.0 || cg == 0.0) continue;
        worst = std::max(worst, std::abs(pairing(f, gg, fam)) / (a * cg));
    }
    CHECK(worst > 0.0);
    CHECK(worst < 50.0);
}

TEST_CASE("stopping construction sampled at J = 8") {
    Grid g(8);
    KernelFamily fam = build_family(g, 1, 6, WindowKind::meyer_smooth, 2);
    CounterRng rng(41, 0);
    Signal f = random_band_signal(fam, rng);
    Signal gdf = maximal_square_function(f, fam);
    auto ls = level_sets(gdf);
    auto tree = build_dyadic_tree(g, 3, 8);
    auto stopping = stopping_cubes(ls, tree, g);

    // every interval has exactly one generation and a containing maximal cube
    CHECK(stopping.generation.size() == tree.size());
    for (const auto& q : tree) {
        REQUIRE(stopping.assignment.count(q) == 1);
        CHECK(interval_contains(stopping.assignment.at(q), q));
    }
    // sampled membership check
    for (size_t i = 0; i < tree.size(); i += 17) {
        const auto& q = tree[i];
        int count = q.sample_count(g);
        int best = stopping.residual_generation;
        for (const auto& lvl : ls.levels) {
            int overlap = 0;
            for (int s = q.sample_first(g); s < q.sample_first(g) + count; ++s)
                overlap += lvl.mask[s];
            if (2 * overlap > count) best = lvl.index;
        }
        CHECK(stopping.generation.at(q) == best);
    }
}
