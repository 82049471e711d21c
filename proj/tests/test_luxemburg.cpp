#include <catch2/catch_amalgamated.hpp>

#include "vexha/generators.hpp"
#include "vexha/luxemburg.hpp"
#include "vexha/verify.hpp"

using namespace vexha;

namespace {
Signal constant_signal(const Grid& g, cplx c) {
    Signal f(g);
    for (int i = 0; i < g.size; ++i) f[i] = c;
    return f;
}
} // namespace

TEST_CASE("modular closed values") {
    Grid g(6);
    auto p = ExponentFunction::sinusoid(g, 0.8, 0.1);
    Signal c = constant_signal(g, 2.5);
    CHECK(modular(c, p, 2.5) == 1.0);

    Signal z(g);
    CHECK(modular(z, p, 1.0) == 0.0);

    auto p2 = ExponentFunction::constant(g, 2.0);
    Signal half = indicator(g, DyadicInterval(1, 0));
    CHECK(modular(half, p2, 1.0) == 0.5);

    CHECK_THROWS_AS(modular(c, p, 0.0), std::domain_error);
    CHECK_THROWS_AS(modular(c, p, -1.0), std::domain_error);
}

TEST_CASE("modular is strictly decreasing in lambda") {
    Grid g(6);
    auto p = ExponentFunction::sinusoid(g, 0.9, 0.2);
    CounterRng rng(1, 0);
    Signal f = random_signal(g, rng);
    double prev = modular(f, p, 0.25);
    for (double lam : {0.5, 1.0, 2.0, 4.0}) {
        double cur = modular(f, p, lam);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("luxemburg norm basics") {
    Grid g(8);
    auto pv = ExponentFunction::sinusoid(g, 0.8, 0.1);
    CHECK(luxemburg_norm(Signal(g), pv) == 0.0);
    CHECK(luxemburg_norm(constant_signal(g, 3.25), pv) == 3.25);

    // chi_E with constant exponent: |E|^{1/p0}
    auto p05 = ExponentFunction::constant(g, 0.5);
    Signal quarter = indicator(g, DyadicInterval(2, 0));
    CHECK(luxemburg_norm(quarter, p05) == Catch::Approx(1.0 / 16).epsilon(1e-9));

    CHECK_THROWS_AS(luxemburg_norm(quarter, p05, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(luxemburg_norm(quarter, p05, 0.5), std::invalid_argument);
}

TEST_CASE("luxemburg matches the golden-section oracle") {
    Grid g(8);
    auto p = ExponentFunction::sinusoid(g, 0.8, 0.1);
    Signal f(g);
    for (int i = 0; i < g.size; ++i)
        f[i] = 1.0 + std::cos(2.0 * std::numbers::pi * g.sample_pos(i));
    double fast = luxemburg_norm(f, p);
    double oracle = verify::detail_v::golden_section_luxemburg(f, p);
    CHECK(fast == Catch::Approx(oracle).epsilon(1e-8));
}

TEST_CASE("luxemburg properties: homogeneity, monotonicity, unit modular") {
    Grid g(7);
    auto p = ExponentFunction::sinusoid(g, 0.9, 0.25, 2);
    for (int t = 0; t < 100; ++t) {
        CounterRng rng(21, t);
        Signal f = random_signal(g, rng);
        double c = std::pow(10.0, 4.0 * rng.uniform() - 2.0);
        double n1 = luxemburg_norm(f, p);
        Signal cf = cplx{c, 0.0} * f;
        CHECK(luxemburg_norm(cf, p) == Catch::Approx(c * n1).epsilon(3e-10));
        CHECK(modular(f, p, n1) == Catch::Approx(1.0).margin(1e-9));
    }
    for (int t = 0; t < 20; ++t) {
        CounterRng rng(22, t);
        Signal f = random_signal(g, rng);
        Signal h = f;
        for (int i = 0; i < g.size; ++i) h[i] *= 1.0 + rng.uniform();
        CHECK(luxemburg_norm(f, p) <= luxemburg_norm(h, p) * (1 + 1e-10) + 1e-300);
    }
}

TEST_CASE("constant exponent reduction") {
    Grid g(7);
    for (double p0 : {0.5, 0.8, 1.0, 2.0, 3.5}) {
        auto p = ExponentFunction::constant(g, p0);
        CounterRng rng(31, static_cast<uint64_t>(p0 * 10));
        Signal f = random_signal(g, rng);
        double acc = 0;
        for (int i = 0; i < g.size; ++i) acc += std::pow(std::abs(f[i]), p0);
        double closed = std::pow(acc / g.size, 1.0 / p0);
        CHECK(luxemburg_norm(f, p) == Catch::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("char ratio closed forms") {
    Grid g(8);

    // constant exponent: normalized ratio = (|B|/|S|)^{1/p0 - 1}
    auto p2 = ExponentFunction::constant(g, 2.0);
    auto rep = char_ratio_report(g, p2, {{DyadicInterval(1, 0), DyadicInterval(3, 1)}});
    CHECK(rep.cases[0].normalized_ratio == Catch::Approx(0.5).epsilon(1e-9));

    // p0 = 0.7 < 1: the normalized ratio is (|B|/|S|)^{1/p0 - 1} > 1 and the
    // exhaustive maximum matches that closed form at the deepest pair
    auto p07 = ExponentFunction::constant(g, 0.7);
    std::vector<std::pair<DyadicInterval, DyadicInterval>> cases;
    for (int ss = 0; ss <= 6; ++ss)
        for (int ks = 0; ks < (1 << ss); ++ks)
            cases.push_back({DyadicInterval(ss, ks).ancestor(0), DyadicInterval(ss, ks)});
    auto rep07 = char_ratio_report(g, p07, cases);
    CHECK(rep07.max_ratio ==
          Catch::Approx(std::pow(64.0, 1.0 / 0.7 - 1.0)).epsilon(1e-8));

    // p0 >= 1 keeps the normalized ratio at or below one
    auto p15 = ExponentFunction::constant(g, 1.5);
    CHECK(char_ratio_report(g, p15, cases).max_ratio <= 1.0 + 1e-9);

    auto pv = ExponentFunction::sinusoid(g, 0.8, 0.1);
    auto repv = char_ratio_report(g, pv, cases);
    CHECK(std::isfinite(repv.max_ratio));
    CHECK(repv.max_ratio > 0.0);

    CHECK_THROWS_AS(
        char_ratio_report(g, p2, {{DyadicInterval(2, 0), DyadicInterval(2, 1)}}),
        std::invalid_argument);
}

TEST_CASE("generalized Hoelder") {
    Grid g(7);
    auto p1 = ExponentFunction::constant(g, 1.5);
    auto p2 = ExponentFunction::constant(g, 3.0);

    auto ca = constant_signal(g, 2.0);
    auto cb = constant_signal(g, 0.75);
    auto rep = holder_report(ca, cb, p1, p2);
    CHECK(rep.lhs == Catch::Approx(1.5).epsilon(1e-9));
    CHECK(rep.ratio == Catch::Approx(1.0).epsilon(1e-9));

    // chi_E squared is chi_E: with p1 = p2 = 2 both sides equal |E|
    auto pq = ExponentFunction::constant(g, 2.0);
    Signal chi = indicator(g, DyadicInterval(2, 1));
    auto rep2 = holder_report(chi, chi, pq, pq);
    CHECK(rep2.lhs == Catch::Approx(0.25).epsilon(1e-9));
    CHECK(rep2.ratio == Catch::Approx(1.0).epsilon(1e-9));

    // constant-exponent Hoelder is sharp with C = 1
    for (int t = 0; t < 25; ++t) {
        CounterRng rng(41, t);
        Signal f = random_signal(g, rng);
        Signal h = random_signal(g, rng);
        CHECK(holder_report(f, h, p1, p2).ratio <= 1.0 + 1e-9);
    }
}
