#include <doctest.h>

#include <cmath>

#include "regretforge/adversary.hpp"
#include "regretforge/analysis.hpp"
#include "regretforge/minmax.hpp"
#include "regretforge/regret.hpp"

using namespace regretforge;

TEST_CASE("lower_convex_envelope") {
    PiecewiseLinear line = lower_convex_envelope({{0.0, 0.0}, {1.0, 0.5}, {2.0, 1.0}});
    CHECK(line(1.0) == doctest::Approx(0.5));
    CHECK(line(1.5) == doctest::Approx(0.75));

    PiecewiseLinear bent = lower_convex_envelope({{0.0, 0.0}, {1.0, 0.8}, {2.0, 0.4}});
    CHECK(bent(1.0) == doctest::Approx(0.2));  // chord from (0,0) to (2,0.4)

    PiecewiseLinear chord = lower_convex_envelope({{0.0, 0.0}, {2.0, 1.2}});
    CHECK(chord(1.0) == doctest::Approx(0.6));

    CHECK_THROWS_AS(lower_convex_envelope({}), std::invalid_argument);
    CHECK_THROWS_AS((lower_convex_envelope({{1.0, 0.0}})), std::invalid_argument);
    CHECK_THROWS_AS(bent(3.0), std::domain_error);
}

TEST_CASE("envelope is convex and below its inputs") {
    Rng rng(515);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
        double x = 0.0;
        for (int i = 0; i < 8; ++i) {
            x += rng.uniform(0.05, 0.4);
            pts.emplace_back(x, rng.uniform(0.0, x));
        }
        PiecewiseLinear env = lower_convex_envelope(pts);
        for (const auto& pt : pts) CHECK(env(pt.first) <= pt.second + 1e-12);
        for (std::size_t i = 0; i + 2 < env.xs.size(); ++i) {
            double mid = env(0.5 * (env.xs[i] + env.xs[i + 2]));
            CHECK(mid <= 0.5 * (env.ys[i] + env.ys[i + 2]) + 1e-12);
        }
    }
}

TEST_CASE("necessity_check on the optimal piece rate and its perturbations") {
    Params p{2.0, 1.0};
    double ls = piece_rate_star(2.0);

    NecessityReport ok = necessity_check(Regulation::mpr(ls), p, default_probe(p));
    CHECK(ok.band_ok);
    CHECK(ok.gaming_ok);
    CHECK(ok.flexibility_ok);
    CHECK(ok.rho_star ==
          doctest::Approx(std::exp(-0.5) * (1.0 - ls)).epsilon(1e-12));

    // A floor at half the optimal rate breaks the band at and above ybar.
    std::vector<double> levels{0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> floor;
    for (double y : levels) floor.push_back(0.5 * ls * y);
    NecessityReport low =
        necessity_check(Regulation::minimum_contract(OutputGrid(levels), floor), p, {});
    CHECK_FALSE(low.band_ok);
    REQUIRE(low.band_violation.has_value());
    CHECK(low.band_violation->y >= 1.0 - 1e-9);

    // A single allowed slope cannot cover the required payment interval.
    NecessityReport rigid = necessity_check(Regulation::linear_family({ls}), p, default_probe(p));
    CHECK(rigid.band_ok);
    CHECK_FALSE(rigid.flexibility_ok);
    REQUIRE(rigid.flexibility_gap.has_value());
    CHECK(rigid.flexibility_gap->y >= 1.0 - 1e-9);
}

TEST_CASE("necessity_check flags convex gaming holes") {
    Params p{2.0, 1.0};
    double ls = piece_rate_star(2.0);
    std::vector<double> levels{0.0, 0.5, 1.0, 1.5};
    std::vector<double> floor{0.0, ls * 0.5, ls, 1.0 / 6.0};  // dip at 1.5
    NecessityReport rep =
        necessity_check(Regulation::minimum_contract(OutputGrid(levels), floor), p, {});
    CHECK_FALSE(rep.band_ok);  // the dip is also a band violation at 1.5
    CHECK_FALSE(rep.gaming_ok);
    REQUIRE(rep.gaming_witness.has_value());
    CHECK(rep.gaming_witness->envelope < ls * rep.gaming_witness->y);
}

TEST_CASE("reported band violations close the loop with the counterexamples") {
    Params p{2.0, 1.0};
    double rbar = optimal_mpr(p).rbar;
    for (double ell : {0.05, 0.2, 0.45, 0.6}) {
        NecessityReport rep = necessity_check(Regulation::mpr(ell), p, default_probe(p));
        if (std::abs(ell - piece_rate_star(2.0)) < 1e-9) continue;
        // Probe only at or above ybar, where every violation is certifiable.
        std::vector<double> high_probe;
        for (double y : default_probe(p)) {
            if (y >= 1.0) high_probe.push_back(y);
        }
        NecessityReport above = necessity_check(Regulation::mpr(ell), p, high_probe);
        REQUIRE_FALSE(above.band_ok);
        REQUIRE(above.band_violation.has_value());
        ViolationWitness wit =
            construct_band_violation(above.band_violation->y, above.band_violation->w, p, 600);
        CHECK(regret(wit.tech, wit.regulation, p).regret > rbar + 1e-4);
        (void)rep;
    }
}

TEST_CASE("the optimal piece rate passes the diagnostics across alpha") {
    for (int i = 0; i < 12; ++i) {
        double alpha = 1.0 + 99.0 * i / 11.0;
        Params p{alpha, 1.0};
        NecessityReport rep =
            necessity_check(Regulation::mpr(piece_rate_star(alpha)), p, default_probe(p));
        CHECK(rep.band_ok);
        CHECK(rep.gaming_ok);
        CHECK(rep.flexibility_ok);
    }
}

TEST_CASE("sweep_alpha") {
    std::vector<AlphaSweepRow> rows = sweep_alpha({1.0, 2.0, 5.0}, 1.0);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].ell_star == doctest::Approx(0.0));
    CHECK(rows[1].ell_star == doctest::Approx(1.0 / 3.0));
    CHECK(rows[2].ell_star == doctest::Approx(4.0 / 9.0));
    CHECK(rows[0].rbar == doctest::Approx(std::exp(-1.0)));
    CHECK(sweep_alpha({3.0}, 2.0).size() == 1);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ell_star >= rows[i - 1].ell_star);
}
