#include <doctest.h>

#include <cmath>

#include "regretforge/adversary.hpp"
#include "regretforge/regret.hpp"
#include "regretforge/regulator.hpp"
#include "regretforge/firm.hpp"

using namespace regretforge;

namespace {

Technology scaled(const Technology& t, double lambda) {
    Technology out;
    out.k = t.k * lambda;
    std::vector<double> levels = t.grid.levels;
    for (double& v : levels) v *= lambda;
    out.grid = OutputGrid(levels);
    for (const Action& a : t.actions) {
        out.actions.push_back(Action{a.effort * lambda, a.probs});
    }
    return out;
}

}  // namespace

TEST_CASE("max_transfer_implementation") {
    Technology two{0.0, binary_grid(1.0),
                   {binary_action(0.5, 0.0, 1.0), binary_action(1.0, 0.2, 1.0)}};
    ImplementationResult top = max_transfer_implementation(two, 1);
    REQUIRE(top.feasible);
    CHECK(top.expected_payment == doctest::Approx(1.0).epsilon(1e-7));

    Technology solo{0.3, binary_grid(1.0), {binary_action(0.5, 0.0, 1.0)}};
    ImplementationResult t2 = max_transfer_implementation(solo, 0);
    REQUIRE(t2.feasible);
    CHECK(t2.expected_payment == doctest::Approx(0.2).epsilon(1e-7));
    CHECK(t2.contract.payments[1] == doctest::Approx(0.4).epsilon(1e-6));

    // Surplus-negative action: worker and firm participation are incompatible.
    Technology bad{0.0, binary_grid(1.0), {binary_action(0.3, 0.5, 1.0)}};
    CHECK_FALSE(max_transfer_implementation(bad, 0).feasible);
}

TEST_CASE("full_info_value") {
    Params p{2.0, 1.0};
    Technology two{0.0, binary_grid(1.0),
                   {binary_action(0.5, 0.0, 1.0), binary_action(1.0, 0.2, 1.0)}};
    CHECK(full_info_value(two, p) == doctest::Approx(1.6).epsilon(1e-7));

    Technology solo{0.3, binary_grid(1.0), {binary_action(0.5, 0.0, 1.0)}};
    CHECK(full_info_value(solo, p) == doctest::Approx(0.4).epsilon(1e-7));

    Technology dead{0.9, binary_grid(1.0), {binary_action(0.5, 0.0, 1.0)}};
    CHECK(full_info_value(dead, p) == doctest::Approx(0.0));
}

TEST_CASE("full_info_value dominates every equilibrium payoff") {
    Params p{2.0, 1.0};
    SearchConfig cfg;
    cfg.seed = 9090;
    cfg.budget = 1;
    cfg.max_actions = 5;
    cfg.k_range = {0.0, 0.4};
    cfg.mean_range = {0.0, 1.0};
    cfg.grid_top = 1.0;
    Rng rng(cfg.seed);
    for (int i = 0; i < 150; ++i) {
        Technology t = random_binary_technology(cfg, rng);
        double v = full_info_value(t, p);
        for (double ell : {0.0, 0.3, 0.6}) {
            EquilibriumOutcome eq = worst_case_equilibrium(t, Regulation::mpr(ell), p);
            CHECK(v >= eq.profit + p.alpha * eq.worker_surplus - 1e-8);
        }
    }
}

TEST_CASE("regret report examples") {
    Params p{2.0, 1.0};
    Regulation third = Regulation::mpr(1.0 / 3.0);

    Technology produce{0.3, binary_grid(0.5), {binary_action(0.5, 0.0, 0.5)}};
    RegretReport r1 = regret(produce, third, p);
    CHECK(r1.participated);
    CHECK(r1.regret == doctest::Approx(0.4 - (1.0 / 30.0 + 2.0 / 6.0)).epsilon(1e-6));

    Technology exit{0.4, binary_grid(0.5), {binary_action(0.5, 0.0, 0.5)}};
    RegretReport r2 = regret(exit, third, p);
    CHECK_FALSE(r2.participated);
    CHECK(r2.regret == doctest::Approx(0.2).epsilon(1e-7));

    // With equal welfare weights, full extraction costs the regulator nothing.
    Params p1{1.0, 1.0};
    Technology free{0.0, binary_grid(1.0), {binary_action(0.6, 0.0, 1.0)}};
    RegretReport r3 = regret(free, Regulation::all(), p1);
    CHECK(r3.regret == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("regret is nonnegative and decomposes") {
    Params p{2.0, 1.0};
    SearchConfig cfg;
    cfg.seed = 2024;
    cfg.budget = 1;
    cfg.max_actions = 6;
    cfg.k_range = {0.0, 0.5};
    cfg.mean_range = {0.0, 1.0};
    cfg.grid_top = 1.0;
    Rng rng(cfg.seed);
    for (int i = 0; i < 200; ++i) {
        Technology t = random_binary_technology(cfg, rng);
        RegretReport rep = regret(t, Regulation::mpr(0.25), p);
        CHECK(rep.regret >= -1e-9);
        CHECK(rep.regret ==
              doctest::Approx(rep.full_info_value - rep.profit - p.alpha * rep.worker_surplus)
                  .epsilon(1e-12));
    }
}

TEST_CASE("values scale linearly with the money unit") {
    Params p{2.0, 1.0};
    Technology t{0.1, binary_grid(1.0),
                 {binary_action(0.5, 0.1, 1.0), binary_action(0.9, 0.3, 1.0)}};
    double v = full_info_value(t, p);
    double r = regret(t, Regulation::mpr(0.25), p).regret;
    for (double lambda : {0.5, 2.0, 10.0}) {
        Params ps{2.0, lambda};
        Technology ts = scaled(t, lambda);
        CHECK(full_info_value(ts, ps) == doctest::Approx(lambda * v).epsilon(1e-7));
        CHECK(regret(ts, Regulation::mpr(0.25), ps).regret ==
              doctest::Approx(lambda * r).epsilon(1e-6));
    }
}
