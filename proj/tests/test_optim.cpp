#include <doctest.h>

#include <cmath>

#include "regretforge/adversary.hpp"
#include "regretforge/lp.hpp"
#include "regretforge/minimize.hpp"
#include "regretforge/minmax.hpp"

using namespace regretforge;

namespace {

LinearProgram one_var(double c, double lo, double hi) {
    LinearProgram lp;
    lp.objective = {c};
    lp.lower = {lo};
    lp.upper = {hi};
    return lp;
}

}  // namespace

TEST_CASE("solve_lp pinned examples") {
    {
        LinearProgram lp = one_var(1.0, 0.0, 1.0);
        LpSolution s = solve_lp(lp, LpSense::Maximize);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(1.0));
    }
    {
        LinearProgram lp = one_var(1.0, 0.0, 1.0);
        lp.rows.push_back({{1.0}, RowSense::Ge, 0.4});
        LpSolution s = solve_lp(lp, LpSense::Minimize);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(0.4));
    }
    {
        LinearProgram lp = one_var(0.5, 0.0, 1.0);
        lp.rows.push_back({{0.5}, RowSense::Ge, 0.2});
        LpSolution s = solve_lp(lp, LpSense::Maximize);
        REQUIRE(s.status == LpStatus::Optimal);
        CHECK(s.value == doctest::Approx(0.5));
        CHECK(s.x[0] == doctest::Approx(1.0));
    }
}

TEST_CASE("solve_lp statuses") {
    {
        LinearProgram lp = one_var(1.0, 0.0, 1.0);
        lp.rows.push_back({{1.0}, RowSense::Ge, 2.0});
        CHECK(solve_lp(lp, LpSense::Minimize).status == LpStatus::Infeasible);
    }
    {
        LinearProgram lp = one_var(1.0, 0.0, std::numeric_limits<double>::infinity());
        CHECK(solve_lp(lp, LpSense::Maximize).status == LpStatus::Unbounded);
    }
}

TEST_CASE("solve_lp detects infeasible two-variable programs") {
    // Regression: an unsatisfiable >= row over shifted negative bounds once
    // slipped through phase 1.
    LinearProgram lp;
    lp.objective = {0.6467, -0.7416};
    lp.lower = {-0.8843, -1.6734};
    lp.upper = {0.2653, 0.0304};
    lp.rows.push_back({{-0.2489, -0.1455}, RowSense::Ge, 0.5853});
    CHECK(solve_lp(lp, LpSense::Maximize).status == LpStatus::Infeasible);
}

TEST_CASE("solve_lp solutions are feasible and deterministic") {
    Rng rng(1201);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 2 + rng.uniform_index(2);
        LinearProgram lp;
        lp.objective.resize(n);
        lp.lower.resize(n);
        lp.upper.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            lp.objective[j] = rng.uniform(-1.0, 1.0);
            lp.lower[j] = rng.uniform(-1.0, 0.0);
            lp.upper[j] = lp.lower[j] + rng.uniform(0.2, 2.0);
        }
        for (std::size_t r = 0, rows = 1 + rng.uniform_index(3); r < rows; ++r) {
            LpRow row;
            row.coeffs.resize(n);
            for (std::size_t j = 0; j < n; ++j) row.coeffs[j] = rng.uniform(-1.0, 1.0);
            row.sense = rng.uniform_index(2) == 0 ? RowSense::Le : RowSense::Ge;
            row.rhs = rng.uniform(-0.5, 0.5);
            lp.rows.push_back(std::move(row));
        }
        LpSolution a = solve_lp(lp, LpSense::Minimize);
        LpSolution b = solve_lp(lp, LpSense::Minimize);
        CHECK(a.status == b.status);
        if (a.status == LpStatus::Optimal) {
            CHECK(a.value == b.value);
            for (const LpRow& row : lp.rows) {
                double lhs = 0.0;
                for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * a.x[j];
                if (row.sense == RowSense::Le) CHECK(lhs <= row.rhs + 1e-9);
                if (row.sense == RowSense::Ge) CHECK(lhs >= row.rhs - 1e-9);
            }
        }
    }
}

TEST_CASE("minimize_1d") {
    auto quad = [](double x) { return (x - 0.3) * (x - 0.3); };
    ScalarMinimum m = minimize_1d(quad, 0.0, 1.0, 1e-8);
    CHECK(std::abs(m.x - 0.3) <= 1e-7);

    ScalarMinimum left = minimize_1d([](double x) { return x; }, 0.0, 1.0, 1e-8);
    CHECK(left.x == 0.0);

    // The piece-rate objective for alpha = 2 has its kink at 1/3; the injected
    // candidate pins it exactly.
    Params p{2.0, 1.0};
    auto branches = [&](double ell) {
        return std::max(branch_no_production(ell, p), branch_extraction(ell, p));
    };
    const double candidate[] = {piece_rate_star(2.0)};
    ScalarMinimum kink = minimize_1d(branches, 0.0, 0.5, 1e-10, candidate);
    CHECK(kink.x == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

    CHECK_THROWS_AS(minimize_1d([](double) { return std::nan(""); }, 0.0, 1.0, 1e-6),
                    std::domain_error);
    CHECK_THROWS_AS(minimize_1d(quad, 1.0, 0.0, 1e-6), std::invalid_argument);
}
