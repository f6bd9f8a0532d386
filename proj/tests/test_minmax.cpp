#include <doctest.h>

#include <cmath>

#include "regretforge/adversary.hpp"
#include "regretforge/minmax.hpp"

using namespace regretforge;

TEST_CASE("branch formulas") {
    Params p2{2.0, 1.0};
    CHECK(branch_no_production(0.5, p2) == doctest::Approx(2.0 * 0.5));
    CHECK(branch_no_production(0.0, p2) == doctest::Approx(2.0 * std::exp(-1.0)));
    CHECK(branch_no_production(1.0 / 3.0, p2) ==
          doctest::Approx(2.0 * std::exp(-0.5) * 2.0 / 3.0));
    CHECK_THROWS_AS(branch_no_production(1.0, p2), std::invalid_argument);

    CHECK(branch_extraction(1.0, p2) == doctest::Approx(0.0));
    Params p1{1.0, 1.0};
    CHECK(branch_extraction(0.0, p1) == doctest::Approx(std::exp(-1.0)));
    CHECK(branch_extraction(1.0 / 3.0, p2) ==
          doctest::Approx(2.0 * std::exp(-0.5) * 2.0 / 3.0));
}

TEST_CASE("optimal_mpr closed form") {
    Params p1{1.0, 1.0};
    MinmaxResult r1 = optimal_mpr(p1);
    CHECK(r1.ell_star == 0.0);  // laissez-faire is optimal exactly at alpha = 1
    CHECK(r1.rbar == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    Params p2{2.0, 1.0};
    MinmaxResult r2 = optimal_mpr(p2);
    CHECK(r2.ell_star == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(r2.rbar == doctest::Approx(0.8087075462835113).epsilon(1e-12));

    Params phuge{1e9, 1.0};
    CHECK(std::abs(optimal_mpr(phuge).ell_star - 0.5) <= 1e-9);
}

TEST_CASE("optimal_mpr_numeric agrees with the closed form") {
    for (double alpha : {1.0, 1.5, 2.0}) {
        Params p{alpha, 1.0};
        MinmaxResult numeric = optimal_mpr_numeric(p, 1e-8);
        CHECK(std::abs(numeric.ell_star - piece_rate_star(alpha)) <= 1e-6);
    }
    CHECK(optimal_mpr_numeric(Params{1.5, 1.0}, 1e-8).ell_star == doctest::Approx(0.25));
}

TEST_CASE("branch equalization and scale invariance of ell_star") {
    for (int i = 0; i < 30; ++i) {
        double alpha = std::pow(10.0, 6.0 * i / 29.0);
        double ls = piece_rate_star(alpha);
        // (2l-1)/(1-l) = -1/alpha at the optimum.
        CHECK((2.0 * ls - 1.0) / (1.0 - ls) == doctest::Approx(-1.0 / alpha).epsilon(1e-12));
    }
    for (double ybar : {0.5, 1.0, 10.0}) {
        Params p{3.0, ybar};
        CHECK(optimal_mpr_numeric(p, 1e-8).ell_star == doctest::Approx(piece_rate_star(3.0)));
    }
}

TEST_CASE("floor comparisons behind the branch minimum") {
    // High floors beat the extraction branch; low floors stay below the
    // no-production branch.
    for (double w : {0.5, 0.6, 0.8, 1.0}) {
        for (double alpha : {1.0, 2.0, 7.0}) {
            CHECK(w > std::exp(-1.0 / alpha) * (1.0 - w));
        }
    }
    for (double w : {0.0, 0.1, 0.3, 0.5}) {
        CHECK(std::exp((2.0 * w - 1.0) / (1.0 - w)) * (1.0 - w) >= w - 1e-12);
    }
    // Production-side slack between the alpha-weighted and unweighted terms.
    for (double alpha : {1.0, 1.7, 4.0, 50.0}) {
        for (double w : {0.0, 0.4, 1.0}) {
            CHECK(alpha * std::exp(-1.0 / alpha) * (1.0 - w) >= (alpha - 1.0) * (1.0 - w) - 1e-12);
        }
    }
}

TEST_CASE("constrained branches reduce to the unconstrained ones") {
    Params p{2.0, 1.0};
    KnowledgeBox box{0.0, 1.0, 0.0};
    for (double ell : {0.0, 0.15, 1.0 / 3.0, 0.49}) {
        ConstrainedBranches b = constrained_branches(ell, p, box);
        CHECK(b.no_hire == doctest::Approx(branch_no_production(ell, p)).epsilon(1e-12));
        CHECK(b.extraction == doctest::Approx(branch_extraction(ell, p)).epsilon(1e-12));
        CHECK(b.single_action == doctest::Approx(p.alpha * ell * 1.0));
    }
}

TEST_CASE("constrained branches with informative boxes") {
    Params p{2.0, 1.0};
    // Means known to be near ybar: the extraction branch collapses to its
    // participation term.
    KnowledgeBox near_top{0.05, 0.1, 0.995};
    ConstrainedBranches b = constrained_branches(0.2, p, near_top);
    double expected = (p.alpha - 1.0) * ((1.0 - 0.2) * 1.0 - near_top.k_lo);
    CHECK(b.extraction == doctest::Approx(expected).epsilon(0.02));

    // ell -> 1 starves the extraction branch.
    KnowledgeBox loose{0.0, 1.0, 0.0};
    ConstrainedBranches b2 = constrained_branches(1.0 - 1e-9, p, loose);
    CHECK(b2.extraction <= 1e-6);
    CHECK(b2.single_action == doctest::Approx(p.alpha * (1.0 - 1e-9)));
}

TEST_CASE("optimal_mpr_constrained") {
    Params p{2.0, 1.0};
    KnowledgeBox box{0.0, 1.0, 0.0};
    MinmaxResult res = optimal_mpr_constrained(p, box, 1e-6);
    CHECK(std::abs(res.ell_star - 1.0 / 3.0) <= 1e-4);

    CHECK_THROWS_AS((KnowledgeBox{0.0, 0.0, 0.0}.validate(p)), std::invalid_argument);

    Params p1{1.0, 1.0};
    MinmaxResult r1 = optimal_mpr_constrained(p1, box, 1e-6);
    ConstrainedBranches at0 = constrained_branches(0.0, p1, box);
    double v0 = std::max({at0.single_action, at0.no_hire, at0.extraction});
    CHECK(r1.rbar <= v0 + 1e-6);  // the minimizer can only improve on ell = 0
}

TEST_CASE("stochastic orders") {
    OutputGrid g = binary_grid(1.0);
    Action hi = binary_action(0.7, 0.0, 1.0);
    Action lo = binary_action(0.3, 0.0, 1.0);
    CHECK(mlrp_geq(hi, lo, g));
    CHECK_FALSE(mlrp_geq(lo, hi, g));
    CHECK(mlrp_geq(hi, hi, g));
    CHECK(fosd_geq(hi, lo, g));
    CHECK_FALSE(fosd_geq(lo, hi, g));
    CHECK(fosd_geq(lo, lo, g));

    OutputGrid g3({0.0, 0.5, 1.0});
    Action a{0.0, {0.5, 0.0, 0.5}};
    Action b{0.0, {0.0, 1.0, 0.0}};  // crossing pair: neither dominates
    CHECK_FALSE(fosd_geq(a, b, g3));
    CHECK_FALSE(fosd_geq(b, a, g3));

    // Likelihood-ratio dominance implies first-order dominance.
    Rng rng(606);
    int implications = 0;
    for (int i = 0; i < 400; ++i) {
        double m1 = rng.uniform(0.0, 1.0), m2 = rng.uniform(0.0, 1.0);
        Action f = binary_action(std::max(m1, m2), 0.0, 1.0);
        Action h = binary_action(std::min(m1, m2), 0.0, 1.0);
        if (mlrp_geq(f, h, g)) {
            CHECK(fosd_geq(f, h, g));
            ++implications;
        }
    }
    CHECK(implications > 300);
}

TEST_CASE("technology class membership") {
    Params p{2.0, 1.0};
    double ls = piece_rate_star(2.0);
    Technology curve =
        construct_no_production_curve(ls, 1.0, optimal_k_no_production(ls, 1.0), 200);
    CHECK(technology_in_class(curve, TechnologyClass::Mlrp));
    CHECK(technology_in_class(curve, TechnologyClass::Fosd));

    OutputGrid g3({0.0, 0.5, 1.0});
    Technology crossing{0.0, g3,
                        {Action{0.1, {0.5, 0.0, 0.5}}, Action{0.1, {0.0, 1.0, 0.0}}}};
    CHECK_FALSE(technology_in_class(crossing, TechnologyClass::Mlrp));

    KnowledgeBox big{0.0, 1e9, 0.0};
    Params pbig{2.0, 1.0};
    CHECK(technology_in_box(curve, big, pbig));
    KnowledgeBox narrow{0.0, 0.1, 0.0};
    CHECK_FALSE(technology_in_box(curve, narrow, pbig));
}
