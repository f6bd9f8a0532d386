#pragma once

#include "regretforge/types.hpp"

namespace regretforge {

struct MinmaxResult {
    double ell_star = 0.0;             // optimal minimum piece rate
    double rbar = 0.0;                 // worst-case regret at the optimum
    double branch_no_production = 0.0; // regret branch from deterred hiring
    double branch_extraction = 0.0;    // regret branch from surplus extraction
};

// (alpha - 1) / (2 alpha - 1).
double piece_rate_star(double alpha);

// e^{-1/alpha} * (1 - ell_star): the profit-share rate bounding the
// flexibility band for outputs above ybar.
double rho_star(double alpha);

// Worst-case regret of the piece-rate floor `ell` from technologies that
// deter hiring: alpha * e^{(2l-1)/(1-l)} * (1-l) * ybar. Requires ell in [0,1).
double branch_no_production(double ell, const Params& p);

// Worst-case regret of `ell` from technologies where the firm produces and
// extracts the surplus: alpha * e^{-1/alpha} * (1-l) * ybar. ell in [0,1].
double branch_extraction(double ell, const Params& p);

// Closed-form minmax over piece-rate floors: ell_star and
// rbar = alpha^2 e^{-1/alpha} ybar / (2 alpha - 1), with branch values attached.
MinmaxResult optimal_mpr(const Params& p);

// Numeric minimization of max(branches) over [0, 1/2] with the closed-form
// candidate injected; agrees with optimal_mpr within tol.
MinmaxResult optimal_mpr_numeric(const Params& p, double tol);

// Regulator knowledge: production cost in [k_lo, k_hi] and every action
// mean in [y_lo, ybar].
struct KnowledgeBox {
    double k_lo = 0.0;
    double k_hi = 0.0;
    double y_lo = 0.0;

    void validate(const Params& p) const;
};

struct ConstrainedBranches {
    double single_action = 0.0;
    double no_hire = 0.0;
    double extraction = 0.0;
};

// The three knowledge-constrained regret branches at floor `ell`, each a
// supremum over its interval taken with analytic interior candidates plus
// golden-section backup. Reduces to the unconstrained branches at the box
// (0, ybar, 0).
ConstrainedBranches constrained_branches(double ell, const Params& p, const KnowledgeBox& box);

// Numeric minmax over ell in [0, 1) of the max of the constrained branches.
MinmaxResult optimal_mpr_constrained(const Params& p, const KnowledgeBox& box, double tol);

// Likelihood-ratio dominance of f over g on the shared grid: for all levels
// y' >= y in the support of the equal-weight mixture,
// f(y') g(y) >= g(y') f(y).
bool mlrp_geq(const Action& f, const Action& g, const OutputGrid& grid);

// First-order stochastic dominance: the cumulative of f lies below the
// cumulative of g at every level.
bool fosd_geq(const Action& f, const Action& g, const OutputGrid& grid);

enum class TechnologyClass { Mlrp, Fosd };

// Whether the actions can be ordered by effort cost with pairwise dominance
// along the sort.
bool technology_in_class(const Technology& t, TechnologyClass cls);

// Whether k and every action mean fall inside the box.
bool technology_in_box(const Technology& t, const KnowledgeBox& box, const Params& p);

}  // namespace regretforge
