#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "regretforge/types.hpp"

namespace regretforge {

struct ImplementationResult {
    std::size_t action_index = 0;
    Contract contract;
    double expected_payment = 0.0;
    bool feasible = false;
};

// Worker's maximal surplus under `w` and the set of maximizing action
// indices (ties within kMoneyTol).
std::pair<double, std::vector<std::size_t>> worker_best_actions(const Contract& w,
                                                                const Technology& t);

// Cheapest contract allowed by `r` that implements action `idx`: minimizes
// the expected payment subject to the worker's incentive and participation
// constraints (enforced weakly at kMoneyTol), limited liability and the
// regulation. LinearFamily kinds enumerate slopes; ImageConstrained kinds
// enumerate interval combinations and require at most 3 grid levels
// (UnsupportedInput otherwise). Infeasibility comes back as feasible=false.
ImplementationResult min_cost_implementation(const Technology& t, const Regulation& r,
                                             std::size_t idx);

// Profit-maximizing choice over all implementable actions; the firm exits
// whenever the best profit is <= kMoneyTol. Ties break to the lowest action
// index.
EquilibriumOutcome firm_best_response(const Technology& t, const Regulation& r);

// Among all profit-maximal pairs (within kMoneyTol), the one minimizing
// profit + alpha * worker_surplus, i.e. the equilibrium selection that is
// worst for the regulator. Exit (at zero profit) is part of the candidate
// set. Deterministic: ties break to the lowest action index.
EquilibriumOutcome worst_case_equilibrium(const Technology& t, const Regulation& r,
                                          const Params& p);

}  // namespace regretforge
