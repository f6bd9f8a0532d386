#pragma once

#include <cstddef>

#include "regretforge/firm.hpp"
#include "regretforge/types.hpp"

namespace regretforge {

// Most generous implementation of action `idx` over the unregulated
// contract space: maximizes the expected payment subject to worker
// incentive/participation constraints and the firm's participation
// constraint E[y - w] - k >= 0. Infeasibility comes back as feasible=false.
ImplementationResult max_transfer_implementation(const Technology& t, std::size_t idx);

// Full-information value of the regulator: the best weighted payoff
// profit + alpha * worker_surplus attainable with a known technology,
// including the outside option 0. Never reads a regulation.
double full_info_value(const Technology& t, const Params& p);

}  // namespace regretforge
