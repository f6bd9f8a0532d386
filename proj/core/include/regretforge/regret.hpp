#pragma once

#include "regretforge/types.hpp"

namespace regretforge {

struct RegretReport {
    double full_info_value = 0.0;
    double profit = 0.0;
    double worker_surplus = 0.0;
    bool participated = false;
    double regret = 0.0;
};

// Regret of regulation `r` against technology `t`: the full-information
// value minus the regulator's payoff at the worst equilibrium of the
// contracting game. Reported with its decomposition.
RegretReport regret(const Technology& t, const Regulation& r, const Params& p);

}  // namespace regretforge
