#include "regretforge/regret.hpp"

#include "regretforge/firm.hpp"
#include "regretforge/regulator.hpp"

namespace regretforge {

RegretReport regret(const Technology& t, const Regulation& r, const Params& p) {
    RegretReport rep;
    rep.full_info_value = full_info_value(t, p);
    EquilibriumOutcome eq = worst_case_equilibrium(t, r, p);
    rep.participated = eq.participated;
    rep.profit = eq.profit;
    rep.worker_surplus = eq.worker_surplus;
    rep.regret = rep.full_info_value - (rep.profit + p.alpha * rep.worker_surplus);
    return rep;
}

}  // namespace regretforge
