#include "regretforge/regulator.hpp"

#include <algorithm>

#include "regretforge/lp.hpp"

namespace regretforge {

ImplementationResult max_transfer_implementation(const Technology& t, std::size_t idx) {
    if (idx >= t.actions.size()) throw std::invalid_argument("action index out of range");
    const std::size_t m = t.grid.size();
    const Action& a = t.actions[idx];

    LinearProgram lp;
    lp.objective = a.probs;
    lp.lower.assign(m, 0.0);
    lp.upper = t.grid.levels;
    for (std::size_t j = 0; j < t.actions.size(); ++j) {
        if (j == idx) continue;
        LpRow row;
        row.coeffs.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            row.coeffs[k] = a.probs[k] - t.actions[j].probs[k];
        }
        row.sense = RowSense::Ge;
        row.rhs = (a.effort - t.actions[j].effort) - kMoneyTol;
        lp.rows.push_back(std::move(row));
    }
    LpRow ir_w;
    ir_w.coeffs = a.probs;
    ir_w.sense = RowSense::Ge;
    ir_w.rhs = a.effort - kMoneyTol;
    lp.rows.push_back(std::move(ir_w));
    // Firm participation: expected payment can eat at most the net revenue.
    LpRow ir_f;
    ir_f.coeffs = a.probs;
    ir_f.sense = RowSense::Le;
    ir_f.rhs = action_mean(a, t.grid) - t.k;
    lp.rows.push_back(std::move(ir_f));

    ImplementationResult res;
    res.action_index = idx;
    LpSolution sol = solve_lp(lp, LpSense::Maximize);
    if (sol.status == LpStatus::Optimal) {
        res.feasible = true;
        res.contract.payments = sol.x;
        res.expected_payment = sol.value;
    }
    return res;
}

double full_info_value(const Technology& t, const Params& p) {
    p.validate();
    double best = 0.0;  // outside option: the regulator may decline to contract
    for (std::size_t a = 0; a < t.actions.size(); ++a) {
        ImplementationResult impl = max_transfer_implementation(t, a);
        if (!impl.feasible) continue;
        double mu = action_mean(t.actions[a], t.grid);
        double transfer = impl.expected_payment;
        double value = (mu - t.k - transfer) + p.alpha * (transfer - t.actions[a].effort);
        best = std::max(best, value);
    }
    return best;
}

}  // namespace regretforge
