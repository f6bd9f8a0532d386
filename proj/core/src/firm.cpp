#include "regretforge/firm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regretforge/lp.hpp"

namespace regretforge {

namespace {

void check_regulation_grid(const Technology& t, const Regulation& r) {
    if (r.grid_bound() && !r.grid.same_levels(t.grid)) {
        throw std::invalid_argument("technology grid does not match the regulation grid");
    }
}

// Incentive rows (against every other action) plus the participation row,
// both relaxed by kMoneyTol.
void add_worker_rows(LinearProgram& lp, const Technology& t, std::size_t idx) {
    const std::size_t m = t.grid.size();
    const Action& a = t.actions[idx];
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
    LpRow ir;
    ir.coeffs = a.probs;
    ir.sense = RowSense::Ge;
    ir.rhs = a.effort - kMoneyTol;
    lp.rows.push_back(std::move(ir));
}

ImplementationResult min_cost_linear_family(const Technology& t, const Regulation& r,
                                            std::size_t idx) {
    std::vector<double> slopes = r.slopes;
    std::sort(slopes.begin(), slopes.end());
    const Action& a = t.actions[idx];
    const double mu = action_mean(a, t.grid);

    ImplementationResult res;
    res.action_index = idx;
    for (double s : slopes) {
        bool ok = s * mu >= a.effort - kMoneyTol;
        for (std::size_t j = 0; ok && j < t.actions.size(); ++j) {
            if (j == idx) continue;
            double mu_j = action_mean(t.actions[j], t.grid);
            ok = s * mu - a.effort >= s * mu_j - t.actions[j].effort - kMoneyTol;
        }
        if (ok) {
            res.feasible = true;
            res.contract.payments.resize(t.grid.size());
            for (std::size_t k = 0; k < t.grid.size(); ++k) {
                res.contract.payments[k] = s * t.grid.levels[k];
            }
            res.expected_payment = s * mu;
            return res;
        }
    }
    return res;
}

ImplementationResult min_cost_image(const Technology& t, const Regulation& r, std::size_t idx) {
    const std::size_t m = t.grid.size();
    if (m > 3) {
        throw UnsupportedInput(
            "image-constrained implementation supports at most 3 grid levels");
    }
    std::vector<std::size_t> pick(m, 0);
    ImplementationResult best;
    best.action_index = idx;
    double best_payment = std::numeric_limits<double>::infinity();
    for (;;) {
        LinearProgram lp;
        lp.objective = t.actions[idx].probs;
        lp.lower.resize(m);
        lp.upper.resize(m);
        for (std::size_t k = 0; k < m; ++k) {
            const PaymentInterval& iv = r.image[k][pick[k]];
            lp.lower[k] = std::max(0.0, iv.lo);
            lp.upper[k] = std::min(t.grid.levels[k], iv.hi);
        }
        add_worker_rows(lp, t, idx);
        LpSolution sol = solve_lp(lp, LpSense::Minimize);
        if (sol.status == LpStatus::Optimal && sol.value < best_payment - kMoneyTol) {
            best_payment = sol.value;
            best.feasible = true;
            best.contract.payments = sol.x;
            best.expected_payment = sol.value;
        }
        // Advance the interval combination, first level fastest.
        std::size_t k = 0;
        while (k < m) {
            if (++pick[k] < r.image[k].size()) break;
            pick[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    return best;
}

}  // namespace

std::pair<double, std::vector<std::size_t>> worker_best_actions(const Contract& w,
                                                                const Technology& t) {
    if (w.payments.size() != t.grid.size()) {
        throw std::invalid_argument("contract is misaligned with the technology grid");
    }
    double best = -std::numeric_limits<double>::infinity();
    std::vector<double> payoff(t.actions.size());
    for (std::size_t j = 0; j < t.actions.size(); ++j) {
        double v = -t.actions[j].effort;
        for (std::size_t k = 0; k < t.grid.size(); ++k) {
            v += t.actions[j].probs[k] * w.payments[k];
        }
        payoff[j] = v;
        best = std::max(best, v);
    }
    std::vector<std::size_t> argmax;
    for (std::size_t j = 0; j < payoff.size(); ++j) {
        if (payoff[j] >= best - kMoneyTol) argmax.push_back(j);
    }
    return {best, argmax};
}

ImplementationResult min_cost_implementation(const Technology& t, const Regulation& r,
                                             std::size_t idx) {
    if (idx >= t.actions.size()) throw std::invalid_argument("action index out of range");
    check_regulation_grid(t, r);
    r.validate();

    if (r.kind == RegulationKind::LinearFamily) return min_cost_linear_family(t, r, idx);
    if (r.kind == RegulationKind::ImageConstrained) return min_cost_image(t, r, idx);

    const std::size_t m = t.grid.size();
    LinearProgram lp;
    lp.objective = t.actions[idx].probs;
    lp.lower.resize(m);
    lp.upper.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        double floor = 0.0;
        if (r.kind == RegulationKind::MinimumPieceRate) floor = r.ell * t.grid.levels[k];
        if (r.kind == RegulationKind::MinimumContract) floor = std::max(0.0, r.floor[k]);
        lp.lower[k] = std::min(floor, t.grid.levels[k]);
        lp.upper[k] = t.grid.levels[k];
    }
    add_worker_rows(lp, t, idx);

    ImplementationResult res;
    res.action_index = idx;
    LpSolution sol = solve_lp(lp, LpSense::Minimize);
    if (sol.status == LpStatus::Optimal) {
        res.feasible = true;
        res.contract.payments = sol.x;
        res.expected_payment = sol.value;
    }
    return res;
}

EquilibriumOutcome firm_best_response(const Technology& t, const Regulation& r) {
    double best_profit = 0.0;
    std::optional<std::size_t> best_idx;
    ImplementationResult best_impl;
    for (std::size_t a = 0; a < t.actions.size(); ++a) {
        ImplementationResult impl = min_cost_implementation(t, r, a);
        if (!impl.feasible) continue;
        double profit = action_mean(t.actions[a], t.grid) - t.k - impl.expected_payment;
        if (!best_idx || profit > best_profit) {
            best_profit = profit;
            best_idx = a;
            best_impl = std::move(impl);
        }
    }
    EquilibriumOutcome out;
    if (!best_idx || best_profit <= kMoneyTol) {
        return out;  // adversarial exit at (weakly) zero profit
    }
    out.participated = true;
    out.action_index = best_idx;
    out.contract = best_impl.contract;
    out.profit = best_profit;
    out.worker_surplus = best_impl.expected_payment - t.actions[*best_idx].effort;
    return out;
}

EquilibriumOutcome worst_case_equilibrium(const Technology& t, const Regulation& r,
                                          const Params& p) {
    p.validate();
    struct Candidate {
        std::size_t idx;
        double profit;
        double surplus;
        Contract contract;
    };
    std::vector<Candidate> feasible;
    double max_profit = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < t.actions.size(); ++a) {
        ImplementationResult impl = min_cost_implementation(t, r, a);
        if (!impl.feasible) continue;
        double profit = action_mean(t.actions[a], t.grid) - t.k - impl.expected_payment;
        double surplus = impl.expected_payment - t.actions[a].effort;
        feasible.push_back({a, profit, surplus, std::move(impl.contract)});
        max_profit = std::max(max_profit, profit);
    }
    EquilibriumOutcome out;
    if (feasible.empty() || max_profit <= kMoneyTol) {
        return out;  // exit is the regulator-worst equilibrium at zero profit
    }
    // Candidates run in action-index order, so a strict comparison makes the
    // lowest index win exact ties.
    const Candidate* worst = nullptr;
    double worst_payoff = std::numeric_limits<double>::infinity();
    for (const Candidate& c : feasible) {
        if (c.profit < max_profit - kMoneyTol) continue;
        double payoff = c.profit + p.alpha * c.surplus;
        if (payoff < worst_payoff) {
            worst_payoff = payoff;
            worst = &c;
        }
    }
    out.participated = true;
    out.action_index = worst->idx;
    out.contract = worst->contract;
    out.profit = worst->profit;
    out.worker_surplus = worst->surplus;
    return out;
}

}  // namespace regretforge
