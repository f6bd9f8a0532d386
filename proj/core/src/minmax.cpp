#include "regretforge/minmax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "regretforge/minimize.hpp"

namespace regretforge {

double piece_rate_star(double alpha) {
    if (alpha < 1.0) throw std::invalid_argument("alpha must be >= 1");
    return (alpha - 1.0) / (2.0 * alpha - 1.0);
}

double rho_star(double alpha) {
    return std::exp(-1.0 / alpha) * (1.0 - piece_rate_star(alpha));
}

double branch_no_production(double ell, const Params& p) {
    p.validate();
    if (ell < 0.0 || ell >= 1.0) {
        throw std::invalid_argument("no-production branch needs ell in [0, 1)");
    }
    return p.alpha * std::exp((2.0 * ell - 1.0) / (1.0 - ell)) * (1.0 - ell) * p.ybar;
}

double branch_extraction(double ell, const Params& p) {
    p.validate();
    if (ell < 0.0 || ell > 1.0) {
        throw std::invalid_argument("extraction branch needs ell in [0, 1]");
    }
    return p.alpha * std::exp(-1.0 / p.alpha) * (1.0 - ell) * p.ybar;
}

MinmaxResult optimal_mpr(const Params& p) {
    p.validate();
    MinmaxResult res;
    res.ell_star = piece_rate_star(p.alpha);
    res.rbar = p.alpha * p.alpha * std::exp(-1.0 / p.alpha) * p.ybar / (2.0 * p.alpha - 1.0);
    res.branch_no_production = branch_no_production(res.ell_star, p);
    res.branch_extraction = branch_extraction(res.ell_star, p);
    return res;
}

MinmaxResult optimal_mpr_numeric(const Params& p, double tol) {
    p.validate();
    auto objective = [&](double ell) {
        return std::max(branch_no_production(ell, p), branch_extraction(ell, p));
    };
    const double candidates[] = {piece_rate_star(p.alpha)};
    ScalarMinimum best = minimize_1d(objective, 0.0, 0.5, std::min(tol, 1e-9), candidates);
    MinmaxResult res;
    res.ell_star = best.x;
    res.rbar = best.value;
    res.branch_no_production = branch_no_production(best.x, p);
    res.branch_extraction = branch_extraction(best.x, p);
    return res;
}

void KnowledgeBox::validate(const Params& p) const {
    if (!(k_lo >= 0.0) || !(k_hi >= k_lo) || !(k_hi > 0.0)) {
        throw std::invalid_argument("knowledge box needs 0 <= k_lo <= k_hi and k_hi > 0");
    }
    if (!(y_lo >= 0.0) || !(y_lo < p.ybar)) {
        throw std::invalid_argument("knowledge box needs 0 <= y_lo < ybar");
    }
}

namespace {

// Regret from deterring a technology with production cost k whose means are
// clamped below at y_lo; the cost shift y_lo applies when the cost cap
// cannot prevent production on its own.
double no_hire_value(double k, double ell, const Params& p, const KnowledgeBox& box) {
    double bottom = std::max(k / (1.0 - ell), box.y_lo);
    if (bottom <= 1e-300 || k <= 0.0) return 0.0;
    double shift = ((1.0 - ell) * box.y_lo > box.k_hi) ? box.y_lo : 0.0;
    return p.alpha * (bottom - k - k * std::log(bottom / p.ybar) - shift);
}

double extraction_value(double y, double ell, const Params& p, const KnowledgeBox& box) {
    double log_term = (y <= 1e-300) ? 0.0 : p.alpha * (1.0 - ell) * y * std::log(p.ybar / y);
    return log_term + (p.alpha - 1.0) * ((1.0 - ell) * y - box.k_lo);
}

}  // namespace

ConstrainedBranches constrained_branches(double ell, const Params& p, const KnowledgeBox& box) {
    p.validate();
    box.validate(p);
    if (ell < 0.0 || ell >= 1.0) {
        throw std::invalid_argument("constrained branches need ell in [0, 1)");
    }
    ConstrainedBranches out;

    // Single-action exit: alpha * l * y for means up to the exit threshold.
    double cap = std::min(box.k_hi / (1.0 - ell), p.ybar);
    out.single_action = (cap >= box.y_lo) ? p.alpha * ell * cap : 0.0;

    // Deterred-production curve over k in [k_lo, k_hi].
    {
        auto neg = [&](double k) { return -no_hire_value(k, ell, p, box); };
        double k_interior = std::exp((2.0 * ell - 1.0) / (1.0 - ell)) * (1.0 - ell) * p.ybar;
        const double candidates[] = {std::clamp(k_interior, box.k_lo, box.k_hi),
                                     std::clamp((1.0 - ell) * box.y_lo, box.k_lo, box.k_hi)};
        ScalarMinimum best = minimize_1d(neg, box.k_lo, box.k_hi, 1e-10, candidates);
        out.no_hire = std::max(0.0, -best.value);
    }

    // Surplus-extraction curve over the implemented mean.
    {
        double y_lo = std::max(box.k_lo / (1.0 - ell), box.y_lo);
        if (y_lo <= p.ybar) {
            auto neg = [&](double y) { return -extraction_value(y, ell, p, box); };
            const double candidates[] = {
                std::clamp(p.ybar * std::exp(-1.0 / p.alpha), y_lo, p.ybar)};
            ScalarMinimum best = minimize_1d(neg, y_lo, p.ybar, 1e-10, candidates);
            out.extraction = std::max(0.0, -best.value);
        }
    }
    return out;
}

MinmaxResult optimal_mpr_constrained(const Params& p, const KnowledgeBox& box, double tol) {
    p.validate();
    box.validate(p);
    auto objective = [&](double ell) {
        ConstrainedBranches b = constrained_branches(ell, p, box);
        return std::max({b.single_action, b.no_hire, b.extraction});
    };
    const double hi = 1.0 - 1e-9;
    // Coarse scan seeds the refinement; the objective need not be unimodal.
    double scan_best_x = 0.0;
    double scan_best_v = objective(0.0);
    for (int i = 1; i <= 128; ++i) {
        double x = hi * static_cast<double>(i) / 128.0;
        double v = objective(x);
        if (v < scan_best_v) {
            scan_best_v = v;
            scan_best_x = x;
        }
    }
    double window = hi / 128.0;
    double lo_ref = std::max(0.0, scan_best_x - window);
    double hi_ref = std::min(hi, scan_best_x + window);
    const double candidates[] = {std::clamp(piece_rate_star(p.alpha), lo_ref, hi_ref),
                                 scan_best_x};
    ScalarMinimum best = minimize_1d(objective, lo_ref, hi_ref, std::min(tol, 1e-9), candidates);

    MinmaxResult res;
    res.ell_star = best.x;
    res.rbar = best.value;
    ConstrainedBranches b = constrained_branches(best.x, p, box);
    res.branch_no_production = b.no_hire;
    res.branch_extraction = b.extraction;
    return res;
}

bool mlrp_geq(const Action& f, const Action& g, const OutputGrid& grid) {
    if (f.probs.size() != grid.size() || g.probs.size() != grid.size()) {
        throw std::invalid_argument("actions are misaligned with the grid");
    }
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (f.probs[k] + g.probs[k] > kProbTol) support.push_back(k);
    }
    for (std::size_t a = 0; a < support.size(); ++a) {
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            std::size_t y = support[a], yp = support[b];
            if (f.probs[yp] * g.probs[y] < g.probs[yp] * f.probs[y] - 1e-12) return false;
        }
    }
    return true;
}

bool fosd_geq(const Action& f, const Action& g, const OutputGrid& grid) {
    if (f.probs.size() != grid.size() || g.probs.size() != grid.size()) {
        throw std::invalid_argument("actions are misaligned with the grid");
    }
    double cf = 0.0, cg = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        cf += f.probs[k];
        cg += g.probs[k];
        if (cf > cg + 1e-12) return false;
    }
    return true;
}

bool technology_in_class(const Technology& t, TechnologyClass cls) {
    std::vector<std::size_t> order(t.actions.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> means(t.actions.size());
    for (std::size_t a = 0; a < t.actions.size(); ++a) {
        means[a] = action_mean(t.actions[a], t.grid);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (t.actions[a].effort != t.actions[b].effort) {
            return t.actions[a].effort < t.actions[b].effort;
        }
        if (means[a] != means[b]) return means[a] < means[b];
        return a < b;
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const Action& low = t.actions[order[i]];
            const Action& high = t.actions[order[j]];
            bool ok = (cls == TechnologyClass::Mlrp) ? mlrp_geq(high, low, t.grid)
                                                     : fosd_geq(high, low, t.grid);
            if (!ok) return false;
        }
    }
    return true;
}

bool technology_in_box(const Technology& t, const KnowledgeBox& box, const Params& p) {
    if (t.k < box.k_lo - kMoneyTol || t.k > box.k_hi + kMoneyTol) return false;
    for (const Action& a : t.actions) {
        double mu = action_mean(a, t.grid);
        if (mu < box.y_lo - kMoneyTol || mu > p.ybar + kMoneyTol) return false;
    }
    return true;
}

}  // namespace regretforge
