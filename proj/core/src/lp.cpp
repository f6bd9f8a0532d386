#include "regretforge/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace regretforge {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kFeasTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Minimization {
    std::vector<double> c;
    std::vector<LpRow> rows;
    std::vector<double> lo, hi;
};

// Interval reduction for a single remaining variable. Returns the solution
// in the *original* variable.
LpSolution solve_single_var(const Minimization& m, std::size_t j,
                            const std::vector<double>& fixed, double fixed_cost) {
    double lo = m.lo[j];
    double hi = m.hi[j];
    for (const LpRow& row : m.rows) {
        double a = row.coeffs[j];
        double b = row.rhs;
        for (std::size_t v = 0; v < fixed.size(); ++v) {
            if (v != j) b -= row.coeffs[v] * fixed[v];
        }
        if (std::abs(a) <= kPivotTol) {
            bool ok = true;
            if (row.sense == RowSense::Le) ok = 0.0 <= b + kFeasTol;
            if (row.sense == RowSense::Ge) ok = 0.0 >= b - kFeasTol;
            if (row.sense == RowSense::Eq) ok = std::abs(b) <= kFeasTol;
            if (!ok) return {LpStatus::Infeasible, {}, 0.0};
            continue;
        }
        switch (row.sense) {
            case RowSense::Le:
                if (a > 0.0) hi = std::min(hi, b / a);
                else lo = std::max(lo, b / a);
                break;
            case RowSense::Ge:
                if (a > 0.0) lo = std::max(lo, b / a);
                else hi = std::min(hi, b / a);
                break;
            case RowSense::Eq:
                lo = std::max(lo, b / a);
                hi = std::min(hi, b / a);
                break;
        }
    }
    if (lo > hi) {
        if (lo - hi > kFeasTol) return {LpStatus::Infeasible, {}, 0.0};
        double mid = std::isfinite(hi) ? 0.5 * (lo + hi) : lo;
        lo = hi = mid;
    }
    double cj = m.c[j];
    double x;
    if (cj > 0.0 || (cj == 0.0)) {
        x = lo;
    } else {
        if (!std::isfinite(hi)) return {LpStatus::Unbounded, {}, 0.0};
        x = hi;
    }
    std::vector<double> full = fixed;
    full[j] = x;
    return {LpStatus::Optimal, full, fixed_cost + cj * x};
}

// Two-phase dense tableau simplex with Bland's rule on the free variables
// (already shifted to x >= 0, finite upper bounds turned into rows).
LpSolution simplex(const std::vector<double>& c, std::vector<std::vector<double>> a,
                   std::vector<RowSense> sense, std::vector<double> b) {
    const std::size_t n = c.size();
    const std::size_t m = a.size();

    // Normalize every row to rhs >= 0.
    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0.0) {
            for (double& v : a[i]) v = -v;
            b[i] = -b[i];
            if (sense[i] == RowSense::Le) sense[i] = RowSense::Ge;
            else if (sense[i] == RowSense::Ge) sense[i] = RowSense::Le;
        }
    }

    // Columns: n structural, then one slack/surplus per inequality row, then
    // artificials for Ge/Eq rows.
    std::size_t n_slack = 0, n_art = 0;
    for (RowSense s : sense) {
        if (s != RowSense::Eq) ++n_slack;
        if (s != RowSense::Le) ++n_art;
    }
    const std::size_t width = n + n_slack + n_art;
    std::vector<std::vector<double>> tab(m, std::vector<double>(width + 1, 0.0));
    std::vector<std::size_t> basis(m);

    std::size_t slack_at = n, art_at = n + n_slack;
    std::vector<bool> is_art(width, false);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][width] = b[i];
        if (sense[i] == RowSense::Le) {
            tab[i][slack_at] = 1.0;
            basis[i] = slack_at++;
        } else if (sense[i] == RowSense::Ge) {
            tab[i][slack_at] = -1.0;
            ++slack_at;
            tab[i][art_at] = 1.0;
            is_art[art_at] = true;
            basis[i] = art_at++;
        } else {
            tab[i][art_at] = 1.0;
            is_art[art_at] = true;
            basis[i] = art_at++;
        }
    }

    std::vector<double> cost(width + 1, 0.0);
    auto pivot = [&](std::size_t prow, std::size_t pcol) {
        double piv = tab[prow][pcol];
        for (double& v : tab[prow]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == prow) continue;
            double f = tab[i][pcol];
            if (std::abs(f) <= kPivotTol) continue;
            for (std::size_t j = 0; j <= width; ++j) tab[i][j] -= f * tab[prow][j];
        }
        double f = cost[pcol];
        if (std::abs(f) > 0.0) {
            for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * tab[prow][j];
        }
        basis[prow] = pcol;
    };

    auto run = [&](std::size_t col_limit) -> bool {
        // Returns false on unbounded.
        const std::size_t max_iters = 2000 + 200 * (m + width);
        for (std::size_t iter = 0; iter < max_iters; ++iter) {
            // Bland: smallest-index column with negative reduced cost.
            std::size_t enter = width;
            for (std::size_t j = 0; j < col_limit; ++j) {
                if (cost[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == width) return true;
            // Ratio test; ties broken by smallest basic variable index.
            std::size_t leave = m;
            double best = kInf;
            for (std::size_t i = 0; i < m; ++i) {
                if (tab[i][enter] > kPivotTol) {
                    double ratio = tab[i][width] / tab[i][enter];
                    if (ratio < best - kPivotTol ||
                        (ratio < best + kPivotTol && (leave == m || basis[i] < basis[leave]))) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
        throw std::logic_error("simplex iteration limit reached");
    };

    if (n_art > 0) {
        // Phase 1: minimize the sum of artificials. Artificials never
        // re-enter, so restricting the entering columns is sound.
        for (std::size_t j = 0; j < width; ++j) {
            if (is_art[j]) cost[j] = 1.0;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (is_art[basis[i]]) {
                for (std::size_t j = 0; j <= width; ++j) cost[j] -= tab[i][j];
            }
        }
        if (!run(n + n_slack)) throw std::logic_error("phase-1 simplex reported unbounded");
        double art_sum = -cost[width];
        if (art_sum > kFeasTol * (1.0 + std::abs(art_sum))) {
            return {LpStatus::Infeasible, {}, 0.0};
        }
        // Drive leftover artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (!is_art[basis[i]]) continue;
            std::size_t pcol = width;
            for (std::size_t j = 0; j < n + n_slack; ++j) {
                if (std::abs(tab[i][j]) > 1e-9) {
                    pcol = j;
                    break;
                }
            }
            if (pcol != width) pivot(i, pcol);
        }
    }

    // Phase 2 objective.
    std::fill(cost.begin(), cost.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < width && std::abs(cost[basis[i]]) > 0.0) {
            double f = cost[basis[i]];
            for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * tab[i][j];
        }
    }
    // Keep artificials out: restrict entering columns to structural + slack.
    if (!run(n + n_slack)) return {LpStatus::Unbounded, {}, 0.0};

    std::vector<double> x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = tab[i][width];
    }
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) value += c[j] * x[j];
    return {LpStatus::Optimal, x, value};
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, LpSense sense) {
    const std::size_t n = lp.num_vars();
    if (lp.lower.size() != n || lp.upper.size() != n) {
        throw std::invalid_argument("bounds are misaligned with the objective");
    }
    for (const LpRow& row : lp.rows) {
        if (row.coeffs.size() != n) {
            throw std::invalid_argument("constraint row has inconsistent dimension");
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(lp.lower[j])) {
            throw std::invalid_argument("lower bounds must be finite");
        }
        if (lp.upper[j] < lp.lower[j]) return {LpStatus::Infeasible, {}, 0.0};
    }

    Minimization m;
    m.c = lp.objective;
    if (sense == LpSense::Maximize) {
        for (double& v : m.c) v = -v;
    }
    m.rows = lp.rows;
    m.lo = lp.lower;
    m.hi = lp.upper;

    // Fixed variables drop out of the problem.
    std::vector<std::size_t> free_vars;
    std::vector<double> fixed(n, 0.0);
    double fixed_cost = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.hi[j] - m.lo[j] <= 1e-15) {
            fixed[j] = m.lo[j];
            fixed_cost += m.c[j] * m.lo[j];
        } else {
            free_vars.push_back(j);
        }
    }

    LpSolution sol;
    if (free_vars.empty()) {
        bool ok = true;
        for (const LpRow& row : m.rows) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * fixed[j];
            if (row.sense == RowSense::Le && lhs > row.rhs + kFeasTol) ok = false;
            if (row.sense == RowSense::Ge && lhs < row.rhs - kFeasTol) ok = false;
            if (row.sense == RowSense::Eq && std::abs(lhs - row.rhs) > kFeasTol) ok = false;
            if (!ok) break;
        }
        sol = ok ? LpSolution{LpStatus::Optimal, fixed, fixed_cost}
                 : LpSolution{LpStatus::Infeasible, {}, 0.0};
    } else if (free_vars.size() == 1) {
        sol = solve_single_var(m, free_vars[0], fixed, fixed_cost);
    } else {
        // Shift to x >= 0 and hand the free block to the simplex.
        const std::size_t k = free_vars.size();
        std::vector<double> c(k);
        for (std::size_t jj = 0; jj < k; ++jj) c[jj] = m.c[free_vars[jj]];
        std::vector<std::vector<double>> a;
        std::vector<RowSense> senses;
        std::vector<double> b;
        for (const LpRow& row : m.rows) {
            std::vector<double> coeff(k);
            double rhs = row.rhs;
            for (std::size_t j = 0; j < n; ++j) {
                if (m.hi[j] - m.lo[j] <= 1e-15) rhs -= row.coeffs[j] * fixed[j];
            }
            for (std::size_t jj = 0; jj < k; ++jj) {
                std::size_t j = free_vars[jj];
                coeff[jj] = row.coeffs[j];
                rhs -= row.coeffs[j] * m.lo[j];
            }
            a.push_back(std::move(coeff));
            senses.push_back(row.sense);
            b.push_back(rhs);
        }
        for (std::size_t jj = 0; jj < k; ++jj) {
            std::size_t j = free_vars[jj];
            if (std::isfinite(m.hi[j])) {
                std::vector<double> coeff(k, 0.0);
                coeff[jj] = 1.0;
                a.push_back(std::move(coeff));
                senses.push_back(RowSense::Le);
                b.push_back(m.hi[j] - m.lo[j]);
            }
        }
        LpSolution inner = simplex(c, std::move(a), std::move(senses), std::move(b));
        if (inner.status != LpStatus::Optimal) {
            sol = inner;
        } else {
            std::vector<double> x = fixed;
            double value = fixed_cost;
            for (std::size_t jj = 0; jj < k; ++jj) {
                std::size_t j = free_vars[jj];
                x[j] = m.lo[j] + inner.x[jj];
                value += m.c[j] * inner.x[jj];
            }
            sol = {LpStatus::Optimal, std::move(x), value};
        }
    }

    if (sol.status == LpStatus::Optimal) {
        // Clamp pivot noise back into the box.
        for (std::size_t j = 0; j < n; ++j) {
            sol.x[j] = std::min(std::max(sol.x[j], lp.lower[j]), lp.upper[j]);
        }
        double value = 0.0;
        for (std::size_t j = 0; j < n; ++j) value += lp.objective[j] * sol.x[j];
        sol.value = value;
    } else if (sense == LpSense::Maximize) {
        sol.value = 0.0;
    }
    return sol;
}

}  // namespace regretforge
