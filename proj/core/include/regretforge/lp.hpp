#pragma once

#include <cstddef>
#include <vector>

namespace regretforge {

enum class RowSense { Le, Ge, Eq };

struct LpRow {
    std::vector<double> coeffs;
    RowSense sense = RowSense::Le;
    double rhs = 0.0;
};

// Dense LP with closed variable bounds. Upper bounds may be +infinity;
// lower bounds must be finite.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<LpRow> rows;
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t num_vars() const { return objective.size(); }
};

enum class LpSense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double value = 0.0;
};

// Deterministic dense solver: fixed variables and single-variable problems
// are resolved by interval arithmetic, everything else by a two-phase
// tableau simplex with Bland's rule. Never throws for infeasible or
// unbounded inputs; those come back as statuses.
LpSolution solve_lp(const LinearProgram& lp, LpSense sense);

}  // namespace regretforge
