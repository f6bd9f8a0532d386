#pragma once

#include <functional>
#include <span>

namespace regretforge {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section refinement to interval width `tol`, then the result is
// compared against both endpoints and every caller-supplied candidate that
// falls inside [lo, hi]; the best point wins (ties to the earlier probe).
// Does not assume unimodality: exact optima must be passed as candidates to
// be found exactly. Throws std::invalid_argument on lo > hi or tol <= 0 and
// std::domain_error if f returns NaN.
ScalarMinimum minimize_1d(const std::function<double(double)>& f, double lo, double hi,
                          double tol, std::span<const double> candidates = {});

}  // namespace regretforge
