#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "regretforge/types.hpp"

namespace regretforge {

// Piecewise-linear function through hull knots, evaluable on [front, back].
struct PiecewiseLinear {
    std::vector<double> xs;
    std::vector<double> ys;

    double operator()(double x) const;  // throws std::domain_error outside range
};

// Greatest convex minorant through the point set. Points need distinct x
// values and must include x = 0. Throws std::invalid_argument on empty input.
PiecewiseLinear lower_convex_envelope(std::vector<std::pair<double, double>> points);

struct BandViolation {
    double y = 0.0;
    double w = 0.0;  // offending minimum guarantee at y
};

struct GamingWitness {
    double y = 0.0;   // probe where the envelope dips below ell_star * y
    double y1 = 0.0;  // mixture endpoints straddling y
    double y2 = 0.0;
    double p = 0.0;        // p*y1 + (1-p)*y2 = y
    double envelope = 0.0; // envelope value at y
};

struct FlexibilityGap {
    double y = 0.0;
    double lo = 0.0;  // first uncovered sub-interval of [l* y, (1-rho*) y]
    double hi = 0.0;
};

struct NecessityReport {
    bool band_ok = true;
    std::optional<BandViolation> band_violation;
    bool gaming_ok = true;
    std::optional<GamingWitness> gaming_witness;
    bool flexibility_ok = true;
    std::optional<FlexibilityGap> flexibility_gap;
    double ell_star = 0.0;
    double rho_star = 0.0;
    std::size_t probe_count = 0;  // finite verification: resolution is part of the report
    double probe_max = 0.0;
};

// Default probe grid: n points on [0, 2*ybar] (always includes ybar).
std::vector<double> default_probe(const Params& p, std::size_t n = 200);

// Checks the three necessary conditions for optimality on the probe set:
// the minimum-guarantee band, robustness of the minimal selection to convex
// gaming above ybar, and interval coverage of the regulation's image up to
// the (1 - rho*) profit-share line. Grid-bound regulations are probed on
// their own levels.
NecessityReport necessity_check(const Regulation& r, const Params& p,
                                const std::vector<double>& y_probe);

struct AlphaSweepRow {
    double alpha = 0.0;
    double ell_star = 0.0;
    double rbar = 0.0;
    double branch_no_production = 0.0;
    double branch_extraction = 0.0;
};

// Comparative statics over alpha; the ell_star column is weakly increasing.
std::vector<AlphaSweepRow> sweep_alpha(const std::vector<double>& alphas, double ybar);

}  // namespace regretforge
