#pragma once

#include <cstdint>
#include <cstddef>

#include "regretforge/types.hpp"

namespace regretforge {

// Deterministic splitmix64 stream; identical output on every platform.
struct Rng {
    std::uint64_t state = 0;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next_u64();
    double next_unit();  // in [0, 1)
    double uniform(double lo, double hi);
    std::size_t uniform_index(std::size_t n);  // in [0, n)
};

struct ValueRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct SearchConfig {
    std::uint64_t seed = 0;
    std::size_t budget = 1;
    std::size_t max_actions = 1;
    ValueRange k_range{0.0, 0.0};
    ValueRange mean_range{0.0, 0.0};
    double grid_top = 1.0;

    void validate(const Params& p) const;
};

// Single zero-cost action producing y' for sure, with production cost k.
// The firm stays out whenever k exceeds y' minus the floor at y'.
Technology construct_single_action(double yprime, double k);

// Binary actions on {0, y'} whose cost curve makes every implementation
// yield the firm at most zero profit under any regulation paying at least
// `wbar_at_yprime` at y'. Costs follow the chord-anchored recursion
//   e_{j} = e_{j-1} + (i_j - k) / i_j * (i_j - i_{j-1}),   e at the bottom = 0,
// the discrete counterpart of de/di = (i - k)/i, so the zero-profit cap is
// exact on the finite action set. Means are uniform on [k y'/(y'-w), y'].
Technology construct_no_production_curve(double wbar_at_yprime, double yprime, double k, int n);

// Production cost maximizing the no-production regret:
// e^{(2w - y')/(y' - w)} (y' - w).
double optimal_k_no_production(double wbar, double yprime);

// Zero-cost binary actions on {0, y'} whose cost curve caps every
// implementation at profit (1 - w/y') * muF, with the bottom action costing
// exactly (w/y') * muF so the floor contract extracts the whole surplus.
// Chord-anchored like the no-production curve; means uniform on [muF, y'].
Technology construct_extraction_curve(double wbar_at_yprime, double yprime, double muF, int n);

// Bottom mean maximizing the extraction regret: y' e^{-1/alpha}.
double optimal_extraction_mean(const Params& p, double yprime);

// Three-step transform for piece-rate regulations and positive-profit
// technologies: zero the production cost and shift effort costs by the
// equilibrium worker surplus, append the floor-binding binary action, then
// replace every distribution by the binary one with the same mean. The
// result is binary, has k = 0, and weakly larger regret.
Technology binarize_and_normalize(const Technology& t, const Regulation& r, const Params& p);

// A counterexample technology plus the regulation it defeats.
struct ViolationWitness {
    Technology tech;
    Regulation regulation;
    double expected_regret = 0.0;  // closed-form target for the engine value
    double margin = 0.0;           // expected_regret - rbar, strictly positive
};

// For a minimum guarantee w at output y' outside the optimal band, a
// technology supported on {0, y'} whose regret under the violating
// minimum-contract regulation exceeds rbar by a positive margin. Throws
// std::invalid_argument when (y', w) is inside the band and
// UnsupportedInput for high floors below ybar that no single-support
// construction can certify.
ViolationWitness construct_band_violation(double yprime, double w_at_yprime, const Params& p,
                                          int n);

// For a contract hole paying (w1, w2) at outputs (y1, y2) with
// p y1 + (1-p) y2 = ybar and p w1 + (1-p) w2 < ell_star * ybar, an
// extraction-style technology of three-point actions on {0, y1, y2} that
// rides the cheap mixture: regret approaches
// alpha e^{-1/alpha} (1 - lbar) ybar with lbar = (p w1 + (1-p) w2)/ybar.
ViolationWitness construct_gaming_violation(double y1, double w1, double y2, double w2,
                                            double p_mix, const Params& p, int n);

// For an uncovered payment interval (w1, w2) within
// [ell_star y', (1 - rho_star) y'] at some y' >= ybar, the no-production
// curve with its cost slope flattened to w1/y' + eps across the gap; the
// flattening saves effort at the top and lifts the regret strictly above
// rbar while production stays unprofitable.
ViolationWitness construct_flexibility_violation(double yprime, double w1, double w2,
                                                 const Params& p, double eps, int n);

// k uniform in k_range, 1..max_actions binary actions on {0, grid_top} with
// means in mean_range and costs uniform in [0, mean].
Technology random_binary_technology(const SearchConfig& cfg, Rng& rng);

struct SearchResult {
    Technology best;
    double regret = 0.0;
    std::size_t best_index = 0;    // candidate index (constructions first)
    std::size_t evaluations = 0;
    // Provenance for reproducibility.
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t hill_climb_starts = 0;
    int hill_climb_rounds = 0;
    double hill_climb_shrink = 0.0;
};

// Certifies the worst-case regret of `r` by bounded search: the seeded
// closed-form constructions (no-production at k*, extraction at the optimal
// bottom mean, single action near the exit threshold) are evaluated first,
// then cfg.budget random binary technologies, then the best 1% are refined
// by coordinate perturbation with geometrically shrinking steps. Candidate
// evaluation parallelizes across the thread budget; the reduction is by
// (regret, earliest candidate index), so results do not depend on thread
// count.
SearchResult adversarial_search(const Regulation& r, const Params& p, const SearchConfig& cfg);

}  // namespace regretforge
