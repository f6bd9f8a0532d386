#include "regretforge/adversary.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "regretforge/firm.hpp"
#include "regretforge/minmax.hpp"
#include "regretforge/parallel.hpp"
#include "regretforge/regret.hpp"

namespace regretforge {

std::uint64_t Rng::next_u64() {
    // splitmix64
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::next_unit() { return std::ldexp(static_cast<double>(next_u64() >> 11), -53); }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

std::size_t Rng::uniform_index(std::size_t n) {
    return n == 0 ? 0 : static_cast<std::size_t>(next_unit() * static_cast<double>(n)) % n;
}

void SearchConfig::validate(const Params& p) const {
    p.validate();
    if (budget < 1) throw std::invalid_argument("search budget must be >= 1");
    if (max_actions < 1) throw std::invalid_argument("max_actions must be >= 1");
    if (!(grid_top > 0.0)) throw std::invalid_argument("grid_top must be > 0");
    if (k_range.lo < 0.0 || k_range.hi < k_range.lo) {
        throw std::invalid_argument("k_range must satisfy 0 <= lo <= hi");
    }
    double mean_cap = std::min(grid_top, p.ybar);
    if (mean_range.lo < 0.0 || mean_range.hi < mean_range.lo ||
        mean_range.hi > mean_cap + kMoneyTol) {
        throw std::invalid_argument("mean_range must lie within [0, min(grid_top, ybar)]");
    }
}

namespace {

struct CurvePoint {
    double mean;
    double cost;
};

// Discrete cost curve anchored so that the cheapest contract implementing
// node j pays exactly mean_j - cap: the chord between consecutive nodes
// equals the zero-excess slope (i - cap)/i at the right endpoint. Each step
// carries an extra kMoneyTol so the weakly-relaxed incentive rows cannot
// shave the implementing slope below the chord. Extra nodes can be pinned
// exactly (the flexibility construction needs the gap endpoints on the
// grid).
std::vector<CurvePoint> chord_curve(double cap, double bottom_mean, double top_mean,
                                    double bottom_cost, int n,
                                    const std::vector<double>& pinned = {}) {
    std::vector<double> means;
    if (top_mean - bottom_mean <= 1e-12) {
        means.push_back(bottom_mean);
    } else {
        means.reserve(static_cast<std::size_t>(n) + pinned.size());
        for (int j = 0; j < n; ++j) {
            double v = bottom_mean + (top_mean - bottom_mean) * static_cast<double>(j) /
                                         static_cast<double>(n - 1);
            means.push_back(std::min(v, top_mean));
        }
        means.back() = top_mean;
        for (double v : pinned) {
            if (v > bottom_mean + 1e-12 && v < top_mean - 1e-12) means.push_back(v);
        }
        std::sort(means.begin(), means.end());
        means.erase(std::unique(means.begin(), means.end(),
                                [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                    means.end());
    }
    std::vector<CurvePoint> curve;
    curve.reserve(means.size());
    double cost = bottom_cost;
    curve.push_back({means[0], cost});
    for (std::size_t j = 1; j < means.size(); ++j) {
        cost += (means[j] - cap) / means[j] * (means[j] - means[j - 1]) + kMoneyTol;
        curve.push_back({means[j], cost});
    }
    return curve;
}

Technology binary_curve_technology(double k, double support_top,
                                   const std::vector<CurvePoint>& curve) {
    Technology t;
    t.k = k;
    t.grid = binary_grid(support_top);
    t.actions.reserve(curve.size());
    for (const CurvePoint& cp : curve) {
        t.actions.push_back(binary_action(cp.mean, cp.cost, support_top));
    }
    return t;
}

}  // namespace

Technology construct_single_action(double yprime, double k) {
    if (!(yprime > 0.0) || !(k >= 0.0) || !(k < yprime)) {
        throw std::invalid_argument("single-action construction needs 0 <= k < y'");
    }
    Technology t;
    t.k = k;
    t.grid = binary_grid(yprime);
    t.actions.push_back(binary_action(yprime, 0.0, yprime));
    return t;
}

Technology construct_no_production_curve(double wbar_at_yprime, double yprime, double k, int n) {
    if (!(yprime > 0.0) || wbar_at_yprime < 0.0 || wbar_at_yprime > 0.5 * yprime + kMoneyTol) {
        throw std::invalid_argument("no-production curve needs 0 <= w <= y'/2");
    }
    if (!(k > 0.0) || !(k < yprime - wbar_at_yprime)) {
        throw std::invalid_argument("no-production curve needs 0 < k < y' - w");
    }
    if (n < 2) throw std::invalid_argument("no-production curve needs n >= 2");
    double bottom = yprime * k / (yprime - wbar_at_yprime);
    return binary_curve_technology(k, yprime, chord_curve(k, bottom, yprime, 0.0, n));
}

double optimal_k_no_production(double wbar, double yprime) {
    if (!(yprime > 0.0) || wbar < 0.0 || wbar > 0.5 * yprime + kMoneyTol) {
        throw std::invalid_argument("optimal k needs 0 <= w <= y'/2");
    }
    return std::exp((2.0 * wbar - yprime) / (yprime - wbar)) * (yprime - wbar);
}

Technology construct_extraction_curve(double wbar_at_yprime, double yprime, double muF, int n) {
    if (!(yprime > 0.0) || wbar_at_yprime < 0.0 || wbar_at_yprime > yprime + kMoneyTol) {
        throw std::invalid_argument("extraction curve needs 0 <= w <= y'");
    }
    if (!(muF > 0.0) || !(muF <= yprime + kMoneyTol)) {
        throw std::invalid_argument("extraction curve needs 0 < muF <= y'");
    }
    if (n < 2) throw std::invalid_argument("extraction curve needs n >= 2");
    muF = std::min(muF, yprime);
    double ell = wbar_at_yprime / yprime;
    double cap = (1.0 - ell) * muF;  // profit every implementation is held to
    return binary_curve_technology(0.0, yprime,
                                   chord_curve(cap, muF, yprime, ell * muF, n));
}

double optimal_extraction_mean(const Params& p, double yprime) {
    p.validate();
    if (!(yprime > 0.0)) throw std::invalid_argument("optimal extraction mean needs y' > 0");
    return yprime * std::exp(-1.0 / p.alpha);
}

Technology binarize_and_normalize(const Technology& t, const Regulation& r, const Params& p) {
    if (r.kind != RegulationKind::MinimumPieceRate) {
        throw std::invalid_argument("binarization requires a minimum piece-rate regulation");
    }
    p.validate();
    EquilibriumOutcome eq = worst_case_equilibrium(t, r, p);
    if (!eq.participated || eq.profit <= kMoneyTol) {
        throw std::invalid_argument("binarization requires a positive-profit equilibrium");
    }
    if (r.ell >= 1.0 - 1e-12) {
        throw std::invalid_argument("binarization requires ell < 1");
    }
    const double shifted_profit = eq.profit + t.k;  // profit once k is folded into costs
    // Profit <= (1 - ell) * mean bounds mu_star by ybar up to solver noise.
    const double mu_star = std::min(shifted_profit / (1.0 - r.ell), p.ybar);
    const double shift = std::max(0.0, eq.worker_surplus);  // float noise can dip below 0

    Technology out;
    out.k = 0.0;
    out.grid = binary_grid(p.ybar);
    out.actions.reserve(t.actions.size() + 1);
    for (const Action& a : t.actions) {
        double mu = action_mean(a, t.grid);
        out.actions.push_back(binary_action(mu, a.effort + shift, p.ybar));
    }
    out.actions.push_back(binary_action(mu_star, r.ell * mu_star, p.ybar));
    return out;
}

ViolationWitness construct_band_violation(double yprime, double w_at_yprime, const Params& p,
                                          int n) {
    p.validate();
    if (!(yprime > 0.0) || w_at_yprime < 0.0 || w_at_yprime > yprime + kMoneyTol) {
        throw std::invalid_argument("band violation needs 0 <= w <= y'");
    }
    const double ls = piece_rate_star(p.alpha);
    const double rbar = optimal_mpr(p).rbar;
    const double ell_eff = w_at_yprime / yprime;

    ViolationWitness wit;
    wit.regulation = Regulation::minimum_contract(binary_grid(yprime), {0.0, w_at_yprime});

    if (yprime >= p.ybar - kMoneyTol) {
        // Above ybar the minimum guarantee must equal ls * y exactly.
        if (std::abs(w_at_yprime - ls * yprime) <= kMoneyTol) {
            throw std::invalid_argument("minimum guarantee is inside the optimal band");
        }
        if (w_at_yprime > ls * yprime) {
            // Over-protective floor: deter production entirely.
            if (ell_eff <= 0.5) {
                double k = optimal_k_no_production(ell_eff * p.ybar, p.ybar);
                double bottom = k / (1.0 - ell_eff);
                wit.tech = binary_curve_technology(k, yprime,
                                                   chord_curve(k, bottom, p.ybar, 0.0, n));
                wit.expected_regret = p.alpha * std::exp((2.0 * ell_eff - 1.0) / (1.0 - ell_eff)) *
                                      (1.0 - ell_eff) * p.ybar;
            } else {
                double k = (1.0 - ell_eff) * p.ybar;
                wit.tech = Technology{k, binary_grid(yprime),
                                      {binary_action(p.ybar, 0.0, yprime)}};
                wit.expected_regret = p.alpha * ell_eff * p.ybar;
            }
        } else {
            // Under-protective floor: let the firm extract the surplus.
            double muF = p.ybar * std::exp(-1.0 / p.alpha);
            double cap = (1.0 - ell_eff) * muF;
            wit.tech = binary_curve_technology(
                0.0, yprime, chord_curve(cap, muF, p.ybar, ell_eff * muF, n));
            wit.expected_regret = p.alpha * std::exp(-1.0 / p.alpha) * (1.0 - ell_eff) * p.ybar;
        }
    } else {
        const double band_lo = std::max(0.0, yprime - (1.0 - ls) * p.ybar);
        const double band_hi = std::min(yprime, ls * p.ybar);
        if (w_at_yprime >= band_lo - kMoneyTol && w_at_yprime <= band_hi + kMoneyTol) {
            throw std::invalid_argument("minimum guarantee is inside the optimal band");
        }
        if (w_at_yprime < band_lo) {
            double muF = yprime * std::exp(-1.0 / p.alpha);
            double cap = (1.0 - ell_eff) * muF;
            wit.tech = binary_curve_technology(
                0.0, yprime, chord_curve(cap, muF, yprime, ell_eff * muF, n));
            wit.expected_regret = p.alpha * std::exp(-1.0 / p.alpha) * (yprime - w_at_yprime);
        } else {
            // Over-protective below ybar: only floors high enough for a
            // {0, y'}-supported technology to beat rbar can be certified.
            double exit_value = p.alpha * w_at_yprime;
            double curve_value = (ell_eff <= 0.5)
                                     ? p.alpha *
                                           std::exp((2.0 * ell_eff - 1.0) / (1.0 - ell_eff)) *
                                           (1.0 - ell_eff) * yprime
                                     : 0.0;
            double value = std::max(exit_value, curve_value);
            if (value <= rbar + kMoneyTol) {
                throw UnsupportedInput(
                    "no single-support counterexample certifies this high floor below ybar");
            }
            if (curve_value >= exit_value) {
                double k = optimal_k_no_production(w_at_yprime, yprime);
                double bottom = yprime * k / (yprime - w_at_yprime);
                wit.tech = binary_curve_technology(k, yprime,
                                                   chord_curve(k, bottom, yprime, 0.0, n));
                wit.expected_regret = curve_value;
            } else {
                double k = (yprime - w_at_yprime) * (1.0 + 1e-9);
                wit.tech = construct_single_action(yprime, k);
                wit.expected_regret = p.alpha * (yprime - k);
            }
        }
    }
    wit.margin = wit.expected_regret - rbar;
    return wit;
}

ViolationWitness construct_gaming_violation(double y1, double w1, double y2, double w2,
                                            double p_mix, const Params& p, int n) {
    p.validate();
    if (p.alpha <= 1.0 + 1e-12) {
        throw std::invalid_argument("gaming violation needs alpha > 1");
    }
    if (!(y1 > 0.0) || !(y1 < p.ybar) || !(y2 > p.ybar)) {
        throw std::invalid_argument("gaming violation needs 0 < y1 < ybar < y2");
    }
    if (!(p_mix > 0.0) || !(p_mix < 1.0) ||
        std::abs(p_mix * y1 + (1.0 - p_mix) * y2 - p.ybar) > kMoneyTol) {
        throw std::invalid_argument("mixture must average to ybar");
    }
    if (w1 < 0.0 || w1 > y1 + kMoneyTol || w2 < 0.0 || w2 > y2 + kMoneyTol) {
        throw std::invalid_argument("hole payments must satisfy limited liability");
    }
    const double ls = piece_rate_star(p.alpha);
    const double lbar = (p_mix * w1 + (1.0 - p_mix) * w2) / p.ybar;
    if (lbar >= ls - 1e-12) {
        throw std::invalid_argument("mixture payment must fall below ell_star * ybar");
    }
    if (n < 2) throw std::invalid_argument("gaming violation needs n >= 2");

    const double muF = p.ybar * std::exp(-1.0 / p.alpha);
    const double cap = (1.0 - lbar) * muF;
    std::vector<CurvePoint> curve = chord_curve(cap, muF, p.ybar, lbar * muF, n);

    ViolationWitness wit;
    OutputGrid grid({0.0, y1, p.ybar, y2});
    wit.regulation =
        Regulation::minimum_contract(grid, {0.0, w1, ls * p.ybar, w2});
    wit.tech.k = 0.0;
    wit.tech.grid = grid;
    wit.tech.actions.reserve(curve.size());
    // Every action rides the (y1, y2) mixture, so the hole prices incentive
    // payments at lbar per unit of mean instead of ell_star.
    for (const CurvePoint& cp : curve) {
        Action a;
        a.effort = cp.cost;
        double reach = cp.mean / p.ybar;
        a.probs = {1.0 - reach, reach * p_mix, 0.0, reach * (1.0 - p_mix)};
        wit.tech.actions.push_back(std::move(a));
    }
    wit.expected_regret = p.alpha * std::exp(-1.0 / p.alpha) * (1.0 - lbar) * p.ybar;
    wit.margin = wit.expected_regret - optimal_mpr(p).rbar;
    return wit;
}

ViolationWitness construct_flexibility_violation(double yprime, double w1, double w2,
                                                 const Params& p, double eps, int n) {
    p.validate();
    const double ls = piece_rate_star(p.alpha);
    const double rs = rho_star(p.alpha);
    if (!(yprime >= p.ybar - kMoneyTol)) {
        throw std::invalid_argument("flexibility violation needs y' >= ybar");
    }
    if (!(w2 > w1 + kMoneyTol)) {
        throw std::invalid_argument("flexibility violation needs a nonempty gap");
    }
    if (w1 < ls * yprime - kMoneyTol || w2 > (1.0 - rs) * yprime + kMoneyTol) {
        throw std::invalid_argument("gap must lie inside [ell_star y', (1 - rho_star) y']");
    }
    if (!(eps > 0.0) || eps >= (w2 - w1) / yprime) {
        throw std::invalid_argument("eps must satisfy 0 < eps < (w2 - w1)/y'");
    }
    if (n < 2) throw std::invalid_argument("flexibility violation needs n >= 2");

    const double k = rs * p.ybar;  // optimal deterrence cost for the ell_star floor
    const double bottom = k / (1.0 - ls);
    const double s1 = w1 / yprime;
    const double s2 = w2 / yprime;
    const double i1 = k / (1.0 - s1);
    const double i2 = k / (1.0 - s2);

    std::vector<CurvePoint> base = chord_curve(k, bottom, p.ybar, 0.0, n, {i1, i2});
    // Flatten the cost slope across the uncovered slope interval; the firm
    // still cannot profit (no slope lands inside the gap) and the regulator's
    // preferred action gets cheaper.
    std::vector<CurvePoint> curve = base;
    double saved = 0.0;
    for (std::size_t j = 1; j < curve.size(); ++j) {
        double lo = curve[j - 1].mean, hi = curve[j].mean;
        if (lo >= i1 - 1e-12 && hi <= i2 + 1e-12) {
            double chord = (hi - k) / hi;
            saved += (chord - (s1 + eps)) * (hi - lo);
        }
        curve[j].cost = curve[j].cost - saved;
    }
    if (saved <= kMoneyTol) {
        throw UnsupportedInput("gap too narrow for the requested resolution and eps");
    }

    ViolationWitness wit;
    wit.tech = binary_curve_technology(k, yprime, curve);
    wit.regulation = Regulation::image_constrained(
        binary_grid(yprime),
        {{{0.0, 0.0}}, {{ls * yprime, w1}, {w2, yprime}}});
    // Exit regret of the base curve plus the flattening savings.
    double base_regret = p.alpha * (p.ybar - k - base.back().cost);
    wit.expected_regret = base_regret + p.alpha * saved;
    wit.margin = wit.expected_regret - optimal_mpr(p).rbar;
    if (wit.margin <= 0.0) {
        throw UnsupportedInput("flattening gain does not clear rbar at this resolution");
    }
    return wit;
}

Technology random_binary_technology(const SearchConfig& cfg, Rng& rng) {
    std::size_t count = 1 + rng.uniform_index(cfg.max_actions);
    Technology t;
    t.k = rng.uniform(cfg.k_range.lo, cfg.k_range.hi);
    t.grid = binary_grid(cfg.grid_top);
    t.actions.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double mean = rng.uniform(cfg.mean_range.lo, cfg.mean_range.hi);
        double cost = rng.uniform(0.0, mean);
        t.actions.push_back(binary_action(mean, cost, cfg.grid_top));
    }
    return t;
}

namespace {

struct SearchCandidate {
    Technology tech;
    double regret = -std::numeric_limits<double>::infinity();
};

constexpr int kClimbRounds = 8;
constexpr double kClimbShrink = 0.5;

double evaluate(const Technology& t, const Regulation& r, const Params& p) {
    return regret(t, r, p).regret;
}

// One deterministic refinement pass: perturb k, one mean, one cost, with
// geometrically shrinking steps, keeping improvements.
std::size_t hill_climb(SearchCandidate& cand, const Regulation& r, const Params& p,
                       const SearchConfig& cfg, Rng rng) {
    std::size_t evals = 0;
    double step_k = 0.05 * std::max(p.ybar, cfg.k_range.hi - cfg.k_range.lo);
    double step_mean = 0.05 * p.ybar;
    double step_cost = 0.05 * p.ybar;
    double mean_cap = std::min(cfg.grid_top, p.ybar);
    for (int round = 0; round < kClimbRounds; ++round) {
        for (int coord = 0; coord < 3; ++coord) {
            double& step = coord == 0 ? step_k : (coord == 1 ? step_mean : step_cost);
            std::size_t pick = rng.uniform_index(cand.tech.actions.size());
            bool improved = false;
            for (double dir : {1.0, -1.0}) {
                Technology trial = cand.tech;
                if (coord == 0) {
                    trial.k = std::clamp(trial.k + dir * step, cfg.k_range.lo, cfg.k_range.hi);
                } else if (coord == 1) {
                    Action& a = trial.actions[pick];
                    double mu = action_mean(a, trial.grid);
                    double nm = std::clamp(mu + dir * step, std::min(cfg.mean_range.lo, mu),
                                           mean_cap);
                    a = binary_action(nm, std::min(a.effort, nm), cfg.grid_top);
                } else {
                    Action& a = trial.actions[pick];
                    double mu = action_mean(a, trial.grid);
                    double ne = std::clamp(a.effort + dir * step, 0.0, mu);
                    a = binary_action(mu, ne, cfg.grid_top);
                }
                double value = evaluate(trial, r, p);
                ++evals;
                if (value > cand.regret) {
                    cand.regret = value;
                    cand.tech = std::move(trial);
                    improved = true;
                    break;
                }
            }
            if (!improved) step *= kClimbShrink;
        }
    }
    return evals;
}

}  // namespace

SearchResult adversarial_search(const Regulation& r, const Params& p, const SearchConfig& cfg) {
    cfg.validate(p);
    r.validate();
    const double floor_top = min_guarantee(r, cfg.grid_top);
    const double ell_eff = floor_top / cfg.grid_top;
    const double mean_top = std::min(cfg.grid_top, p.ybar);
    const int curve_n = 2000;

    std::vector<SearchCandidate> cands;
    cands.reserve(cfg.budget + 3);

    // Closed-form seeds: deterred production at k*, extraction at the
    // optimal bottom mean, single action near the exit threshold.
    if (ell_eff <= 0.5 + kMoneyTol) {
        double k = std::exp((2.0 * ell_eff - 1.0) / (1.0 - ell_eff)) * (1.0 - ell_eff) * mean_top;
        double bottom = k / (1.0 - ell_eff);
        cands.push_back(
            {binary_curve_technology(k, cfg.grid_top, chord_curve(k, bottom, mean_top, 0.0, curve_n)),
             0.0});
    }
    {
        double muF = mean_top * std::exp(-1.0 / p.alpha);
        double cap = (1.0 - ell_eff) * muF;
        cands.push_back({binary_curve_technology(
                             0.0, cfg.grid_top,
                             chord_curve(cap, muF, mean_top, ell_eff * muF, curve_n)),
                         0.0});
    }
    // Single action priced just past the exit threshold.
    if (ell_eff > kMoneyTol && (1.0 - ell_eff) * mean_top < mean_top) {
        double k = (1.0 - ell_eff) * mean_top * (1.0 + 1e-9);
        if (k < mean_top) {
            Technology t;
            t.k = k;
            t.grid = binary_grid(cfg.grid_top);
            t.actions.push_back(binary_action(mean_top, 0.0, cfg.grid_top));
            cands.push_back({std::move(t), 0.0});
        }
    }
    const std::size_t n_seeds = cands.size();

    Rng gen(cfg.seed);
    for (std::size_t i = 0; i < cfg.budget; ++i) {
        cands.push_back({random_binary_technology(cfg, gen), 0.0});
    }

    std::atomic<std::size_t> evals{0};
    parallel_for(cands.size(), [&](std::size_t i) {
        cands[i].regret = evaluate(cands[i].tech, r, p);
        evals.fetch_add(1, std::memory_order_relaxed);
    });

    // Refine the best 1% of the random candidates; the closed-form seeds
    // already sit at their analytic optima.
    std::size_t starts = std::max<std::size_t>(1, cfg.budget / 100);
    starts = std::min(starts, cands.size() - n_seeds);
    std::vector<std::size_t> order(cands.size() - n_seeds);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = n_seeds + i;
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts),
                      order.end(), [&](std::size_t a, std::size_t b) {
                          if (cands[a].regret != cands[b].regret) {
                              return cands[a].regret > cands[b].regret;
                          }
                          return a < b;
                      });
    std::vector<std::size_t> climb_evals(starts, 0);
    parallel_for(starts, [&](std::size_t s) {
        std::size_t idx = order[s];
        Rng rng(cfg.seed ^ (0xD1B54A32D192ED03ULL + idx * 0x9E3779B97F4A7C15ULL));
        climb_evals[s] = hill_climb(cands[idx], r, p, cfg, rng);
    });

    SearchResult res;
    res.seed = cfg.seed;
    res.budget = cfg.budget;
    res.hill_climb_starts = starts;
    res.hill_climb_rounds = kClimbRounds;
    res.hill_climb_shrink = kClimbShrink;
    res.evaluations = evals.load();
    for (std::size_t e : climb_evals) res.evaluations += e;

    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i) {
        if (cands[i].regret > cands[best].regret) best = i;
    }
    res.best = std::move(cands[best].tech);
    res.regret = cands[best].regret;
    res.best_index = best;
    return res;
}

}  // namespace regretforge
