#include "regretforge/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "regretforge/adversary.hpp"
#include "regretforge/analysis.hpp"
#include "regretforge/firm.hpp"
#include "regretforge/io.hpp"
#include "regretforge/lp.hpp"
#include "regretforge/minmax.hpp"
#include "regretforge/regret.hpp"
#include "regretforge/regulator.hpp"

namespace regretforge::acceptance {

namespace {

struct Check {
    bool pass = true;
    std::string detail;

    void fail(const std::string& msg) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    void require(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Independent oracles (no shared code path with the solvers they check).

// Cheapest implementing piece rate for a binary technology, from the closed
// slope bounds with the same weak-constraint semantics as the solver.
struct SlopeOracle {
    bool feasible = false;
    double payment = 0.0;
};

SlopeOracle analytic_min_cost(const Technology& t, double floor_slope, std::size_t idx) {
    const double top = t.grid.top();
    const Action& a = t.actions[idx];
    const double mu = a.probs[1] * top;
    double lo = floor_slope;
    double hi = 1.0;
    if (mu > 0.0) {
        lo = std::max(lo, (a.effort - kMoneyTol) / mu);
    } else if (a.effort > kMoneyTol) {
        return {};
    }
    for (std::size_t j = 0; j < t.actions.size(); ++j) {
        if (j == idx) continue;
        double mu_j = t.actions[j].probs[1] * top;
        double de = a.effort - t.actions[j].effort;
        if (mu_j < mu) {
            lo = std::max(lo, (de - kMoneyTol) / (mu - mu_j));
        } else if (mu_j > mu) {
            hi = std::min(hi, (-de + kMoneyTol) / (mu_j - mu));
        } else if (de > kMoneyTol) {
            return {};
        }
    }
    if (lo > hi) return {};
    return {true, lo * mu};
}

// Brute-force optimum of a small LP by enumerating basic points: every
// intersection of num_vars active constraints drawn from rows-as-equalities
// and bound faces.
LpSolution vertex_enumeration(const LinearProgram& lp, LpSense sense) {
    const std::size_t n = lp.num_vars();
    struct Plane {
        std::vector<double> a;
        double b;
    };
    std::vector<Plane> planes;
    for (const LpRow& row : lp.rows) planes.push_back({row.coeffs, row.rhs});
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> e(n, 0.0);
        e[j] = 1.0;
        planes.push_back({e, lp.lower[j]});
        planes.push_back({e, lp.upper[j]});
    }
    auto feasible = [&](const std::vector<double>& x) {
        for (std::size_t j = 0; j < n; ++j) {
            if (x[j] < lp.lower[j] - 1e-9 || x[j] > lp.upper[j] + 1e-9) return false;
        }
        for (const LpRow& row : lp.rows) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * x[j];
            if (row.sense == RowSense::Le && lhs > row.rhs + 1e-9) return false;
            if (row.sense == RowSense::Ge && lhs < row.rhs - 1e-9) return false;
            if (row.sense == RowSense::Eq && std::abs(lhs - row.rhs) > 1e-9) return false;
        }
        return true;
    };
    auto solve_square = [&](const std::vector<std::size_t>& pick, std::vector<double>& x) {
        std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) m[r][col] = planes[pick[r]].a[col];
            m[r][n] = planes[pick[r]].b;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n; ++r) {
                if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
            }
            if (std::abs(m[piv][col]) < 1e-10) return false;
            std::swap(m[col], m[piv]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = m[r][col] / m[col][col];
                for (std::size_t k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
            }
        }
        for (std::size_t col = 0; col < n; ++col) x[col] = m[col][n] / m[col][col];
        return true;
    };

    LpSolution best{LpStatus::Infeasible, {}, 0.0};
    std::vector<std::size_t> pick(n);
    std::vector<double> x(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t d) {
        if (d == n) {
            if (!solve_square(pick, x) || !feasible(x)) return;
            double v = 0.0;
            for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * x[j];
            bool better = best.status != LpStatus::Optimal ||
                          (sense == LpSense::Minimize ? v < best.value : v > best.value);
            if (better) best = {LpStatus::Optimal, x, v};
            return;
        }
        for (std::size_t i = start; i < planes.size(); ++i) {
            pick[d] = i;
            rec(i + 1, d + 1);
        }
    };
    rec(0, 0);
    return best;
}

// ---------------------------------------------------------------------------
// Criteria.

Check criterion1() {
    Check c;
    for (double alpha : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0}) {
        Params p{alpha, 1.0};
        MinmaxResult numeric = optimal_mpr_numeric(p, 1e-9);
        double ls = (alpha - 1.0) / (2.0 * alpha - 1.0);
        double rbar = alpha * alpha * std::exp(-1.0 / alpha) / (2.0 * alpha - 1.0);
        c.require(std::abs(numeric.ell_star - ls) <= 1e-6,
                  "alpha=" + fmt(alpha) + ": ell " + fmt(numeric.ell_star) + " vs " + fmt(ls));
        c.require(std::abs(numeric.rbar - rbar) <= 1e-9 * rbar,
                  "alpha=" + fmt(alpha) + ": rbar " + fmt(numeric.rbar) + " vs " + fmt(rbar));
    }
    return c;
}

Check criterion2() {
    Check c;
    for (int i = 0; i < 50; ++i) {
        double alpha = std::pow(10.0, 6.0 * i / 49.0);
        Params p{alpha, 1.0};
        double ls = piece_rate_star(alpha);
        double g1 = branch_no_production(ls, p);
        double g2 = branch_extraction(ls, p);
        double rel = std::abs(g1 - g2) / std::max(std::abs(g1), std::abs(g2));
        c.require(rel <= 1e-12, "alpha=" + fmt(alpha) + ": branch gap " + fmt(rel));
    }
    return c;
}

Check criterion3() {
    Check c;
    for (double alpha : {1.0, 2.0, 5.0}) {
        Params p{alpha, 1.0};
        double ls = piece_rate_star(alpha);
        double rbar = optimal_mpr(p).rbar;
        Regulation reg = Regulation::mpr(ls);

        double kstar = optimal_k_no_production(ls, 1.0);
        Technology tnp = construct_no_production_curve(ls, 1.0, kstar, 2000);
        double r1 = regret(tnp, reg, p).regret;
        c.require(std::abs(r1 - rbar) <= 0.01 * rbar,
                  "alpha=" + fmt(alpha) + ": no-production " + fmt(r1) + " vs " + fmt(rbar));

        double mu = optimal_extraction_mean(p, 1.0);
        Technology tex = construct_extraction_curve(ls, 1.0, mu, 2000);
        double r2 = regret(tex, reg, p).regret;
        c.require(std::abs(r2 - rbar) <= 0.01 * rbar,
                  "alpha=" + fmt(alpha) + ": extraction " + fmt(r2) + " vs " + fmt(rbar));
    }
    return c;
}

SearchConfig base_config(std::uint64_t seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.budget = 100000;
    cfg.max_actions = 20;
    cfg.k_range = {0.0, 1.0};
    cfg.mean_range = {0.0, 1.0};
    cfg.grid_top = 1.0;
    return cfg;
}

Check criterion4() {
    Check c;
    Params p{2.0, 1.0};
    Regulation cstar = Regulation::mpr(piece_rate_star(2.0));
    double rbar = optimal_mpr(p).rbar;
    for (std::uint64_t seed : {7ull, 42ull, 1337ull}) {
        SearchResult res = adversarial_search(cstar, p, base_config(seed));
        c.require(res.regret <= rbar + 1e-6,
                  "seed=" + fmt(static_cast<double>(seed)) + ": regret " + fmt(res.regret) +
                      " above rbar " + fmt(rbar));
        c.require(res.regret >= rbar * 0.99,
                  "seed=" + fmt(static_cast<double>(seed)) + ": regret " + fmt(res.regret) +
                      " misses rbar " + fmt(rbar));
    }
    return c;
}

Check criterion5() {
    Check c;
    Params p{1.0, 1.0};
    double target = std::exp(-1.0);
    SearchResult res = adversarial_search(Regulation::all(), p, base_config(7));
    c.require(res.regret <= target + 1e-6, "laissez-faire regret " + fmt(res.regret) + " high");
    c.require(res.regret >= target * 0.99, "laissez-faire regret " + fmt(res.regret) + " low");
    c.require(piece_rate_star(1.0) == 0.0, "ell_star(1) must be exactly 0");
    return c;
}

Check criterion6() {
    Check c;
    double prev = -1.0;
    for (int i = 0; i < 100; ++i) {
        double alpha = 1.0 + 99.0 * i / 99.0;
        double ls = piece_rate_star(alpha);
        c.require(ls >= prev, "ell_star decreased at alpha=" + fmt(alpha));
        prev = ls;
    }
    return c;
}

Check criterion7() {
    Check c;
    Params p{2.0, 1.0};
    SearchConfig gen_cfg;
    gen_cfg.seed = 20240;
    gen_cfg.budget = 1;
    gen_cfg.max_actions = 6;
    gen_cfg.k_range = {0.0, 0.6};
    gen_cfg.mean_range = {0.05, 1.0};
    gen_cfg.grid_top = 1.0;
    Rng rng(gen_cfg.seed);

    const double ells[] = {0.0, 0.2, 1.0 / 3.0};
    int checked_floor = 0, checked_exit = 0;
    for (int i = 0; i < 500; ++i) {
        Technology t = random_binary_technology(gen_cfg, rng);
        for (double ell : ells) {
            Regulation mpr = Regulation::mpr(ell);
            Regulation lin = Regulation::linear_family(
                {ell, std::min(1.0, ell + 0.2), std::min(1.0, ell + 0.45)});
            EquilibriumOutcome em = worst_case_equilibrium(t, mpr, p);
            if (!em.participated) {
                EquilibriumOutcome el = worst_case_equilibrium(t, lin, p);
                c.require(!el.participated,
                          "exit under the piece rate but not under the linear family (i=" +
                              fmt(i) + ", ell=" + fmt(ell) + ")");
                ++checked_exit;
                continue;
            }
            double mu = action_mean(t.actions[*em.action_index], t.grid);
            double payment = mu - t.k - em.profit;
            if (std::abs(payment - ell * mu) <= 1e-8) {
                double rm = regret(t, mpr, p).regret;
                double rl = regret(t, lin, p).regret;
                c.require(std::abs(rm - rl) <= 1e-8,
                          "floor-binding regret mismatch " + fmt(rm) + " vs " + fmt(rl) +
                              " (i=" + fmt(i) + ", ell=" + fmt(ell) + ")");
                ++checked_floor;
            }
        }
        if (!c.pass) break;
    }
    c.require(checked_floor >= 50, "too few floor-binding cases: " + fmt(checked_floor));
    c.require(checked_exit >= 50, "too few exit cases: " + fmt(checked_exit));

    // Binarization never loses regret on positive-profit instances.
    Rng rng2(555);
    OutputGrid grid3({0.0, 0.5, 1.0});
    int done = 0, attempts = 0;
    while (done < 500 && attempts < 20000 && c.pass) {
        ++attempts;
        double ell = ells[static_cast<std::size_t>(attempts) % 3];
        Regulation mpr = Regulation::mpr(ell);
        Technology t;
        t.k = rng2.uniform(0.0, 0.2);
        t.grid = grid3;
        std::size_t count = 1 + rng2.uniform_index(4);
        for (std::size_t a = 0; a < count; ++a) {
            double q1 = rng2.next_unit(), q2 = rng2.next_unit(), q3 = rng2.next_unit();
            double s = q1 + q2 + q3;
            Action act;
            act.probs = {q1 / s, q2 / s, q3 / s};
            double mu = action_mean(act, grid3);
            act.effort = rng2.uniform(0.0, std::max(mu, 1e-3));
            t.actions.push_back(std::move(act));
        }
        EquilibriumOutcome eq = worst_case_equilibrium(t, mpr, p);
        if (!eq.participated || eq.profit <= kMoneyTol) continue;
        Technology hat = binarize_and_normalize(t, mpr, p);
        double before = regret(t, mpr, p).regret;
        double after = regret(hat, mpr, p).regret;
        c.require(after >= before - 1e-9, "binarization lost regret: " + fmt(before) + " -> " +
                                              fmt(after) + " (attempt " + fmt(attempts) + ")");
        ++done;
    }
    c.require(done == 500, "only " + fmt(done) + " positive-profit instances");
    return c;
}

Check criterion8() {
    Check c;
    Params p{2.0, 1.0};
    const double ls = piece_rate_star(2.0);
    const double rbar = optimal_mpr(p).rbar;
    const double rs = rho_star(2.0);

    // 20 band violations across the certifiable regions.
    struct BandCase {
        double y, w;
    };
    std::vector<BandCase> cases;
    for (double d : {0.05, 0.12, 0.2, 0.35, 0.55}) {
        double y = 1.0 + 2.0 * d;
        cases.push_back({y, std::min(0.95, ls + d) * y});  // floor too high above ybar
    }
    for (double d : {0.05, 0.1, 0.15, 0.22, 0.3}) {
        double y = 1.0 + d;
        cases.push_back({y, (ls - d) * y});  // floor too low above ybar
    }
    for (double y : {0.75, 0.8, 0.85, 0.9, 0.95}) {
        double edge = y - (1.0 - ls);  // lower band edge below ybar
        cases.push_back({y, 0.5 * edge});
    }
    for (double d : {0.03, 0.06, 0.1, 0.15, 0.2}) {
        double w = rs + d;  // certifiably high below ybar
        cases.push_back({std::min(0.98, w + 0.15), w});
    }
    for (const BandCase& bc : cases) {
        ViolationWitness wit = construct_band_violation(bc.y, bc.w, p, 800);
        double r = regret(wit.tech, wit.regulation, p).regret;
        c.require(r > rbar + 1e-4,
                  "band (" + fmt(bc.y) + ", " + fmt(bc.w) + "): regret " + fmt(r));
        if (!c.pass) break;
    }

    // 5 gaming violations whose mixture floor sits at ell_star (alpha-1)/alpha,
    // where the construction's value equals rbar + e^{-1/alpha} ell_star ybar.
    const double lbar = ls * (p.alpha - 1.0) / p.alpha;
    const double gaming_target = rbar + std::exp(-1.0 / p.alpha) * ls;
    struct GamingCase {
        double y1, y2, pm, w1;
    };
    std::vector<GamingCase> gcases = {{0.5, 1.5, 0.5, lbar},
                                      {0.5, 1.5, 0.5, 0.05},
                                      {0.25, 1.25, 0.25, 0.1},
                                      {0.8, 1.8, 0.8, 0.15},
                                      {0.4, 1.6, 0.5, lbar}};
    for (const GamingCase& gc : gcases) {
        double w2 = (lbar - gc.pm * gc.w1) / (1.0 - gc.pm);
        ViolationWitness wit =
            construct_gaming_violation(gc.y1, gc.w1, gc.y2, w2, gc.pm, p, 200);
        double r = regret(wit.tech, wit.regulation, p).regret;
        c.require(std::abs(r - gaming_target) <= 0.01 * gaming_target,
                  "gaming (" + fmt(gc.y1) + "," + fmt(gc.y2) + "): " + fmt(r) + " vs " +
                      fmt(gaming_target));
        c.require(r > rbar + 1e-4, "gaming margin too small: " + fmt(r));
        if (!c.pass) break;
    }

    // 5 flexibility violations.
    struct FlexCase {
        double y, w1, w2;
    };
    std::vector<FlexCase> fcases = {{1.0, 0.40, 0.50},
                                    {1.0, 0.35, 0.45},
                                    {1.0, 0.45, 0.59},
                                    {1.2, 0.45, 0.60},
                                    {1.5, 0.55, 0.80}};
    for (const FlexCase& fc : fcases) {
        ViolationWitness wit =
            construct_flexibility_violation(fc.y, fc.w1, fc.w2, p, 1e-3, 2000);
        double r = regret(wit.tech, wit.regulation, p).regret;
        c.require(r > rbar + 1e-4,
                  "flexibility (" + fmt(fc.y) + ", " + fmt(fc.w1) + "-" + fmt(fc.w2) +
                      "): regret " + fmt(r));
        if (!c.pass) break;
    }

    // The optimal piece-rate regulation passes every clause.
    for (double alpha : {1.0, 2.0, 5.0, 100.0}) {
        Params pa{alpha, 1.0};
        Regulation cstar = Regulation::mpr(piece_rate_star(alpha));
        NecessityReport rep = necessity_check(cstar, pa, default_probe(pa));
        c.require(rep.band_ok && rep.gaming_ok && rep.flexibility_ok,
                  "necessity_check failed for alpha=" + fmt(alpha));
    }
    return c;
}

Check criterion9() {
    Check c;
    for (double alpha : {1.5, 2.0, 5.0}) {
        Params p{alpha, 1.0};
        KnowledgeBox box{0.0, 1.0, 0.0};
        MinmaxResult res = optimal_mpr_constrained(p, box, 1e-6);
        c.require(std::abs(res.ell_star - piece_rate_star(alpha)) <= 1e-4,
                  "alpha=" + fmt(alpha) + ": constrained ell " + fmt(res.ell_star));
    }
    {
        Params p{2.0, 1.0};
        KnowledgeBox box{0.0, 1.0, 0.0};
        for (double ell : {0.0, 0.1, 0.2, 1.0 / 3.0, 0.45}) {
            ConstrainedBranches b = constrained_branches(ell, p, box);
            c.require(std::abs(b.no_hire - branch_no_production(ell, p)) <= 1e-9,
                      "no-hire branch mismatch at ell=" + fmt(ell));
            c.require(std::abs(b.extraction - branch_extraction(ell, p)) <= 1e-9,
                      "extraction branch mismatch at ell=" + fmt(ell));
        }
    }
    {
        Params p{2.0, 1.0};
        double ls = piece_rate_star(2.0);
        KnowledgeBox box{0.0, 1.0, 0.0};
        Technology tnp =
            construct_no_production_curve(ls, 1.0, optimal_k_no_production(ls, 1.0), 500);
        Technology tex =
            construct_extraction_curve(ls, 1.0, optimal_extraction_mean(p, 1.0), 500);
        Technology one = construct_single_action(1.0, 0.5);
        for (const Technology* t : {&tnp, &tex, &one}) {
            c.require(technology_in_class(*t, TechnologyClass::Mlrp),
                      "construction rejected by the MLRP validator");
            c.require(technology_in_box(*t, box, p),
                      "construction rejected by the box validator");
        }
    }
    return c;
}

Check criterion10() {
    Check c;
    // Implementation cost vs the closed slope bounds on binary technologies.
    SearchConfig gen_cfg;
    gen_cfg.seed = 99001;
    gen_cfg.budget = 1;
    gen_cfg.max_actions = 5;
    gen_cfg.k_range = {0.0, 0.5};
    gen_cfg.mean_range = {0.0, 1.0};
    gen_cfg.grid_top = 1.0;
    Rng rng(gen_cfg.seed);
    const double floors[] = {0.0, 0.2, 1.0 / 3.0, 0.45};
    for (int i = 0; i < 1000 && c.pass; ++i) {
        Technology t = random_binary_technology(gen_cfg, rng);
        double ell = floors[static_cast<std::size_t>(i) % 4];
        Regulation reg = Regulation::mpr(ell);
        for (std::size_t a = 0; a < t.actions.size(); ++a) {
            SlopeOracle oracle = analytic_min_cost(t, ell, a);
            ImplementationResult impl = min_cost_implementation(t, reg, a);
            if (oracle.feasible != impl.feasible) {
                c.fail("feasibility mismatch (i=" + fmt(i) + ", a=" + fmt(a) + ")");
                break;
            }
            if (oracle.feasible &&
                std::abs(oracle.payment - impl.expected_payment) > 1e-8) {
                c.fail("payment mismatch " + fmt(oracle.payment) + " vs " +
                       fmt(impl.expected_payment) + " (i=" + fmt(i) + ")");
                break;
            }
        }
    }

    // solve_lp vs vertex enumeration on random boxed programs.
    Rng lp_rng(424242);
    for (int i = 0; i < 1000 && c.pass; ++i) {
        std::size_t n = 2 + lp_rng.uniform_index(2);
        LinearProgram lp;
        lp.objective.resize(n);
        lp.lower.resize(n);
        lp.upper.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            lp.objective[j] = lp_rng.uniform(-1.0, 1.0);
            lp.lower[j] = lp_rng.uniform(-2.0, 0.0);
            lp.upper[j] = lp.lower[j] + lp_rng.uniform(0.5, 3.0);
        }
        std::size_t rows = 1 + lp_rng.uniform_index(4);
        for (std::size_t r = 0; r < rows; ++r) {
            LpRow row;
            row.coeffs.resize(n);
            double mid = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                row.coeffs[j] = lp_rng.uniform(-1.0, 1.0);
                mid += row.coeffs[j] * 0.5 * (lp.lower[j] + lp.upper[j]);
            }
            std::size_t kind = lp_rng.uniform_index(3);
            row.sense = kind == 0 ? RowSense::Le : (kind == 1 ? RowSense::Ge : RowSense::Eq);
            row.rhs = mid + lp_rng.uniform(-1.0, 1.0);
            lp.rows.push_back(std::move(row));
        }
        LpSense sense = lp_rng.uniform_index(2) == 0 ? LpSense::Minimize : LpSense::Maximize;
        LpSolution got = solve_lp(lp, sense);
        LpSolution want = vertex_enumeration(lp, sense);
        if (got.status != want.status) {
            c.fail("status mismatch at i=" + fmt(i));
        } else if (got.status == LpStatus::Optimal &&
                   std::abs(got.value - want.value) >
                       1e-9 * std::max(1.0, std::abs(want.value))) {
            c.fail("value mismatch " + fmt(got.value) + " vs " + fmt(want.value) + " at i=" +
                   fmt(i));
        }
    }
    return c;
}

Check criterion11() {
    Check c;
    Params p{2.0, 1.0};
    Regulation cstar = Regulation::mpr(piece_rate_star(2.0));
    SearchConfig cfg;
    cfg.seed = 11;
    cfg.budget = 2000;
    cfg.max_actions = 8;
    cfg.k_range = {0.0, 1.0};
    cfg.mean_range = {0.0, 1.0};
    cfg.grid_top = 1.0;

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "regretforge-accept";
    fs::create_directories(dir);
    std::vector<std::string> docs;
    const char* threads[] = {"1", "2"};
    for (int run = 0; run < 2; ++run) {
        ::setenv("REGRETFORGE_THREADS", threads[run], 1);
        std::string doc = serialize_search_result(adversarial_search(cstar, p, cfg), p);
        fs::path file = dir / ("worst-case-t" + std::string(threads[run]) + ".json");
        std::ofstream(file, std::ios::binary) << doc;
        std::ifstream in(file, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        docs.push_back(buf.str());
    }
    ::unsetenv("REGRETFORGE_THREADS");
    c.require(docs[0] == docs[1], "result files differ across thread counts");
    c.require(!docs[0].empty(), "empty result file");
    return c;
}

}  // namespace

std::vector<CriterionResult> run_all() {
    struct Entry {
        int id;
        const char* name;
        Check (*fn)();
    };
    const Entry entries[] = {
        {1, "closed-form optimum", criterion1},
        {2, "branch equalization identity", criterion2},
        {3, "lower-bound constructions meet closed forms", criterion3},
        {4, "upper-bound search certificate", criterion4},
        {5, "laissez-faire boundary at alpha=1", criterion5},
        {6, "piece rate monotone in alpha", criterion6},
        {7, "mutual best-response properties", criterion7},
        {8, "necessity loop closure", criterion8},
        {9, "constrained-knowledge regression", criterion9},
        {10, "oracle equivalence", criterion10},
        {11, "thread-count determinism", criterion11},
    };
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        auto t0 = std::chrono::steady_clock::now();
        Check c = e.fn();
        auto t1 = std::chrono::steady_clock::now();
        out.push_back({e.id, e.name, c.pass, c.detail,
                       std::chrono::duration<double>(t1 - t0).count()});
    }
    return out;
}

bool report(std::ostream& os, const std::vector<CriterionResult>& results) {
    bool all = true;
    for (const CriterionResult& r : results) {
        os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.name << " ("
           << fmt(r.seconds) << " s)";
        if (!r.pass) os << " -- " << r.detail;
        os << "\n";
        all = all && r.pass;
    }
    os << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
    return all;
}

}  // namespace regretforge::acceptance
