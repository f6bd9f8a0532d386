#include "regretforge/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "regretforge/minmax.hpp"

namespace regretforge {

double PiecewiseLinear::operator()(double x) const {
    if (xs.empty() || x < xs.front() - kMoneyTol || x > xs.back() + kMoneyTol) {
        throw std::domain_error("evaluation point outside the envelope range");
    }
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t lo = hi - 1;
    double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

PiecewiseLinear lower_convex_envelope(std::vector<std::pair<double, double>> points) {
    if (points.empty()) throw std::invalid_argument("envelope needs at least one point");
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].first - points[i - 1].first <= 1e-12) {
            throw std::invalid_argument("envelope points need distinct y values");
        }
    }
    if (std::abs(points.front().first) > kMoneyTol) {
        throw std::invalid_argument("envelope points must include y = 0");
    }
    // Lower hull by the monotone chain: drop middle points that lie above
    // the chord of their neighbours.
    std::vector<std::pair<double, double>> hull;
    for (const auto& pt : points) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            double cross = (b.first - a.first) * (pt.second - a.second) -
                           (pt.first - a.first) * (b.second - a.second);
            if (cross <= 0.0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    PiecewiseLinear out;
    out.xs.reserve(hull.size());
    out.ys.reserve(hull.size());
    for (const auto& pt : hull) {
        out.xs.push_back(pt.first);
        out.ys.push_back(pt.second);
    }
    return out;
}

std::vector<double> default_probe(const Params& p, std::size_t n) {
    p.validate();
    if (n < 2) throw std::invalid_argument("probe needs at least 2 points");
    std::vector<double> probe;
    probe.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        probe.push_back(2.0 * p.ybar * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    probe.push_back(p.ybar);
    std::sort(probe.begin(), probe.end());
    probe.erase(std::unique(probe.begin(), probe.end(),
                            [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
                probe.end());
    return probe;
}

namespace {

// Image of the regulation at output y as a sorted union of closed intervals.
std::vector<PaymentInterval> image_at(const Regulation& r, double y) {
    switch (r.kind) {
        case RegulationKind::All:
            return {{0.0, y}};
        case RegulationKind::MinimumPieceRate:
            return {{r.ell * y, y}};
        case RegulationKind::MinimumContract:
            return {{r.floor[r.grid.index_of(y)], y}};
        case RegulationKind::LinearFamily: {
            std::vector<PaymentInterval> out;
            std::vector<double> slopes = r.slopes;
            std::sort(slopes.begin(), slopes.end());
            for (double s : slopes) out.push_back({s * y, s * y});
            return out;
        }
        case RegulationKind::ImageConstrained: {
            std::vector<PaymentInterval> out = r.image[r.grid.index_of(y)];
            std::sort(out.begin(), out.end(),
                      [](const PaymentInterval& a, const PaymentInterval& b) {
                          return a.lo < b.lo;
                      });
            return out;
        }
    }
    throw std::logic_error("unreachable regulation kind");
}

// First sub-interval of [lo, hi] not covered by the union, if any.
std::optional<std::pair<double, double>> first_gap(const std::vector<PaymentInterval>& ivs,
                                                   double lo, double hi) {
    double cursor = lo;
    for (const PaymentInterval& iv : ivs) {
        if (iv.hi < cursor - kMoneyTol) continue;
        if (iv.lo > cursor + kMoneyTol) {
            return std::make_pair(cursor, std::min(iv.lo, hi));
        }
        cursor = std::max(cursor, iv.hi);
        if (cursor >= hi - kMoneyTol) return std::nullopt;
    }
    if (cursor < hi - kMoneyTol) return std::make_pair(cursor, hi);
    return std::nullopt;
}

}  // namespace

NecessityReport necessity_check(const Regulation& r, const Params& p,
                                const std::vector<double>& y_probe) {
    p.validate();
    r.validate();
    NecessityReport rep;
    rep.ell_star = piece_rate_star(p.alpha);
    rep.rho_star = rho_star(p.alpha);

    std::vector<double> probes;
    if (r.grid_bound()) {
        probes = r.grid.levels;
    } else {
        probes = y_probe;
        std::sort(probes.begin(), probes.end());
    }
    rep.probe_count = probes.size();
    rep.probe_max = probes.empty() ? 0.0 : probes.back();

    const double ls = rep.ell_star;
    const double tol = kMoneyTol * std::max(1.0, p.ybar);

    // (i) Minimum-guarantee band.
    for (double y : probes) {
        if (y < 0.0) continue;
        double w = min_guarantee(r, y);
        bool ok;
        if (y >= p.ybar - tol) {
            ok = std::abs(w - ls * y) <= tol;
        } else {
            double lo = std::max(0.0, y - (1.0 - ls) * p.ybar);
            double hi = std::min(y, ls * p.ybar);
            ok = w >= lo - tol && w <= hi + tol;
        }
        if (!ok) {
            rep.band_ok = false;
            rep.band_violation = BandViolation{y, w};
            break;
        }
    }

    // (ii) Convex gaming of the minimal selection across ybar.
    {
        bool triggered = false;
        for (double y : probes) {
            if (y >= p.ybar - tol && std::abs(min_guarantee(r, y) - ls * y) <= tol) {
                triggered = true;
                break;
            }
        }
        if (triggered) {
            std::vector<std::pair<double, double>> pts;
            pts.emplace_back(0.0, 0.0);
            for (double y : probes) {
                if (y > kMoneyTol) pts.emplace_back(y, min_guarantee(r, y));
            }
            PiecewiseLinear env = lower_convex_envelope(std::move(pts));
            for (double y : probes) {
                if (y < p.ybar - tol) continue;
                double e = env(y);
                if (e < ls * y - tol) {
                    rep.gaming_ok = false;
                    GamingWitness wit;
                    wit.y = y;
                    wit.envelope = e;
                    auto it = std::upper_bound(env.xs.begin(), env.xs.end(), y);
                    std::size_t hi = std::min<std::size_t>(
                        static_cast<std::size_t>(it - env.xs.begin()), env.xs.size() - 1);
                    std::size_t lo = hi == 0 ? 0 : hi - 1;
                    wit.y1 = env.xs[lo];
                    wit.y2 = env.xs[hi];
                    wit.p = (wit.y2 - wit.y1 > 1e-12) ? (wit.y2 - y) / (wit.y2 - wit.y1) : 1.0;
                    rep.gaming_witness = wit;
                    break;
                }
            }
        }
    }

    // (iii) Minimal flexibility above ybar.
    for (double y : probes) {
        if (y < p.ybar - tol) continue;
        double lo = ls * y;
        double hi = (1.0 - rep.rho_star) * y;
        if (hi <= lo + tol) continue;
        auto gap = first_gap(image_at(r, y), lo, hi);
        if (gap) {
            rep.flexibility_ok = false;
            rep.flexibility_gap = FlexibilityGap{y, gap->first, gap->second};
            break;
        }
    }
    return rep;
}

std::vector<AlphaSweepRow> sweep_alpha(const std::vector<double>& alphas, double ybar) {
    std::vector<AlphaSweepRow> rows;
    rows.reserve(alphas.size());
    for (double a : alphas) {
        Params p{a, ybar};
        MinmaxResult res = optimal_mpr(p);
        rows.push_back({a, res.ell_star, res.rbar, res.branch_no_production,
                        res.branch_extraction});
    }
    return rows;
}

}  // namespace regretforge
