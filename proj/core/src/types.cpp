#include "regretforge/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace regretforge {

namespace {

bool finite(double v) { return std::isfinite(v); }

}  // namespace

void Params::validate() const {
    if (!finite(alpha) || alpha < 1.0) {
        throw std::invalid_argument("alpha must be >= 1");
    }
    if (alpha > 1e12) {
        throw std::invalid_argument("alpha must be <= 1e12");
    }
    if (!finite(ybar) || ybar <= 0.0) {
        throw std::invalid_argument("ybar must be > 0");
    }
}

OutputGrid::OutputGrid(std::vector<double> lv) : levels(std::move(lv)) {
    if (levels.empty()) {
        throw std::invalid_argument("output grid must be nonempty");
    }
    if (std::abs(levels.front()) > 0.0) {
        throw std::invalid_argument("output grid must start at 0");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!finite(levels[i]) || levels[i] < 0.0) {
            throw std::invalid_argument("output levels must be finite and >= 0");
        }
        if (i > 0 && levels[i] <= levels[i - 1]) {
            throw std::invalid_argument("output levels must be strictly increasing");
        }
    }
}

std::size_t OutputGrid::index_of(double y) const {
    auto it = std::lower_bound(levels.begin(), levels.end(), y - kMoneyTol);
    if (it != levels.end() && std::abs(*it - y) <= kMoneyTol) {
        return static_cast<std::size_t>(it - levels.begin());
    }
    throw std::domain_error("output " + std::to_string(y) + " is off the grid");
}

bool OutputGrid::same_levels(const OutputGrid& other, double tol) const {
    if (levels.size() != other.levels.size()) return false;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (std::abs(levels[i] - other.levels[i]) > tol) return false;
    }
    return true;
}

OutputGrid binary_grid(double top) {
    if (!finite(top) || top <= 0.0) {
        throw std::invalid_argument("binary grid top must be > 0");
    }
    return OutputGrid({0.0, top});
}

double action_mean(const Action& a, const OutputGrid& g) {
    if (a.probs.size() != g.size()) {
        throw std::invalid_argument("action probabilities are misaligned with the grid");
    }
    double mean = 0.0;
    for (std::size_t i = 0; i < a.probs.size(); ++i) {
        mean += a.probs[i] * g.levels[i];
    }
    return mean;
}

Action binary_action(double mu, double e, double top) {
    if (!finite(top) || top <= 0.0) {
        throw std::invalid_argument("binary action needs top > 0");
    }
    if (!finite(mu) || mu < 0.0 || mu > top) {
        throw std::invalid_argument("binary action needs 0 <= mu <= top");
    }
    if (!finite(e) || e < 0.0) {
        throw std::invalid_argument("binary action needs effort >= 0");
    }
    Action a;
    a.effort = e;
    a.probs = {1.0 - mu / top, mu / top};
    return a;
}

std::vector<std::string> validate_technology(const Technology& t, const Params& p) {
    std::vector<std::string> issues;
    p.validate();
    if (!finite(t.k) || t.k < 0.0) {
        issues.push_back("production cost k must be >= 0");
    }
    if (t.grid.levels.empty() || std::abs(t.grid.levels.front()) > 0.0) {
        issues.push_back("grid must be nonempty and contain 0 as its first level");
    }
    for (std::size_t i = 1; i < t.grid.levels.size(); ++i) {
        if (t.grid.levels[i] <= t.grid.levels[i - 1]) {
            issues.push_back("grid levels must be strictly increasing");
            break;
        }
    }
    if (t.actions.empty()) {
        issues.push_back("technology must contain at least one action");
    }
    for (std::size_t a = 0; a < t.actions.size(); ++a) {
        const Action& act = t.actions[a];
        const std::string tag = "action " + std::to_string(a) + ": ";
        if (!finite(act.effort) || act.effort < 0.0) {
            issues.push_back(tag + "effort must be >= 0");
        }
        if (act.probs.size() != t.grid.size()) {
            issues.push_back(tag + "probabilities are misaligned with the grid");
            continue;
        }
        double sum = 0.0;
        bool in_range = true;
        for (double q : act.probs) {
            if (!finite(q) || q < -kProbTol || q > 1.0 + kProbTol) in_range = false;
            sum += q;
        }
        if (!in_range) {
            issues.push_back(tag + "each probability must lie in [0,1]");
        }
        if (std::abs(sum - 1.0) > kProbTol) {
            issues.push_back(tag + "probabilities do not sum to 1");
        }
        double mean = 0.0;
        for (std::size_t i = 0; i < act.probs.size() && i < t.grid.size(); ++i) {
            mean += act.probs[i] * t.grid.levels[i];
        }
        if (mean > p.ybar + 1e-12) {
            issues.push_back(tag + "mean exceeds ybar");
        }
    }
    return issues;
}

Regulation Regulation::all() {
    Regulation r;
    r.kind = RegulationKind::All;
    return r;
}

Regulation Regulation::mpr(double ell) {
    Regulation r;
    r.kind = RegulationKind::MinimumPieceRate;
    r.ell = ell;
    r.validate();
    return r;
}

Regulation Regulation::minimum_contract(OutputGrid grid, std::vector<double> floor) {
    Regulation r;
    r.kind = RegulationKind::MinimumContract;
    r.grid = std::move(grid);
    r.floor = std::move(floor);
    r.validate();
    return r;
}

Regulation Regulation::linear_family(std::vector<double> slopes) {
    Regulation r;
    r.kind = RegulationKind::LinearFamily;
    r.slopes = std::move(slopes);
    r.validate();
    return r;
}

Regulation Regulation::image_constrained(OutputGrid grid,
                                         std::vector<std::vector<PaymentInterval>> image) {
    Regulation r;
    r.kind = RegulationKind::ImageConstrained;
    r.grid = std::move(grid);
    r.image = std::move(image);
    r.validate();
    return r;
}

void Regulation::validate() const {
    switch (kind) {
        case RegulationKind::All:
            break;
        case RegulationKind::MinimumPieceRate:
            if (!finite(ell) || ell < 0.0 || ell > 1.0) {
                throw std::invalid_argument("piece rate slope must lie in [0,1]");
            }
            break;
        case RegulationKind::MinimumContract: {
            if (grid.levels.empty()) {
                throw std::invalid_argument("minimum-contract regulation needs a grid");
            }
            if (floor.size() != grid.size()) {
                throw std::invalid_argument("floor schedule is misaligned with the grid");
            }
            for (std::size_t i = 0; i < floor.size(); ++i) {
                if (!finite(floor[i]) || floor[i] < -kMoneyTol ||
                    floor[i] > grid.levels[i] + kMoneyTol) {
                    throw std::invalid_argument("floor must satisfy 0 <= floor(y) <= y");
                }
            }
            break;
        }
        case RegulationKind::LinearFamily: {
            if (slopes.empty()) {
                throw std::invalid_argument("linear family needs at least one slope");
            }
            for (double s : slopes) {
                if (!finite(s) || s < 0.0 || s > 1.0) {
                    throw std::invalid_argument("linear-family slopes must lie in [0,1]");
                }
            }
            break;
        }
        case RegulationKind::ImageConstrained: {
            if (grid.levels.empty()) {
                throw std::invalid_argument("image-constrained regulation needs a grid");
            }
            if (image.size() != grid.size()) {
                throw std::invalid_argument("interval lists are misaligned with the grid");
            }
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (image[i].empty()) {
                    throw std::invalid_argument("every level needs a nonempty interval list");
                }
                for (const PaymentInterval& iv : image[i]) {
                    if (!finite(iv.lo) || !finite(iv.hi) || iv.lo > iv.hi + kMoneyTol ||
                        iv.lo < -kMoneyTol || iv.hi > grid.levels[i] + kMoneyTol) {
                        throw std::invalid_argument(
                            "payment intervals must be ordered and within [0, y]");
                    }
                }
            }
            break;
        }
    }
}

double min_guarantee(const Regulation& r, double y) {
    if (!finite(y) || y < 0.0) {
        throw std::invalid_argument("min_guarantee needs y >= 0");
    }
    switch (r.kind) {
        case RegulationKind::All:
            return 0.0;
        case RegulationKind::MinimumPieceRate:
            return r.ell * y;
        case RegulationKind::LinearFamily:
            return *std::min_element(r.slopes.begin(), r.slopes.end()) * y;
        case RegulationKind::MinimumContract:
            return r.floor[r.grid.index_of(y)];
        case RegulationKind::ImageConstrained: {
            const auto& ivs = r.image[r.grid.index_of(y)];
            double lo = ivs.front().lo;
            for (const PaymentInterval& iv : ivs) lo = std::min(lo, iv.lo);
            return lo;
        }
    }
    throw std::logic_error("unreachable regulation kind");
}

bool contract_allowed(const Regulation& r, const OutputGrid& g, const Contract& w, double tol) {
    if (w.payments.size() != g.size()) {
        throw std::invalid_argument("contract is misaligned with the grid");
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (w.payments[i] < -tol || w.payments[i] > g.levels[i] + tol) return false;
    }
    switch (r.kind) {
        case RegulationKind::All:
            return true;
        case RegulationKind::MinimumPieceRate: {
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (w.payments[i] < r.ell * g.levels[i] - tol) return false;
            }
            return true;
        }
        case RegulationKind::LinearFamily: {
            for (double s : r.slopes) {
                bool match = true;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    if (std::abs(w.payments[i] - s * g.levels[i]) > tol) {
                        match = false;
                        break;
                    }
                }
                if (match) return true;
            }
            return false;
        }
        case RegulationKind::MinimumContract: {
            if (!r.grid.same_levels(g)) {
                throw std::invalid_argument("contract grid does not match the regulation grid");
            }
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (w.payments[i] < r.floor[i] - tol) return false;
            }
            return true;
        }
        case RegulationKind::ImageConstrained: {
            if (!r.grid.same_levels(g)) {
                throw std::invalid_argument("contract grid does not match the regulation grid");
            }
            for (std::size_t i = 0; i < g.size(); ++i) {
                bool inside = false;
                for (const PaymentInterval& iv : r.image[i]) {
                    if (w.payments[i] >= iv.lo - tol && w.payments[i] <= iv.hi + tol) {
                        inside = true;
                        break;
                    }
                }
                if (!inside) return false;
            }
            return true;
        }
    }
    throw std::logic_error("unreachable regulation kind");
}

}  // namespace regretforge
