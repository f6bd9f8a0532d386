#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace regretforge {

// Global money tolerance. Strict/weak inequality distinctions are realized
// numerically at this resolution.
inline constexpr double kMoneyTol = 1e-9;

// Probability mass must sum to one at this resolution.
inline constexpr double kProbTol = 1e-12;

// Thrown for inputs that are well-formed but outside what the solvers
// support (CLI exit code 3).
class UnsupportedInput : public std::runtime_error {
public:
    explicit UnsupportedInput(const std::string& what) : std::runtime_error(what) {}
};

// Regulator preferences and the uniform bound on expected output.
struct Params {
    double alpha = 1.0;  // weight on worker surplus, >= 1
    double ybar = 1.0;   // maximal expected output, > 0

    void validate() const;
};

// Finite, strictly increasing output levels. The first level is always 0;
// limited liability then forces every contract to pay 0 there.
struct OutputGrid {
    std::vector<double> levels;

    OutputGrid() = default;
    explicit OutputGrid(std::vector<double> lv);

    std::size_t size() const { return levels.size(); }
    double top() const { return levels.back(); }
    // Index of a level equal to y within kMoneyTol; throws std::domain_error
    // if y is off the grid.
    std::size_t index_of(double y) const;
    bool same_levels(const OutputGrid& other, double tol = kMoneyTol) const;
};

// Two-level grid {0, top}.
OutputGrid binary_grid(double top);

// An effort cost paired with an output distribution on a grid.
struct Action {
    double effort = 0.0;
    std::vector<double> probs;
};

// Expected output of `a` on `g`. Throws std::invalid_argument on misaligned
// lengths.
double action_mean(const Action& a, const OutputGrid& g);

// Binary action with mean `mu` on the grid {0, top}.
// Throws std::invalid_argument unless 0 <= mu <= top and top > 0, e >= 0.
Action binary_action(double mu, double e, double top);

// A production cost plus a finite action set on a shared grid.
struct Technology {
    double k = 0.0;
    OutputGrid grid;
    std::vector<Action> actions;
};

// Reports every violated invariant (empty list == valid). Checks grid shape,
// probability normalization and range, effort sign, k sign, nonemptiness and
// the per-action mean bound E[y] <= ybar.
std::vector<std::string> validate_technology(const Technology& t, const Params& p);

// A payment schedule on a grid, obeying limited liability 0 <= w(y) <= y.
struct Contract {
    std::vector<double> payments;
};

// Closed payment interval used by image-constrained regulations.
struct PaymentInterval {
    double lo = 0.0;
    double hi = 0.0;
};

enum class RegulationKind {
    All,              // every limited-liability contract
    MinimumPieceRate, // w(y) >= ell * y pointwise
    MinimumContract,  // w >= floor pointwise, floor given on a grid
    LinearFamily,     // w = s * y for s in a finite slope set
    ImageConstrained, // w(y_j) must fall in one of the listed intervals
};

// A constraint object over contracts. Grid-bound kinds (MinimumContract,
// ImageConstrained) carry their own levels; the analytic kinds are defined
// for every output.
struct Regulation {
    RegulationKind kind = RegulationKind::All;
    double ell = 0.0;                                 // MinimumPieceRate
    OutputGrid grid;                                  // grid-bound kinds
    std::vector<double> floor;                        // MinimumContract, per level
    std::vector<double> slopes;                       // LinearFamily, each in [0,1]
    std::vector<std::vector<PaymentInterval>> image;  // ImageConstrained, per level

    static Regulation all();
    static Regulation mpr(double ell);
    static Regulation minimum_contract(OutputGrid grid, std::vector<double> floor);
    static Regulation linear_family(std::vector<double> slopes);
    static Regulation image_constrained(OutputGrid grid,
                                        std::vector<std::vector<PaymentInterval>> image);

    // Throws std::invalid_argument when a kind-specific invariant fails.
    void validate() const;
    bool grid_bound() const {
        return kind == RegulationKind::MinimumContract || kind == RegulationKind::ImageConstrained;
    }
};

// Least payment any allowed contract makes at output y. Analytic for
// All/MinimumPieceRate/LinearFamily; grid-level lookup otherwise (throws
// std::domain_error off-grid).
double min_guarantee(const Regulation& r, double y);

// Whether `w` (aligned to `g`) satisfies the regulation within tol.
bool contract_allowed(const Regulation& r, const OutputGrid& g, const Contract& w, double tol);

// Outcome of the contracting subgame: either the firm stays out, or a
// contract/action pair with the resulting payoffs.
struct EquilibriumOutcome {
    bool participated = false;
    std::optional<Contract> contract;
    std::optional<std::size_t> action_index;
    double profit = 0.0;
    double worker_surplus = 0.0;
};

}  // namespace regretforge
