// Keeps docs/operations.md honest: every public operation appears in the
// table exactly once, and nothing undocumented sneaks in.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

const std::vector<std::string> kOperations = {
    "validate_technology", "action_mean", "binary_action", "min_guarantee", "contract_allowed",
    "solve_lp", "minimize_1d",
    "worker_best_actions", "min_cost_implementation", "firm_best_response",
    "worst_case_equilibrium",
    "max_transfer_implementation", "full_info_value",
    "regret",
    "construct_single_action", "construct_no_production_curve", "optimal_k_no_production",
    "construct_extraction_curve", "optimal_extraction_mean", "binarize_and_normalize",
    "construct_band_violation", "construct_gaming_violation", "construct_flexibility_violation",
    "random_binary_technology", "adversarial_search",
    "branch_no_production", "branch_extraction", "piece_rate_star", "rho_star", "optimal_mpr",
    "optimal_mpr_numeric", "constrained_branches", "optimal_mpr_constrained", "mlrp_geq",
    "fosd_geq", "technology_in_class", "technology_in_box",
    "lower_convex_envelope", "necessity_check", "sweep_alpha", "default_probe",
    "format_double", "parse_technology_json", "serialize_technology", "parse_regulation_json",
    "serialize_regulation", "to_csv", "sweep_alpha_csv", "branch_curve_csv",
    "thread_budget", "parallel_for",
    "run_cli", "bench_search",
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: doc_coverage <path to operations.md>\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    std::map<std::string, int> counts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("| `", 0) != 0) continue;
        std::size_t end = line.find('`', 3);
        if (end == std::string::npos) continue;
        ++counts[line.substr(3, end - 3)];
    }
    int failures = 0;
    for (const std::string& op : kOperations) {
        auto it = counts.find(op);
        if (it == counts.end()) {
            std::cerr << "missing from the table: " << op << "\n";
            ++failures;
        } else if (it->second != 1) {
            std::cerr << "listed " << it->second << " times: " << op << "\n";
            ++failures;
        }
    }
    for (const auto& [name, n] : counts) {
        if (std::find(kOperations.begin(), kOperations.end(), name) == kOperations.end()) {
            std::cerr << "documented but unknown: " << name << "\n";
            ++failures;
        }
    }
    if (failures == 0) {
        std::cout << "doc coverage: " << kOperations.size() << " operations, each exactly once\n";
        return 0;
    }
    return 1;
}
