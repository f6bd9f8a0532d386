// Throughput report for the adversarial search: wall time and candidate
// evaluations per second, medians over 5 repetitions, CSV on stdout or to a
// file. Never gates CI.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "regretforge/adversary.hpp"
#include "regretforge/io.hpp"
#include "regretforge/minmax.hpp"

using namespace regretforge;

namespace {

struct BenchRow {
    std::size_t budget = 0;
    std::size_t max_actions = 0;
    double seconds_median = 0.0;
    double evals_per_second_median = 0.0;
    double best_regret = 0.0;
};

BenchRow bench_search(const Regulation& reg, const Params& p, const SearchConfig& cfg,
                      int repetitions) {
    BenchRow row;
    row.budget = cfg.budget;
    row.max_actions = cfg.max_actions;
    if (cfg.budget == 0) return row;
    std::vector<double> seconds, rates;
    for (int rep = 0; rep < repetitions; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        SearchResult res = adversarial_search(reg, p, cfg);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        seconds.push_back(secs);
        rates.push_back(static_cast<double>(res.evaluations) / secs);
        row.best_regret = res.regret;  // identical across repetitions by determinism
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    row.seconds_median = median(seconds);
    row.evals_per_second_median = median(rates);
    return row;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adversarial-search throughput benchmark"};
    double alpha = 2.0, ybar = 1.0;
    std::uint64_t seed = 7;
    std::vector<std::size_t> budgets = {1000, 10000};
    std::size_t max_actions = 10;
    int repetitions = 5;
    std::string out, reg_spec = "mpr:0.3333333333333333";
    app.add_option("--alpha", alpha, "welfare weight");
    app.add_option("--ybar", ybar, "output bound");
    app.add_option("--seed", seed, "search seed");
    app.add_option("--budgets", budgets, "budgets to sweep");
    app.add_option("--max-actions", max_actions, "actions per candidate");
    app.add_option("--repetitions", repetitions, "repetitions per row (median)");
    app.add_option("--out", out, "write CSV here instead of stdout");
    CLI11_PARSE(app, argc, argv);

    Params p{alpha, ybar};
    Regulation reg = Regulation::mpr(piece_rate_star(alpha));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t budget : budgets) {
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.budget = std::max<std::size_t>(budget, 1);
        cfg.max_actions = max_actions;
        cfg.k_range = {0.0, ybar};
        cfg.mean_range = {0.0, ybar};
        cfg.grid_top = ybar;
        if (budget == 0) continue;  // empty report row
        BenchRow r = bench_search(reg, p, cfg, repetitions);
        rows.push_back({std::to_string(r.budget), std::to_string(r.max_actions),
                        format_double(r.seconds_median),
                        format_double(r.evals_per_second_median),
                        format_double(r.best_regret)});
    }
    std::string csv = to_csv(
        {"budget", "max_actions", "seconds_median", "evals_per_second_median", "best_regret"},
        rows);
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream(out, std::ios::binary) << csv;
    }
    return 0;
}
