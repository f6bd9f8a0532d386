#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "regretforge/acceptance.hpp"
#include "regretforge/adversary.hpp"
#include "regretforge/analysis.hpp"
#include "regretforge/firm.hpp"
#include "regretforge/io.hpp"
#include "regretforge/minmax.hpp"
#include "regretforge/regret.hpp"
#include "regretforge/regulator.hpp"

namespace regretforge {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

// Inline specs ("all", "mpr:0.35", "linear:0.4,0.6") or a JSON file path.
Regulation load_regulation(const std::string& spec) {
    if (spec == "all") return Regulation::all();
    if (spec.rfind("mpr:", 0) == 0) {
        return Regulation::mpr(std::stod(spec.substr(4)));
    }
    if (spec.rfind("linear:", 0) == 0) {
        std::vector<double> slopes;
        std::stringstream ss(spec.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) slopes.push_back(std::stod(item));
        return Regulation::linear_family(std::move(slopes));
    }
    return parse_regulation_json(read_file(spec));
}

Technology load_technology(const std::string& path, const Params& p) {
    Technology t = parse_technology_json(read_file(path));
    std::vector<std::string> issues = validate_technology(t, p);
    if (!issues.empty()) {
        std::string msg = "invalid technology:";
        for (const std::string& s : issues) msg += "\n  " + s;
        throw std::invalid_argument(msg);
    }
    return t;
}

void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc << "\n";
    } else {
        write_file(out_path, doc);
    }
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> vals;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    return vals;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"regretforge: robust regulation of moral-hazard contracts"};
    app.require_subcommand(1);

    double alpha = 1.0, ybar = 1.0;
    std::string tech_path, reg_spec, out_path;

    auto add_params = [&](CLI::App* cmd, bool need_alpha = true) {
        if (need_alpha) {
            cmd->add_option("--alpha", alpha, "weight on worker surplus (1 <= alpha <= 1e12)")
                ->required();
        }
        cmd->add_option("--ybar", ybar, "uniform bound on expected output (default 1)");
    };

    // solve-firm
    auto* c_firm = app.add_subcommand("solve-firm", "firm's best response under a regulation");
    c_firm->add_option("--tech", tech_path, "technology JSON file")->required();
    c_firm->add_option("--reg", reg_spec, "regulation (JSON file, 'all', 'mpr:L', 'linear:a,b')")
        ->required();
    add_params(c_firm);
    c_firm->add_option("--out", out_path, "write JSON here instead of stdout");
    c_firm->callback([&] {
        Params p{alpha, ybar};
        Technology t = load_technology(tech_path, p);
        Regulation r = load_regulation(reg_spec);
        emit(serialize_outcome(firm_best_response(t, r), p), out_path);
    });

    // solve-regulator
    auto* c_reg = app.add_subcommand("solve-regulator", "full-information value and transfers");
    c_reg->add_option("--tech", tech_path, "technology JSON file")->required();
    add_params(c_reg);
    c_reg->add_option("--out", out_path, "write JSON here instead of stdout");
    c_reg->callback([&] {
        Params p{alpha, ybar};
        Technology t = load_technology(tech_path, p);
        std::string doc = "{\"full_info_value\":" + format_double(full_info_value(t, p)) +
                          ",\"transfers\":[";
        for (std::size_t a = 0; a < t.actions.size(); ++a) {
            ImplementationResult impl = max_transfer_implementation(t, a);
            if (a > 0) doc += ',';
            doc += impl.feasible ? format_double(impl.expected_payment) : std::string("null");
        }
        doc += "]}";
        emit(doc, out_path);
    });

    // regret
    auto* c_rg = app.add_subcommand("regret", "regret report for a technology and regulation");
    c_rg->add_option("--tech", tech_path, "technology JSON file")->required();
    c_rg->add_option("--reg", reg_spec, "regulation")->required();
    add_params(c_rg);
    c_rg->add_option("--out", out_path, "write JSON here instead of stdout");
    c_rg->callback([&] {
        Params p{alpha, ybar};
        Technology t = load_technology(tech_path, p);
        Regulation r = load_regulation(reg_spec);
        emit(serialize_regret_report(regret(t, r, p), p), out_path);
    });

    // worst-case
    std::uint64_t seed = 0;
    std::size_t budget = 10000, max_actions = 20;
    double grid_top = 0.0, k_lo = 0.0, k_hi = -1.0, mean_lo = 0.0, mean_hi = -1.0;
    auto* c_wc = app.add_subcommand("worst-case", "adversarial search for regret-maximizing technologies");
    c_wc->add_option("--reg", reg_spec, "regulation")->required();
    add_params(c_wc);
    c_wc->add_option("--budget", budget, "random candidates to evaluate")->required();
    c_wc->add_option("--seed", seed, "search seed (required; no wall-clock default)")->required();
    c_wc->add_option("--max-actions", max_actions, "actions per random technology (default 20)");
    c_wc->add_option("--grid-top", grid_top, "binary support level (default ybar)");
    c_wc->add_option("--k-lo", k_lo, "production cost range, lower end (default 0)");
    c_wc->add_option("--k-hi", k_hi, "production cost range, upper end (default ybar)");
    c_wc->add_option("--mean-lo", mean_lo, "action mean range, lower end (default 0)");
    c_wc->add_option("--mean-hi", mean_hi, "action mean range, upper end (default min(grid-top, ybar))");
    c_wc->add_option("--out", out_path, "write JSON here instead of stdout");
    c_wc->callback([&] {
        Params p{alpha, ybar};
        Regulation r = load_regulation(reg_spec);
        SearchConfig cfg;
        cfg.seed = seed;
        cfg.budget = budget;
        cfg.max_actions = max_actions;
        cfg.grid_top = grid_top > 0.0 ? grid_top : ybar;
        cfg.k_range = {k_lo, k_hi >= 0.0 ? k_hi : ybar};
        cfg.mean_range = {mean_lo, mean_hi >= 0.0 ? mean_hi : std::min(cfg.grid_top, ybar)};
        emit(serialize_search_result(adversarial_search(r, p, cfg), p), out_path);
    });

    // minmax
    double tol = 1e-9;
    std::string curve_out;
    std::size_t curve_points = 101;
    auto* c_mm = app.add_subcommand("minmax", "optimal minimum piece rate and its regret");
    add_params(c_mm);
    c_mm->add_option("--tol", tol, "agreement tolerance for the numeric route");
    c_mm->add_option("--out", out_path, "write JSON here instead of stdout");
    c_mm->add_option("--curve-out", curve_out, "also write the branch curves as CSV");
    c_mm->add_option("--curve-points", curve_points, "points for --curve-out (default 101)");
    c_mm->callback([&] {
        Params p{alpha, ybar};
        MinmaxResult closed = optimal_mpr(p);
        MinmaxResult numeric = optimal_mpr_numeric(p, tol);
        std::cout << "ell_star " << format_double(closed.ell_star) << "\n"
                  << "rbar " << format_double(closed.rbar) << "\n"
                  << "ell_star_numeric " << format_double(numeric.ell_star) << "\n"
                  << "rbar_numeric " << format_double(numeric.rbar) << "\n";
        if (!out_path.empty()) emit(serialize_minmax_result(closed, p), out_path);
        if (!curve_out.empty()) write_file(curve_out, branch_curve_csv(p, curve_points));
    });

    // minmax-constrained
    double box_k_lo = 0.0, box_k_hi = 0.0, box_y_lo = 0.0;
    auto* c_mc = app.add_subcommand("minmax-constrained",
                                    "optimal piece rate under quantitative knowledge");
    add_params(c_mc);
    c_mc->add_option("--k-lo", box_k_lo, "lowest possible production cost")->required();
    c_mc->add_option("--k-hi", box_k_hi, "highest possible production cost")->required();
    c_mc->add_option("--y-lo", box_y_lo, "lowest possible action mean")->required();
    c_mc->add_option("--tol", tol, "refinement tolerance");
    c_mc->add_option("--out", out_path, "write JSON here instead of stdout");
    c_mc->callback([&] {
        Params p{alpha, ybar};
        KnowledgeBox box{box_k_lo, box_k_hi, box_y_lo};
        MinmaxResult res = optimal_mpr_constrained(p, box, tol);
        std::cout << "ell_star " << format_double(res.ell_star) << "\n"
                  << "value " << format_double(res.rbar) << "\n";
        if (!out_path.empty()) emit(serialize_minmax_result(res, p), out_path);
    });

    // necessity
    std::size_t probes = 200;
    auto* c_nc = app.add_subcommand("necessity", "diagnose a regulation against the optimality "
                                                 "conditions");
    c_nc->add_option("--reg", reg_spec, "regulation")->required();
    add_params(c_nc);
    c_nc->add_option("--probes", probes, "probe points on [0, 2*ybar] (default 200)");
    c_nc->add_option("--out", out_path, "write JSON here instead of stdout");
    c_nc->callback([&] {
        Params p{alpha, ybar};
        Regulation r = load_regulation(reg_spec);
        NecessityReport rep = necessity_check(r, p, default_probe(p, probes));
        emit(serialize_necessity_report(rep), out_path);
    });

    // sweep-alpha
    std::string alphas_csv;
    double a_min = 1.0, a_max = 1.0;
    std::size_t a_count = 0;
    auto* c_sw = app.add_subcommand("sweep-alpha", "comparative statics table over alpha");
    c_sw->add_option("--alphas", alphas_csv, "comma-separated alpha values");
    c_sw->add_option("--alpha-min", a_min, "range sweep: smallest alpha");
    c_sw->add_option("--alpha-max", a_max, "range sweep: largest alpha");
    c_sw->add_option("--count", a_count, "range sweep: number of points");
    c_sw->add_option("--ybar", ybar, "uniform bound on expected output (default 1)");
    c_sw->add_option("--out", out_path, "write CSV here instead of stdout");
    c_sw->callback([&] {
        std::vector<double> alphas;
        if (!alphas_csv.empty()) {
            alphas = parse_list(alphas_csv);
        } else if (a_count >= 2) {
            for (std::size_t i = 0; i < a_count; ++i) {
                alphas.push_back(a_min + (a_max - a_min) * static_cast<double>(i) /
                                             static_cast<double>(a_count - 1));
            }
        } else {
            throw std::invalid_argument("pass --alphas or --alpha-min/--alpha-max/--count");
        }
        emit(sweep_alpha_csv(sweep_alpha(alphas, ybar)), out_path);
    });

    // verify
    auto* c_vf = app.add_subcommand("verify", "run the acceptance suite");
    c_vf->callback([&] {
        if (!acceptance::report(std::cout, acceptance::run_all())) {
            throw CLI::RuntimeError(1);
        }
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::RuntimeError& e) {
        return e.get_exit_code();
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedInput& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace regretforge
