#include "regretforge/io.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

namespace regretforge {

using nlohmann::json;

namespace {

json parse_root(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("", "not valid JSON");
    return j;
}

double require_number(const json& j, const std::string& ptr) {
    if (!j.is_number()) throw ParseError(ptr, "expected a number");
    return j.get<double>();
}

std::vector<double> require_number_array(const json& j, const std::string& ptr) {
    if (!j.is_array()) throw ParseError(ptr, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(require_number(j[i], ptr + "/" + std::to_string(i)));
    }
    return out;
}

const json& require_field(const json& j, const char* key, const std::string& ptr) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(ptr + "/" + key, "missing field");
    return j.at(key);
}

json grid_to_json(const OutputGrid& g) { return json(g.levels); }

json contract_to_json(const Contract& w) { return json(w.payments); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Technology parse_technology_json(const std::string& text) {
    json j = parse_root(text);
    if (!j.is_object()) throw ParseError("", "expected an object");
    Technology t;
    t.k = require_number(require_field(j, "k", ""), "/k");
    if (t.k < 0.0) throw ParseError("/k", "production cost must be >= 0");

    std::vector<double> levels = require_number_array(require_field(j, "grid", ""), "/grid");
    try {
        t.grid = OutputGrid(std::move(levels));
    } catch (const std::invalid_argument& e) {
        throw ParseError("/grid", e.what());
    }

    const json& actions = require_field(j, "actions", "");
    if (!actions.is_array() || actions.empty()) {
        throw ParseError("/actions", "expected a nonempty array");
    }
    for (std::size_t i = 0; i < actions.size(); ++i) {
        const std::string ptr = "/actions/" + std::to_string(i);
        const json& aj = actions[i];
        Action a;
        a.effort = require_number(require_field(aj, "e", ptr), ptr + "/e");
        if (a.effort < 0.0) throw ParseError(ptr + "/e", "effort must be >= 0");
        a.probs = require_number_array(require_field(aj, "probs", ptr), ptr + "/probs");
        if (a.probs.size() != t.grid.size()) {
            throw ParseError(ptr + "/probs", "misaligned with the grid");
        }
        double sum = 0.0;
        for (double q : a.probs) {
            if (q < -kProbTol || q > 1.0 + kProbTol) {
                throw ParseError(ptr + "/probs", "probabilities must lie in [0,1]");
            }
            sum += q;
        }
        if (std::abs(sum - 1.0) > kProbTol) {
            throw ParseError(ptr + "/probs", "probabilities do not sum to 1");
        }
        t.actions.push_back(std::move(a));
    }
    return t;
}

std::string serialize_technology(const Technology& t) {
    json j;
    j["k"] = t.k;
    j["grid"] = grid_to_json(t.grid);
    json actions = json::array();
    for (const Action& a : t.actions) {
        actions.push_back(json{{"e", a.effort}, {"probs", a.probs}});
    }
    j["actions"] = std::move(actions);
    return j.dump();
}

Regulation parse_regulation_json(const std::string& text) {
    json j = parse_root(text);
    if (!j.is_object()) throw ParseError("", "expected an object");
    const json& type = require_field(j, "type", "");
    if (!type.is_string()) throw ParseError("/type", "expected a string tag");
    const std::string tag = type.get<std::string>();
    try {
        if (tag == "all") {
            return Regulation::all();
        }
        if (tag == "mpr") {
            double ell = require_number(require_field(j, "ell", ""), "/ell");
            if (ell < 0.0 || ell > 1.0) throw ParseError("/ell", "slope out of [0,1]");
            return Regulation::mpr(ell);
        }
        if (tag == "linear_family") {
            std::vector<double> slopes =
                require_number_array(require_field(j, "slopes", ""), "/slopes");
            for (double s : slopes) {
                if (s < 0.0 || s > 1.0) throw ParseError("/slopes", "slope out of [0,1]");
            }
            return Regulation::linear_family(std::move(slopes));
        }
        if (tag == "min_contract") {
            std::vector<double> levels =
                require_number_array(require_field(j, "levels", ""), "/levels");
            std::vector<double> floor =
                require_number_array(require_field(j, "floor", ""), "/floor");
            return Regulation::minimum_contract(OutputGrid(std::move(levels)),
                                                std::move(floor));
        }
        if (tag == "image") {
            std::vector<double> levels =
                require_number_array(require_field(j, "levels", ""), "/levels");
            const json& ivj = require_field(j, "intervals", "");
            if (!ivj.is_array()) throw ParseError("/intervals", "expected an array per level");
            std::vector<std::vector<PaymentInterval>> image;
            for (std::size_t i = 0; i < ivj.size(); ++i) {
                const std::string ptr = "/intervals/" + std::to_string(i);
                if (!ivj[i].is_array()) throw ParseError(ptr, "expected an interval list");
                std::vector<PaymentInterval> list;
                for (std::size_t q = 0; q < ivj[i].size(); ++q) {
                    const std::string iptr = ptr + "/" + std::to_string(q);
                    std::vector<double> pair = require_number_array(ivj[i][q], iptr);
                    if (pair.size() != 2) throw ParseError(iptr, "expected [lo, hi]");
                    list.push_back({pair[0], pair[1]});
                }
                image.push_back(std::move(list));
            }
            return Regulation::image_constrained(OutputGrid(std::move(levels)),
                                                 std::move(image));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError("", e.what());
    }
    throw ParseError("/type", "unknown regulation type '" + tag + "'");
}

std::string serialize_regulation(const Regulation& r) {
    json j;
    switch (r.kind) {
        case RegulationKind::All:
            j["type"] = "all";
            break;
        case RegulationKind::MinimumPieceRate:
            j["type"] = "mpr";
            j["ell"] = r.ell;
            break;
        case RegulationKind::LinearFamily:
            j["type"] = "linear_family";
            j["slopes"] = r.slopes;
            break;
        case RegulationKind::MinimumContract:
            j["type"] = "min_contract";
            j["levels"] = grid_to_json(r.grid);
            j["floor"] = r.floor;
            break;
        case RegulationKind::ImageConstrained: {
            j["type"] = "image";
            j["levels"] = grid_to_json(r.grid);
            json lists = json::array();
            for (const auto& level : r.image) {
                json list = json::array();
                for (const PaymentInterval& iv : level) {
                    list.push_back(json::array({iv.lo, iv.hi}));
                }
                lists.push_back(std::move(list));
            }
            j["intervals"] = std::move(lists);
            break;
        }
    }
    return j.dump();
}

std::string serialize_outcome(const EquilibriumOutcome& o, const Params& p) {
    json j;
    j["alpha"] = p.alpha;
    j["ybar"] = p.ybar;
    j["participated"] = o.participated;
    j["profit"] = o.profit;
    j["worker_surplus"] = o.worker_surplus;
    if (o.action_index) j["action_index"] = *o.action_index;
    if (o.contract) j["contract"] = contract_to_json(*o.contract);
    return j.dump();
}

std::string serialize_regret_report(const RegretReport& rep, const Params& p) {
    json j;
    j["alpha"] = p.alpha;
    j["ybar"] = p.ybar;
    j["full_info_value"] = rep.full_info_value;
    j["profit"] = rep.profit;
    j["worker_surplus"] = rep.worker_surplus;
    j["participated"] = rep.participated;
    j["regret"] = rep.regret;
    return j.dump();
}

std::string serialize_search_result(const SearchResult& res, const Params& p) {
    json j;
    j["regret"] = res.regret;
    j["technology"] = json::parse(serialize_technology(res.best));
    j["provenance"] = json{{"seed", res.seed},
                           {"budget", res.budget},
                           {"evaluations", res.evaluations},
                           {"best_index", res.best_index},
                           {"hill_climb_starts", res.hill_climb_starts},
                           {"hill_climb_rounds", res.hill_climb_rounds},
                           {"hill_climb_shrink", res.hill_climb_shrink},
                           {"alpha", p.alpha},
                           {"ybar", p.ybar}};
    return j.dump();
}

std::string serialize_necessity_report(const NecessityReport& rep) {
    json j;
    j["band_ok"] = rep.band_ok;
    if (rep.band_violation) {
        j["band_violation"] = json{{"y", rep.band_violation->y}, {"w", rep.band_violation->w}};
    }
    j["gaming_ok"] = rep.gaming_ok;
    if (rep.gaming_witness) {
        j["gaming_witness"] = json{{"y", rep.gaming_witness->y},
                                   {"y1", rep.gaming_witness->y1},
                                   {"y2", rep.gaming_witness->y2},
                                   {"p", rep.gaming_witness->p},
                                   {"envelope", rep.gaming_witness->envelope}};
    }
    j["flexibility_ok"] = rep.flexibility_ok;
    if (rep.flexibility_gap) {
        j["flexibility_gap"] = json{{"y", rep.flexibility_gap->y},
                                    {"lo", rep.flexibility_gap->lo},
                                    {"hi", rep.flexibility_gap->hi}};
    }
    j["ell_star"] = rep.ell_star;
    j["rho_star"] = rep.rho_star;
    j["probe_count"] = rep.probe_count;
    j["probe_max"] = rep.probe_max;
    return j.dump();
}

std::string serialize_minmax_result(const MinmaxResult& res, const Params& p) {
    json j;
    j["alpha"] = p.alpha;
    j["ybar"] = p.ybar;
    j["ell_star"] = res.ell_star;
    j["rbar"] = res.rbar;
    j["branch_no_production"] = res.branch_no_production;
    j["branch_extraction"] = res.branch_extraction;
    return j.dump();
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    auto escape = [](const std::string& field) {
        if (field.find_first_of(",\"\n") == std::string::npos) return field;
        std::string out = "\"";
        for (char c : field) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    };
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) out += ',';
        out += escape(header[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out += ',';
            out += escape(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string sweep_alpha_csv(const std::vector<AlphaSweepRow>& rows) {
    std::vector<std::vector<std::string>> body;
    body.reserve(rows.size());
    for (const AlphaSweepRow& r : rows) {
        body.push_back({format_double(r.alpha), format_double(r.ell_star),
                        format_double(r.rbar), format_double(r.branch_no_production),
                        format_double(r.branch_extraction)});
    }
    return to_csv({"alpha", "ell_star", "rbar", "branch_no_production", "branch_extraction"},
                  body);
}

std::string branch_curve_csv(const Params& p, std::size_t n_points) {
    if (n_points < 2) throw std::invalid_argument("branch curve needs at least 2 points");
    std::vector<std::vector<std::string>> body;
    body.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        double ell = 0.5 * static_cast<double>(i) / static_cast<double>(n_points - 1);
        double g1 = branch_no_production(ell, p);
        double g2 = branch_extraction(ell, p);
        body.push_back({format_double(ell), format_double(g1), format_double(g2),
                        format_double(std::max(g1, g2))});
    }
    return to_csv({"ell", "branch_no_production", "branch_extraction", "max"}, body);
}

}  // namespace regretforge
