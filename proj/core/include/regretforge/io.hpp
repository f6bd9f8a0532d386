#pragma once

#include <string>
#include <vector>

#include "regretforge/adversary.hpp"
#include "regretforge/analysis.hpp"
#include "regretforge/minmax.hpp"
#include "regretforge/regret.hpp"
#include "regretforge/types.hpp"

namespace regretforge {

// Schema violation with a JSON-pointer path to the offending element.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string pointer, const std::string& message)
        : std::runtime_error(pointer + ": " + message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

// {"k": number, "grid": [numbers], "actions": [{"e": number, "probs": [numbers]}]}
Technology parse_technology_json(const std::string& text);
std::string serialize_technology(const Technology& t);

// Tagged union on "type": all | mpr | min_contract | linear_family | image.
Regulation parse_regulation_json(const std::string& text);
std::string serialize_regulation(const Regulation& r);

std::string serialize_outcome(const EquilibriumOutcome& o, const Params& p);
std::string serialize_regret_report(const RegretReport& rep, const Params& p);
std::string serialize_search_result(const SearchResult& res, const Params& p);
std::string serialize_necessity_report(const NecessityReport& rep);
std::string serialize_minmax_result(const MinmaxResult& res, const Params& p);

// RFC-4180: comma-separated, '.' decimal, LF line endings, header row first.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

std::string sweep_alpha_csv(const std::vector<AlphaSweepRow>& rows);

// ell grid with both branch values and their max, plot-ready.
std::string branch_curve_csv(const Params& p, std::size_t n_points);

}  // namespace regretforge
