#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regretforge::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the full acceptance suite (criteria 1-11) at the pinned tolerances.
std::vector<CriterionResult> run_all();

// One pass/fail line per criterion; returns true iff everything passed.
bool report(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace regretforge::acceptance
