#ifndef MAGCAT_ACCEPTANCE_HPP
#define MAGCAT_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace magcat {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

// Runs the full built-in check suite. `cli_path` enables the byte-determinism
// check of actual command-line output; when empty, the canonical emissions
// are compared in-process instead.
std::vector<CriterionResult> run_acceptance(const std::string& cli_path);

std::string format_acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace magcat

#endif
