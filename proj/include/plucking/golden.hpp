#ifndef PLUCKING_GOLDEN_HPP
#define PLUCKING_GOLDEN_HPP

#include <ostream>
#include <string>
#include <vector>

namespace plucking::golden {

/// Outcome of one golden criterion. A criterion passes when every asserted
/// value matches exactly and, where a budget is set, the run stays under it.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double elapsed_ms = 0.0;
    double limit_ms = 0.0;  // 0 = no budget
    std::string detail;     // empty on success
};

/// Runs the full golden-result suite (published reference values, closed-form
/// cross-checks, exhaustive verification scans).
std::vector<CriterionResult> run_all();

bool all_passed(const std::vector<CriterionResult>& results);

/// One PASS/FAIL line per criterion.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace plucking::golden

#endif
