#pragma once

#include <string>
#include <vector>

namespace vbound::verify {

struct CheckResult {
    std::string name;
    bool passed;
    double worst_error;      // largest measured error among the sub-checks
    double worst_tolerance;  // tolerance paired with worst_error
    std::string detail;
};

// Runs the full verification suite. scratch_dir is used for the curve CSV
// emitted and re-read by the Figure-curve check; it must be writable.
std::vector<CheckResult> run_acceptance_checks(const std::string& scratch_dir);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace vbound::verify
