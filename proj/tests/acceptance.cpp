// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "vbound/verify.hpp"

int main() {
    const auto scratch = std::filesystem::temp_directory_path().string();
    const auto results = vbound::verify::run_acceptance_checks(scratch);
    int index = 0;
    bool ok = true;
    for (const auto& r : results) {
        ++index;
        std::printf("[%2d] %-4s %-55s error %.3e (tol %.3e)%s%s\n", index,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.worst_error,
                    r.worst_tolerance, r.detail.empty() ? "" : "  -- ",
                    r.detail.c_str());
        ok = ok && r.passed;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(std::count_if(results.begin(), results.end(),
                                               [](const auto& r) { return r.passed; })),
                results.size());
    return ok ? 0 : 1;
}
