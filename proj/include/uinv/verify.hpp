#pragma once

#include <string>
#include <vector>

namespace uinv {

struct CheckResult {
    std::string id;
    std::string params;
    std::string status;  // "pass" | "fail" | "skip"
    std::string claim;   // the statement being checked, for failure reports
};

struct Report {
    int n_max;
    std::vector<CheckResult> results;

    int count(const std::string& status) const;
    bool all_passed() const { return count("fail") == 0; }
};

/// Batch driver over the whole property suite up to n_max. Failures are
/// report content, never exceptions; ranges that need a larger n are reported
/// as skipped.
Report verify_all(int n_max);

}  // namespace uinv
