#pragma once

#include <dmhap/identities.hpp>
#include <dmhap/table.hpp>

#include <string>
#include <vector>

namespace dmhap {

// One aggregated assertion inside a suite. Only promoted checks count
// toward the overall verdict; identity reports ride along either way.
struct SuiteCheck {
    std::string name;
    bool promoted = true;
    bool passed = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::string family;
    int dims = 1;
    int n_max = 0;
    int scale_i = 2;
    int scale_s = 3;
    std::vector<SuiteCheck> checks;
    std::vector<IdentityReport> reports;

    bool promoted_pass() const {
        for (const SuiteCheck& c : checks)
            if (c.promoted && !c.passed) return false;
        return true;
    }
};

const std::vector<std::string>& suite_names(); // excludes "all"

// Runs one named suite. Operator suites throw UnsupportedOperatorError for
// families with A(0) = 0.
SuiteResult run_suite(const std::string& suite, const AppellFamily& family, int dims, int n_max,
                      int scale_i, int scale_s);

// Runs every suite; operator suites a family cannot support are recorded
// as skipped instead of failing.
std::vector<SuiteResult> run_all_suites(const AppellFamily& family, int dims, int n_max,
                                        int scale_i, int scale_s);

} // namespace dmhap
