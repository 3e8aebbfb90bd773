#pragma once

#include <string>
#include <vector>

namespace qsymtab::verify {

struct SuiteResult {
    std::string name;
    bool passed = false;
    long long cases = 0;     // number of individual checks performed
    std::string detail;      // counterexample certificate on failure
    double seconds = 0.0;
};

/// Names of the verification suites, in acceptance order.
std::vector<std::string> suite_names();

/// Runs one suite; max_n < 0 selects the suite's default bound.
/// Figure-reproduction suites ignore max_n.
SuiteResult run_suite(const std::string& name, int max_n = -1);

/// Runs every suite in order.
std::vector<SuiteResult> run_all(int max_n = -1);

}  // namespace qsymtab::verify
