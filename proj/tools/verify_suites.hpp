#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ccstats::cli {

/// Ranges for the verify suites; each suite reads the subset it needs.
struct SuiteOptions {
    std::vector<int> qs{2, 3, 5};
    std::vector<int> ns{2, 3, 4};
    std::vector<int> Ns{2, 3};
    std::vector<int> ts{2, 3};
    std::vector<int> rs{0, 1, 2};
    std::vector<int> ms{2, 3, 4, 5, 6};
    int d_max = 8;
    int deg_max = 6;
    int D = 30;
    int jobs = 1;
    bool unsafe_limits = false;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    long long instances = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

const std::vector<std::string>& suite_names();

/// Runs one named invariant suite exhaustively over the given ranges.
/// Unknown names throw std::invalid_argument.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace ccstats::cli
