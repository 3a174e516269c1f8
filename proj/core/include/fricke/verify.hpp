#pragma once

#include <string>
#include <vector>

#include "fricke/dims.hpp"

namespace fricke {

struct SuiteResult {
    std::string name;
    long long checked = 0;
    long long skipped = 0;
    std::vector<std::string> failures;  // at most kMaxFailuresKept entries

    bool ok() const { return failures.empty(); }
};

inline constexpr int kMaxFailuresKept = 20;

/// Headline worked example (N = 221) plus the genus/class tables it cites.
SuiteResult run_examples_suite();
/// dim S_k(Gamma0) = sum over plus (and, square-free, star) extensions.
SuiteResult run_sum_identity_suite(long long max_level);
/// nu2_plus closed form against the class-enumeration oracle.
SuiteResult run_oracle_suite(long long max_level);
/// S_e = 0 for conductor-N characters on square-free N (all Hall e > 1).
SuiteResult run_zero_sum_suite(long long max_level);
/// Integrality/nonnegativity and dim_mod = dim_cusp + dim_eis over the sweep.
SuiteResult run_integrality_suite(long long max_level);

const std::vector<std::string>& suite_names();

/// Dispatch by name ("all" runs every suite); throws std::invalid_argument
/// for unknown names. max_level <= 0 selects each suite's default bound.
std::vector<SuiteResult> run_suites(const std::string& name, long long max_level);

std::string render_suite_results(const std::vector<SuiteResult>& results);

}  // namespace fricke
