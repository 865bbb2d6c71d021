#pragma once

#include "rmhull/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmhull {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrngName = "mt19937_64";

/// One field/length configuration a verification suite runs over.
struct GridPoint {
    int p = 2;
    int e = 1;
    int m = 2;
    int n = 4;
};

/// A reproducible description of one failed check: the suite, what went
/// wrong, the serialized offending object, and the fork seed that rebuilds
/// the exact random stream.
struct CheckFailure {
    std::string suite;
    std::string message;
    Json subject;
    std::uint64_t seed = 0;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failure_count = 0;  // may exceed failures.size() once capped
    std::vector<CheckFailure> failures;
    bool passed() const { return failure_count == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 20;                        // random codes per suite and grid point
    std::string grid = "small";             // "small" or "full"
    std::uint64_t enum_limit = 1 << 12;     // brute-force cross-checks below this span size
    std::uint64_t basis_budget = 200000;    // self-dual basis search budget
    int max_recorded_failures = 8;          // per suite; counting continues past the cap
};

/// Named grids: "small" covers q in {2,3,4,5}, m <= 3, n <= 7; "full" adds
/// larger fields and lengths. Unknown names raise Error.
std::vector<GridPoint> default_grid(const std::string& name);

/// The available suites, in canonical order.
std::vector<std::string> suite_names();

/// Runs one suite (Error for unknown names). Check failures never throw;
/// they are recorded in the result.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt);

bool all_passed(const std::vector<SuiteResult>& results);

/// Full machine-readable report: version, PRNG, options, per-suite counts
/// and failures.
Json verify_report_to_json(const std::vector<SuiteResult>& results, const VerifyOptions& opt);

} // namespace rmhull
