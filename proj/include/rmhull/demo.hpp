#pragma once

#include "rmhull/serialize.hpp"

#include <string>
#include <vector>

namespace rmhull {

struct DemoCheck {
    std::string label;
    bool ok = false;
    std::string detail;  // empty on success; names the first differing cell on mismatch
};

struct DemoResult {
    std::string kind;
    std::string title;
    std::vector<DemoCheck> checks;
    bool all_ok = false;
};

/// Runs one golden demo document: rebuilds the input, re-runs the
/// construction, and compares every value the document records.
/// ParseError for malformed documents; comparison mismatches are reported
/// as failed checks, never exceptions.
DemoResult run_demo_case(const Json& doc);

Json demo_result_to_json(const DemoResult& r);

/// Canonical basenames of the demo documents shipped in the data directory.
std::vector<std::string> demo_files();

} // namespace rmhull
