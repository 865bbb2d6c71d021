#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhull/verify.hpp"

#include <algorithm>
#include <set>

using namespace rmhull;

TEST_CASE("grids are well formed and distinct") {
    auto small = default_grid("small");
    auto full = default_grid("full");
    CHECK(small.size() >= 12);
    CHECK(full.size() > small.size());
    std::set<std::string> seen;
    for (const auto& gp : full) {
        CHECK(gp.n >= 3);
        CHECK(gp.m >= 1);
        CHECK((gp.p == 2 || gp.p == 3 || gp.p == 5 || gp.p == 7));
        seen.insert(std::to_string(gp.p) + "." + std::to_string(gp.e) + "." +
                    std::to_string(gp.m) + "." + std::to_string(gp.n));
    }
    CHECK(seen.size() == full.size());
    CHECK_THROWS_AS((void)default_grid("huge"), Error);
}

TEST_CASE("every suite passes on the small grid") {
    VerifyOptions opt;
    opt.seed = 7;
    opt.trials = 6;  // keep the unit-test run quick; the CLI uses bigger budgets
    auto results = run_suites(suite_names(), opt);
    REQUIRE(results.size() == suite_names().size());
    for (const auto& r : results) {
        INFO(r.name);
        CHECK(r.passed());
        CHECK(r.failure_count == 0);
        CHECK(r.checks > 0);
    }
    CHECK(all_passed(results));

    Json rep = verify_report_to_json(results, opt);
    CHECK(rep["kind"] == "verification_report");
    CHECK(rep["all_passed"] == true);
    CHECK(rep["total_failures"] == 0);
    CHECK(rep["prng"] == "mt19937_64");
    CHECK(rep["options"]["seed"] == 7);
    CHECK(rep["suites"].size() == suite_names().size());
    std::uint64_t total = 0;
    for (const auto& s : rep["suites"]) total += s["checks"].get<std::uint64_t>();
    CHECK(rep["total_checks"] == total);
}

TEST_CASE("suite runs are deterministic for a fixed seed") {
    VerifyOptions opt;
    opt.seed = 11;
    opt.trials = 3;
    SuiteResult a = run_suite("hull_reduction", opt);
    SuiteResult b = run_suite("hull_reduction", opt);
    CHECK(a.checks == b.checks);
    CHECK(a.failure_count == b.failure_count);
    opt.seed = 12;
    SuiteResult c = run_suite("duality", opt);
    CHECK(c.passed());
}

TEST_CASE("unknown suites are refused") {
    VerifyOptions opt;
    CHECK_THROWS_AS((void)run_suite("no_such_suite", opt), Error);
}
