#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhull/demo.hpp"

#include <string>

using namespace rmhull;

namespace {

std::string data_path(const std::string& name) {
    return std::string(RMHULL_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("both shipped demo documents pass every recorded comparison") {
    for (const std::string& name : demo_files()) {
        INFO(name);
        Json doc = load_json_file(data_path(name));
        DemoResult r = run_demo_case(doc);
        CHECK(r.all_ok);
        CHECK(r.checks.size() >= 8);
        for (const DemoCheck& c : r.checks) {
            INFO(c.label << ": " << c.detail);
            CHECK(c.ok);
            CHECK(c.detail.empty());
        }
        Json rj = demo_result_to_json(r);
        CHECK(rj["all_ok"] == true);
        CHECK(rj["checks"].size() == r.checks.size());
    }
}

TEST_CASE("a corrupted golden matrix cell is caught and named") {
    Json doc = load_json_file(data_path("demo_hull_reduction.json"));
    doc["expected"]["moved_gram"]["entries"][0][0][1][0] = 1;  // flip one digit
    DemoResult r = run_demo_case(doc);
    CHECK_FALSE(r.all_ok);
    bool found = false;
    for (const DemoCheck& c : r.checks)
        if (c.label == "moved Gram matrix") {
            found = true;
            CHECK_FALSE(c.ok);
            CHECK(c.detail.find("cell (0,0)") != std::string::npos);
        } else {
            CHECK(c.ok);  // everything else still passes
        }
    CHECK(found);
}

TEST_CASE("a corrupted golden element and integer are caught") {
    Json doc = load_json_file(data_path("demo_lcd_h1.json"));
    doc["expected"]["fv"][0][0] = 0;  // claims f(v) = w instead of w^2
    DemoResult r = run_demo_case(doc);
    CHECK_FALSE(r.all_ok);
    for (const DemoCheck& c : r.checks)
        if (c.label == "certificate value f(v)") {
            CHECK_FALSE(c.ok);
            CHECK(c.detail.find("recorded") != std::string::npos);
        }

    Json doc2 = load_json_file(data_path("demo_hull_reduction.json"));
    doc2["expected"]["hull_before"] = 1;
    DemoResult r2 = run_demo_case(doc2);
    CHECK_FALSE(r2.all_ok);
}

TEST_CASE("malformed demo documents raise parse errors") {
    Json doc = load_json_file(data_path("demo_hull_reduction.json"));
    Json nokind = doc;
    nokind.erase("kind");
    CHECK_THROWS_AS((void)run_demo_case(nokind), ParseError);
    Json badkind = doc;
    badkind["kind"] = "mystery";
    CHECK_THROWS_AS((void)run_demo_case(badkind), ParseError);
    Json noexp = doc;
    noexp.erase("expected");
    CHECK_THROWS_AS((void)run_demo_case(noexp), ParseError);
    Json notarget = doc;
    notarget.erase("target");
    CHECK_THROWS_AS((void)run_demo_case(notarget), ParseError);
    Json badfield = doc;
    badfield["expected"].erase("moved_gram");
    CHECK_THROWS_AS((void)run_demo_case(badfield), ParseError);
}
