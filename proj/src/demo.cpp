#include "rmhull/demo.hpp"

#include "rmhull/errors.hpp"

#include <utility>

namespace rmhull {

namespace {

void push(std::vector<DemoCheck>& cs, std::string label, bool ok, std::string detail = "") {
    cs.push_back(DemoCheck{std::move(label), ok, ok ? "" : std::move(detail)});
}

void check_matrix(const Tower& tw, std::vector<DemoCheck>& cs, const std::string& label,
                  const Matrix& got, const Json& wantj, const std::string& path) {
    Matrix want = matrix_from_json(tw, wantj, path);
    if (got.rows() != want.rows() || got.cols() != want.cols() || got.level() != want.level()) {
        push(cs, label, false,
             "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()) +
                 ", recorded " + std::to_string(want.rows()) + "x" + std::to_string(want.cols()));
        return;
    }
    for (int r = 0; r < got.rows(); ++r)
        for (int c = 0; c < got.cols(); ++c)
            if (!(got.at(r, c) == want.at(r, c))) {
                push(cs, label, false,
                     "cell (" + std::to_string(r) + "," + std::to_string(c) + "): got " +
                         tw->format_top(got.at(r, c)) + ", recorded " +
                         tw->format_top(want.at(r, c)));
                return;
            }
    push(cs, label, true);
}

void check_element(const Tower& tw, std::vector<DemoCheck>& cs, const std::string& label,
                   const TopElement& got, const Json& wantj, const std::string& path) {
    TopElement want = top_from_json(tw, wantj, path);
    push(cs, label, got == want,
         "got " + tw->format_top(got) + ", recorded " + tw->format_top(want));
}

void check_int(std::vector<DemoCheck>& cs, const std::string& label, int got, int want) {
    push(cs, label, got == want,
         "got " + std::to_string(got) + ", recorded " + std::to_string(want));
}

void check_code(const Tower& tw, std::vector<DemoCheck>& cs, const std::string& label,
                const RankCode& got, const Json& wantj, const std::string& path) {
    Matrix want = matrix_from_json(tw, wantj, path);
    bool ok = want.level() == Level::top && want.cols() == got.n() &&
              RankCode::make(tw, want) == got;
    push(cs, label, ok, "the result spans a different code than the recorded generator");
}

const Json& expected_field(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains("expected") || !doc["expected"].is_object())
        throw ParseError("demo: missing \"expected\" object");
    const Json& e = doc["expected"];
    if (!e.contains(key))
        throw ParseError(std::string("demo.expected: missing field \"") + key + "\"");
    return e[key];
}

int expected_int(const Json& doc, const char* key) {
    const Json& v = expected_field(doc, key);
    if (!v.is_number_integer())
        throw ParseError(std::string("demo.expected.") + key + ": expected an integer");
    return v.get<int>();
}

void run_hull_reduction_demo(const Json& doc, const Tower& tw, const RankCode& input,
                             DemoResult& out) {
    const Json& target_j = doc.contains("target") ? doc["target"] : Json(nullptr);
    if (!target_j.is_number_integer())
        throw ParseError("demo.target: expected an integer hull target");
    int target = target_j.get<int>();

    check_int(out.checks, "hull dimension before", hull_dim(input),
              expected_int(doc, "hull_before"));
    ReductionResult r = reduce_hull(input, target);
    check_int(out.checks, "reduction block size", r.plan.s, expected_int(doc, "plan_s"));
    check_matrix(tw, out.checks, "movement matrix", r.plan.M, expected_field(doc, "M"),
                 "demo.expected.M");
    check_code(tw, out.checks, "output code", r.output, expected_field(doc, "output_generator"),
               "demo.expected.output_generator");
    Matrix moved = r.standard.std_gen * lift(r.plan.M);
    check_matrix(tw, out.checks, "moved Gram matrix", moved * moved.transpose(),
                 expected_field(doc, "moved_gram"), "demo.expected.moved_gram");
    check_int(out.checks, "hull dimension after (formula route)", hull_dim(r.output),
              expected_int(doc, "hull_after"));
    check_int(out.checks, "hull dimension after (intersection route)", hull_code(r.output).k(),
              expected_int(doc, "hull_after"));
    push(out.checks, "witness chain replays", chain_reproduces(input, r.output),
         "replaying the recorded moves does not reproduce the output");
}

void run_lcd_h1_demo(const Json& doc, const Tower& tw, const RankCode& input, DemoResult& out) {
    check_int(out.checks, "hull dimension before", hull_dim(input),
              expected_int(doc, "hull_before"));
    LcdResult r = make_lcd(input);
    const Json& route = expected_field(doc, "route");
    push(out.checks, "dispatch route", route.is_string() && to_string(r.route) == route,
         "took route " + to_string(r.route));
    if (!r.adjustment) {
        push(out.checks, "unit adjustment present", false, "no adjustment was produced");
        return;
    }
    const UnitAdjustment& a = *r.adjustment;
    check_matrix(tw, out.checks, "standard-form generator", a.standard.std_gen,
                 expected_field(doc, "standard_generator"), "demo.expected.standard_generator");
    check_matrix(tw, out.checks, "trailing Gram S", a.certificate.S, expected_field(doc, "S"),
                 "demo.expected.S");
    check_matrix(tw, out.checks, "projector P", a.certificate.P, expected_field(doc, "P"),
                 "demo.expected.P");
    check_matrix(tw, out.checks, "complement Q", a.certificate.Q, expected_field(doc, "Q"),
                 "demo.expected.Q");
    check_matrix(tw, out.checks, "unit vector v", a.certificate.v, expected_field(doc, "v"),
                 "demo.expected.v");
    check_element(tw, out.checks, "quadratic value theta", a.certificate.theta,
                  expected_field(doc, "theta"), "demo.expected.theta");
    check_element(tw, out.checks, "certificate value f(v)", a.certificate.fv,
                  expected_field(doc, "fv"), "demo.expected.fv");
    check_matrix(tw, out.checks, "movement matrix", a.M, expected_field(doc, "M"),
                 "demo.expected.M");
    check_code(tw, out.checks, "output code", a.output, expected_field(doc, "output_generator"),
               "demo.expected.output_generator");
    Matrix moved = a.standard.std_gen * lift(a.M);
    Matrix gram = moved * moved.transpose();
    check_matrix(tw, out.checks, "moved Gram matrix", gram, expected_field(doc, "moved_gram"),
                 "demo.expected.moved_gram");
    check_element(tw, out.checks, "Gram determinant", determinant(gram),
                  expected_field(doc, "gram_determinant"), "demo.expected.gram_determinant");
    push(out.checks, "determinant factorization",
         determinant(gram) == tw->top_mul(determinant(a.certificate.S), a.certificate.fv),
         "det(moved Gram) is not det(S) * f(v)");
    check_int(out.checks, "hull dimension after (formula route)", hull_dim(a.output),
              expected_int(doc, "hull_after"));
    check_int(out.checks, "hull dimension after (intersection route)", hull_code(a.output).k(),
              expected_int(doc, "hull_after"));
    push(out.checks, "witness chain replays", chain_reproduces(input, a.output),
         "replaying the recorded moves does not reproduce the output");
}

} // namespace

DemoResult run_demo_case(const Json& doc) {
    if (!doc.is_object()) throw ParseError("demo: expected an object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("demo: missing string field \"kind\"");
    DemoResult out;
    out.kind = doc["kind"].get<std::string>();
    out.title = doc.contains("title") && doc["title"].is_string()
                    ? doc["title"].get<std::string>()
                    : out.kind;
    Tower tw = tower_from_json(doc.contains("tower") ? doc["tower"] : Json(nullptr), "demo.tower");
    Matrix gen = matrix_from_json(tw, doc.contains("input_generator") ? doc["input_generator"]
                                                                      : Json(nullptr),
                                  "demo.input_generator");
    if (gen.level() != Level::top)
        throw ParseError("demo.input_generator: code generators live over the extension field");
    RankCode input = RankCode::make(tw, gen);

    if (out.kind == "hull_reduction")
        run_hull_reduction_demo(doc, tw, input, out);
    else if (out.kind == "lcd_h1")
        run_lcd_h1_demo(doc, tw, input, out);
    else
        throw ParseError("demo.kind: unknown kind \"" + out.kind + "\"");

    out.all_ok = true;
    for (const DemoCheck& c : out.checks) out.all_ok = out.all_ok && c.ok;
    return out;
}

Json demo_result_to_json(const DemoResult& r) {
    Json checks = Json::array();
    for (const DemoCheck& c : r.checks) {
        Json cj = Json::object();
        cj["label"] = c.label;
        cj["ok"] = c.ok;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    Json out = Json::object();
    out["kind"] = r.kind;
    out["title"] = r.title;
    out["all_ok"] = r.all_ok;
    out["checks"] = std::move(checks);
    return out;
}

std::vector<std::string> demo_files() {
    return {"demo_hull_reduction.json", "demo_lcd_h1.json"};
}

} // namespace rmhull
