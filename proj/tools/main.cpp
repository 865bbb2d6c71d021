#include "rmhull/demo.hpp"
#include "rmhull/rng.hpp"
#include "rmhull/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace rmhull;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

std::string describe_matrix(const Matrix& m) {
    const Tower& tw = m.tower();
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += r == 0 ? "[" : " ";
        out += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += m.level() == Level::mid ? tw->format_mid(tw->try_project(m.at(r, c)).value())
                                           : tw->format_top(m.at(r, c));
        }
        out += "]";
        if (r + 1 < m.rows()) out += "\n";
    }
    if (m.rows() == 0) out = "[]";
    return out + (m.rows() ? "]" : "");
}

RankCode load_code(const std::string& file) {
    return code_from_json(load_json_file(file), file);
}

void maybe_save(const std::string& out_file, const Json& j) {
    if (!out_file.empty()) {
        save_json_file(out_file, j);
        std::printf("report written to %s\n", out_file.c_str());
    }
}

// ---- demo ----

int run_demo(const std::string& data_dir, const std::string& only, const std::string& out_file) {
    Json reports = Json::array();
    bool all_ok = true;
    bool matched = false;
    for (const std::string& name : demo_files()) {
        Json doc = load_json_file(data_dir + "/" + name);
        if (!only.empty() && only != name && doc["kind"] != only) continue;
        matched = true;
        DemoResult r = run_demo_case(doc);
        std::printf("== %s (%s)\n", r.title.c_str(), name.c_str());
        for (const DemoCheck& c : r.checks) {
            if (c.ok)
                std::printf("   ok   %s\n", c.label.c_str());
            else
                std::printf("   FAIL %s: %s\n", c.label.c_str(), c.detail.c_str());
        }
        std::printf("   %s\n", r.all_ok ? "all recorded values reproduced" : "MISMATCH");
        all_ok = all_ok && r.all_ok;
        reports.push_back(demo_result_to_json(r));
    }
    if (!matched) {
        std::fprintf(stderr, "no demo named \"%s\"\n", only.c_str());
        return kExitUsage;
    }
    maybe_save(out_file, reports);
    return all_ok ? kExitOk : kExitCheckFailure;
}

// ---- sample ----

int run_sample(int p, int e, int m, int n, int k, std::uint64_t seed, const std::string& out_file) {
    auto tw = FieldTower::make(p, e, m);
    if (k < 1 || k > n) throw Error("sample: need 1 <= k <= n");
    Rng rng(seed);
    RankCode c = RankCode::make(tw, random_full_rank(tw, Level::top, k, n, rng));
    std::printf("sampled a [%d,%d] code over %s, hull dimension %d, id %s\n", n, k,
                tw->describe().c_str(), hull_dim(c), code_id(c).c_str());
    if (out_file.empty()) {
        std::printf("%s\n", code_to_json(c).dump(2).c_str());
    } else {
        save_json_file(out_file, code_to_json(c));
        std::printf("code written to %s\n", out_file.c_str());
    }
    return kExitOk;
}

// ---- reduce ----

int run_reduce(const std::string& in_file, int ell, const std::string& out_file) {
    RankCode c = load_code(in_file);
    const Tower& tw = c.tower();
    int h = hull_dim(c);
    std::printf("input: [%d,%d] code over %s, hull dimension %d\n", c.n(), c.k(),
                tw->describe().c_str(), h);
    auto targets = admissible_targets(tw, h);
    std::string ts;
    for (int t : targets) ts += (ts.empty() ? "" : ", ") + std::to_string(t);
    std::printf("admissible targets: {%s}\n", ts.c_str());
    ReductionResult r = reduce_hull(c, ell);
    std::printf("applied block plan (s = %d); movement matrix:\n%s\n", r.plan.s,
                describe_matrix(r.plan.M).c_str());
    std::printf("output hull dimension: %d (formula) / %d (intersection)\n", hull_dim(r.output),
                hull_code(r.output).k());
    std::printf("witness chain replays: %s\n", chain_reproduces(c, r.output) ? "yes" : "NO");
    maybe_save(out_file, reduction_to_json(c, r));
    if (hull_dim(r.output) != ell || !chain_reproduces(c, r.output)) return kExitCheckFailure;
    return kExitOk;
}

// ---- lcd ----

int run_lcd(const std::string& in_file, const std::string& out_file) {
    RankCode c = load_code(in_file);
    const Tower& tw = c.tower();
    int h = hull_dim(c);
    std::printf("input: [%d,%d] code over %s, hull dimension %d\n", c.n(), c.k(),
                tw->describe().c_str(), h);
    LcdResult r = make_lcd(c);
    std::printf("route: %s\n", to_string(r.route).c_str());
    if (r.adjustment) {
        const LcdCertificate& cert = r.adjustment->certificate;
        std::printf("unit vector v = %s with f(v) = %s\n", describe_matrix(cert.v).c_str(),
                    tw->format_top(cert.fv).c_str());
    }
    bool ok = is_lcd(r.output) && hull_code(r.output).k() == 0 && chain_reproduces(c, r.output);
    std::printf("output meets its dual trivially: %s\n", ok ? "yes" : "NO");
    maybe_save(out_file, lcd_result_to_json(c, r));
    return ok ? kExitOk : kExitCheckFailure;
}

// ---- associate ----

int run_associate(const std::string& in_file, const std::string& basis_kind, std::uint64_t seed,
                  std::uint64_t budget, std::optional<int> ell, std::uint64_t enum_limit,
                  const std::string& out_file) {
    if (ell && basis_kind == "power")
        throw ParityError("lowering the matrix hull requires a self-dual expansion basis; "
                          "drop --basis power");
    RankCode c = load_code(in_file);
    const Tower& tw = c.tower();
    std::printf("input: [%d,%d] code over %s, hull dimension %d\n", c.n(), c.k(),
                tw->describe().c_str(), hull_dim(c));
    ExtensionBasis basis = basis_kind == "power" ? power_basis(tw)
                                                 : find_self_dual_basis(tw, seed, budget);
    std::string gs;
    for (const TopElement& g : basis.gammas)
        gs += (gs.empty() ? "" : ", ") + tw->format_top(g);
    std::printf("expansion basis {%s}%s\n", gs.c_str(), basis.self_dual ? " (self-dual)" : "");

    if (ell) {
        MatrixReduction mr = reduce_hull_matrix(c, *ell, basis);
        std::printf("vector-side hull lowered to %d; matrix code: dim %d inside %d x %d "
                    "matrices, hull %d (target %d)\n",
                    hull_dim(mr.vector_output), mr.output.dim(), mr.output.mrows(),
                    mr.output.ncols(), matrix_hull_dim(mr.output), mr.matrix_hull);
        maybe_save(out_file, matrix_reduction_to_json(c, basis, mr));
        return matrix_hull_dim(mr.output) == mr.matrix_hull ? kExitOk : kExitCheckFailure;
    }

    MatrixCode mc = associate(c, basis);
    std::printf("matrix code: dim %d inside %d x %d matrices over the base field\n", mc.dim(),
                mc.mrows(), mc.ncols());
    std::printf("matrix hull: %d (formula) / %d (intersection)\n", matrix_hull_dim(mc),
                matrix_hull(mc).dim());
    Json report = Json::object();
    report["kind"] = "association";
    report["input"] = code_to_json(c);
    report["basis"] = basis_to_json(tw, basis);
    report["matrix_code"] = matrix_code_to_json(mc);
    bool ok = true;
    if (basis.self_dual) {
        ChainReport rep = extended_block_hull_chain(c, basis, enum_limit);
        for (const ChainStep& st : rep.steps)
            std::printf("   %-26s %s%s%s\n", st.name.c_str(), st.ok ? "ok" : "FAIL",
                        st.detail.empty() ? "" : " — ", st.detail.c_str());
        std::printf("matrix hull %d = m * vector hull %d: %s\n", rep.matrix_hull, rep.expected,
                    rep.all_ok ? "confirmed" : "NOT CONFIRMED");
        report["chain"] = chain_report_to_json(rep);
        ok = rep.all_ok;
    } else {
        std::printf("note: hull transfer is only guaranteed for a self-dual basis\n");
    }
    maybe_save(out_file, report);
    return ok ? kExitOk : kExitCheckFailure;
}

// ---- verify ----

int run_verify(const VerifyOptions& opt, std::vector<std::string> suites,
               const std::string& out_file) {
    const auto known = suite_names();
    if (suites.empty()) suites = known;
    for (const std::string& s : suites)
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            std::fprintf(stderr, "unknown suite \"%s\"; known suites:", s.c_str());
            for (const std::string& k : known) std::fprintf(stderr, " %s", k.c_str());
            std::fprintf(stderr, "\n");
            return kExitUsage;
        }
    auto results = run_suites(suites, opt);
    std::uint64_t checks = 0, failures = 0;
    for (const SuiteResult& r : results) {
        std::printf("%-18s %6llu checks  %s\n", r.name.c_str(),
                    static_cast<unsigned long long>(r.checks),
                    r.passed() ? "ok" : ("FAILED (" + std::to_string(r.failure_count) + ")").c_str());
        for (const CheckFailure& f : r.failures)
            std::printf("   !! %s (seed %llu)\n", f.message.c_str(),
                        static_cast<unsigned long long>(f.seed));
        checks += r.checks;
        failures += r.failure_count;
    }
    std::printf("total: %llu checks, %llu failures (grid %s, seed %llu, prng %s)\n",
                static_cast<unsigned long long>(checks),
                static_cast<unsigned long long>(failures), opt.grid.c_str(),
                static_cast<unsigned long long>(opt.seed), kPrngName);
    maybe_save(out_file, verify_report_to_json(results, opt));
    return failures == 0 ? kExitOk : kExitCheckFailure;
}

// ---- explore ----

// Survey mode for the one open gap: over F_2 and F_3 the block construction
// cannot land one below the current hull dimension, and whether ANY
// equivalence can is unknown in general. This searches the full group of
// invertible base-field moves (exhaustively when q^(n^2) fits the budget,
// by seeded sampling otherwise) and reports what it finds as data only.
int run_explore(int p, int e, int m, int n, int k, int trials, std::uint64_t seed,
                std::uint64_t budget, const std::string& out_file) {
    auto tw = FieldTower::make(p, e, m);
    if (tw->q() > 3) {
        std::fprintf(stderr, "explore: fields with q > 3 have no forbidden target (every "
                             "value in 0..h is reachable); this survey only concerns q in "
                             "{2, 3}\n");
        return kExitUsage;
    }
    if (k < 1 || k > n) throw Error("explore: need 1 <= k <= n");
    const std::uint64_t q = tw->q();

    // Candidate moves, shared by every sampled code.
    std::vector<Matrix> moves;
    std::string search = "inconclusive";
    unsigned __int128 cells = 1;
    for (int i = 0; i < n * n && cells <= budget; ++i) cells *= q;
    Rng rng(seed);
    if (budget > 0 && cells <= budget) {
        search = "exhaustive";
        for (std::uint64_t idx = 0; idx < std::uint64_t(cells); ++idx) {
            Matrix mv = Matrix::zeros(tw, Level::mid, n, n);
            std::uint64_t rest = idx;
            for (int cell = 0; cell < n * n; ++cell) {
                mv.set(cell / n, cell % n, tw->mid(rest % q));
                rest /= q;
            }
            if (rank(mv) == n) moves.push_back(std::move(mv));
        }
    } else if (budget > 0) {
        search = "sampled";
        for (std::uint64_t i = 0; i < budget; ++i)
            moves.push_back(random_invertible(tw, Level::mid, n, rng));
    }

    // Sample first, then search: every code with h >= 2 (the open-question
    // cases) is searched, while at most two codes per smaller hull dimension
    // are searched just to fill out the reachability table.
    std::map<int, int> hull_histogram;
    std::vector<RankCode> to_search;
    std::map<int, int> table_slots;
    for (int t = 0; t < trials; ++t) {
        RankCode c = RankCode::make(tw, random_full_rank(tw, Level::top, k, n, rng));
        int h = hull_dim(c);
        ++hull_histogram[h];
        if (h >= 2 || ++table_slots[h] <= 2) to_search.push_back(std::move(c));
    }

    std::vector<Matrix> lifted;
    lifted.reserve(moves.size());
    for (const Matrix& mv : moves) lifted.push_back(lift(mv));

    std::map<int, std::map<int, std::uint64_t>> reachable;  // from h -> to dim -> moves
    int with_gap = 0, gap_found = 0, gap_not_found = 0;
    Json code_records = Json::array();
    for (const RankCode& c : to_search) {
        const Matrix& g = c.generator();
        int h = hull_dim(c);
        Json record = Json::object();
        record["code"] = code_to_json(c);
        record["hull"] = h;
        if (moves.empty()) {
            record["one_step_down"] = "inconclusive";
            code_records.push_back(std::move(record));
            continue;
        }

        std::map<int, std::uint64_t> seen;
        std::optional<Matrix> gap_witness;
        for (std::size_t i = 0; i < lifted.size(); ++i) {
            Matrix moved = g * lifted[i];
            int moved_h = c.k() - rank(moved * moved.transpose());
            ++seen[moved_h];
            if (h >= 2 && moved_h == h - 1 && !gap_witness) gap_witness = moves[i];
        }
        Json reach = Json::object();
        for (auto& [dim, count] : seen) {
            reach[std::to_string(dim)] = count;
            reachable[h][dim] += count;
        }
        record["reachable"] = std::move(reach);
        if (h >= 2) {
            ++with_gap;
            if (gap_witness) {
                ++gap_found;
                record["one_step_down"] = "found";
                record["one_step_down_witness"] = matrix_to_json(*gap_witness);
            } else {
                ++gap_not_found;
                record["one_step_down"] = search == "exhaustive" ? "impossible" : "not_found";
            }
        } else {
            record["one_step_down"] = "not_applicable";
        }
        code_records.push_back(std::move(record));
    }

    std::printf("sampled %d random [%d,%d] codes over %s\n", trials, n, k,
                tw->describe().c_str());
    std::printf("hull dimension histogram:\n");
    for (auto& [h, count] : hull_histogram) std::printf("   h = %d: %d codes\n", h, count);
    if (search == "inconclusive") {
        std::printf("move search: budget 0, no moves examined — inconclusive\n");
        maybe_save(out_file, [&] {
            Json report = Json::object();
            report["kind"] = "exploration";
            report["tower"] = tower_to_json(tw);
            report["n"] = n;
            report["k"] = k;
            report["trials"] = trials;
            report["seed"] = seed;
            report["budget"] = budget;
            report["prng"] = kPrngName;
            report["search"] = search;
            report["codes"] = std::move(code_records);
            return report;
        }());
        return kExitOk;
    }

    std::printf("move search: %s, %zu invertible %d x %d matrices over F_%llu%s, applied "
                "to %zu of the sampled codes\n",
                search.c_str(), moves.size(), n, n,
                static_cast<unsigned long long>(q),
                search == "sampled" ? " (seeded sample)" : "", to_search.size());
    std::printf("hull dimensions reachable by equivalence (move counts):\n");
    bool construction_subset = true;
    for (auto& [h, per] : reachable) {
        std::string line;
        for (auto& [dim, count] : per)
            line += (line.empty() ? "" : ", ") + std::to_string(dim) + " (" +
                    std::to_string(count) + ")";
        std::printf("   from h = %d: %s\n", h, line.c_str());
        for (int ell : admissible_targets(tw, h))
            if (!per.count(ell)) construction_subset = false;
    }
    if (with_gap > 0) {
        std::printf("one step down (h - 1) among %d codes with h >= 2: found for %d, %s for "
                    "%d\n",
                    with_gap, gap_found,
                    search == "exhaustive" ? "impossible" : "not found", gap_not_found);
    } else {
        std::printf("no sampled code had h >= 2; the one-step-down question did not "
                    "arise (try a different seed, length, or dimension)\n");
    }
    std::printf("every target the block construction reaches was also reached by the "
                "search: %s\n",
                construction_subset ? "yes" : "NO");

    if (!out_file.empty()) {
        Json hist = Json::object();
        for (auto& [h, count] : hull_histogram) hist[std::to_string(h)] = count;
        Json report = Json::object();
        report["kind"] = "exploration";
        report["tower"] = tower_to_json(tw);
        report["n"] = n;
        report["k"] = k;
        report["trials"] = trials;
        report["seed"] = seed;
        report["budget"] = budget;
        report["prng"] = kPrngName;
        report["search"] = search;
        report["moves_examined"] = moves.size();
        report["hull_histogram"] = std::move(hist);
        report["codes_with_gap_question"] = with_gap;
        report["one_step_down_found"] = gap_found;
        report["one_step_down_not_found"] = gap_not_found;
        report["construction_targets_subset_of_reachable"] = construction_subset;
        report["codes"] = std::move(code_records);
        maybe_save(out_file, report);
    }
    return construction_subset ? kExitOk : kExitCheckFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hulls of rank-metric codes: standard forms, hull lowering, intersection-free "
                 "constructions, and base-field matrix expansions"};
    app.require_subcommand(1);

    std::string default_data = RMHULL_DATA_DIR;

    // demo
    auto* demo = app.add_subcommand("demo", "replay the shipped worked examples and compare "
                                            "every recorded value");
    std::string demo_data = default_data, demo_only, demo_out;
    demo->add_option("--data", demo_data, "directory holding the demo documents");
    demo->add_option("--case", demo_only, "run a single demo (file name or kind)");
    demo->add_option("--out", demo_out, "write the comparison report as JSON");

    // sample
    auto* sample = app.add_subcommand("sample", "write a random code for use as input elsewhere");
    int s_p = 2, s_e = 1, s_m = 2, s_n = 5, s_k = 2;
    std::uint64_t s_seed = 0;
    std::string sample_out;
    sample->add_option("--p", s_p, "characteristic")->check(CLI::PositiveNumber);
    sample->add_option("--e", s_e, "base-field degree over the prime field")
        ->check(CLI::PositiveNumber);
    sample->add_option("--m", s_m, "extension degree")->check(CLI::PositiveNumber);
    sample->add_option("--n", s_n, "code length")->check(CLI::PositiveNumber);
    sample->add_option("--k", s_k, "code dimension")->check(CLI::PositiveNumber);
    sample->add_option("--seed", s_seed, "random seed");
    sample->add_option("--out", sample_out, "output file (stdout when omitted)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "lower the hull of a code to a chosen dimension");
    std::string reduce_in, reduce_out;
    int reduce_ell = 0;
    reduce->add_option("--in", reduce_in, "input code (JSON)")->required();
    reduce->add_option("--ell", reduce_ell, "target hull dimension")->required();
    reduce->add_option("--out", reduce_out, "write the full reduction report as JSON");

    // lcd
    auto* lcd = app.add_subcommand("lcd", "make a code meet its dual trivially");
    std::string lcd_in, lcd_out;
    lcd->add_option("--in", lcd_in, "input code (JSON)")->required();
    lcd->add_option("--out", lcd_out, "write the full report as JSON");

    // associate
    auto* assoc = app.add_subcommand("associate", "expand a code into base-field matrices and "
                                                  "check the hull transfer");
    std::string assoc_in, assoc_out, assoc_basis = "self_dual";
    std::uint64_t assoc_seed = 0, assoc_budget = 200000, assoc_enum = 1 << 12;
    std::optional<int> assoc_ell;
    assoc->add_option("--in", assoc_in, "input code (JSON)")->required();
    assoc->add_option("--basis", assoc_basis, "expansion basis: self_dual (default) or power")
        ->check(CLI::IsMember({"self_dual", "power"}));
    assoc->add_option("--seed", assoc_seed, "basis search seed");
    assoc->add_option("--budget", assoc_budget, "basis search budget");
    assoc->add_option("--enum-limit", assoc_enum, "span-size cap for brute-force cross-checks");
    assoc->add_option("--ell", assoc_ell,
                      "also lower the vector hull to this target before expanding");
    assoc->add_option("--out", assoc_out, "write the report as JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "run the randomized property suites");
    VerifyOptions vopt;
    std::vector<std::string> verify_suites;
    std::string verify_out;
    verify->add_option("--seed", vopt.seed, "master seed");
    verify->add_option("--trials", vopt.trials, "random codes per suite and grid point")
        ->check(CLI::PositiveNumber);
    verify->add_option("--grid", vopt.grid, "field/length grid: small or full")
        ->check(CLI::IsMember({"small", "full"}));
    verify->add_option("--enum-limit", vopt.enum_limit,
                       "span-size cap for brute-force cross-checks");
    verify->add_option("--budget", vopt.basis_budget, "self-dual basis search budget");
    verify->add_option("--checks,--suites", verify_suites,
                       "comma-separated suite names (default: all)")
        ->delimiter(',');
    verify->add_option("--out", verify_out, "write the machine-readable report as JSON");

    // explore
    auto* explore = app.add_subcommand(
        "explore", "search all invertible base-field moves on tiny codes for hull "
                   "dimensions the block construction cannot reach");
    int x_p = 2, x_e = 1, x_m = 2, x_n = 4, x_k = 2, x_trials = 20;
    std::uint64_t x_seed = 0, x_budget = 1 << 16;
    std::string explore_out;
    explore->add_option("--p", x_p, "characteristic")->check(CLI::PositiveNumber);
    explore->add_option("--e", x_e, "base-field degree over the prime field")
        ->check(CLI::PositiveNumber);
    explore->add_option("--m", x_m, "extension degree")->check(CLI::PositiveNumber);
    explore->add_option("--n", x_n, "code length")->check(CLI::PositiveNumber);
    explore->add_option("--k", x_k, "code dimension")->check(CLI::PositiveNumber);
    explore->add_option("--trials", x_trials, "number of random codes to sample")
        ->check(CLI::PositiveNumber);
    explore->add_option("--seed", x_seed, "random seed");
    explore->add_option("--budget", x_budget,
                        "max matrices to examine (exhaustive when q^(n*n) fits; "
                        "0 = inconclusive)");
    explore->add_option("--out", explore_out, "write the survey as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int rc = app.exit(ex);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*demo) return run_demo(demo_data, demo_only, demo_out);
        if (*sample) return run_sample(s_p, s_e, s_m, s_n, s_k, s_seed, sample_out);
        if (*reduce) return run_reduce(reduce_in, reduce_ell, reduce_out);
        if (*lcd) return run_lcd(lcd_in, lcd_out);
        if (*assoc)
            return run_associate(assoc_in, assoc_basis, assoc_seed, assoc_budget, assoc_ell,
                                 assoc_enum, assoc_out);
        if (*verify) return run_verify(vopt, verify_suites, verify_out);
        if (*explore)
            return run_explore(x_p, x_e, x_m, x_n, x_k, x_trials, x_seed, x_budget,
                               explore_out);
    } catch (const ParseError& ex) {
        std::fprintf(stderr, "input error: %s\n", ex.what());
        return kExitUsage;
    } catch (const InadmissibleTargetError& ex) {
        std::fprintf(stderr, "invalid target: %s\n", ex.what());
        return kExitUsage;
    } catch (const ParityError& ex) {
        std::fprintf(stderr, "impossible request: %s\n", ex.what());
        return kExitUsage;
    } catch (const Error& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return kExitCheckFailure;
    }
    return kExitUsage;
}
