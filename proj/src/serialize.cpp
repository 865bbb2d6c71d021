#include "rmhull/serialize.hpp"

#include "rmhull/errors.hpp"

#include <fstream>
#include <utility>

namespace rmhull {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw ParseError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + ": missing field \"" + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_number_integer())
        throw ParseError(path + "." + key + ": expected an integer");
    return v.get<int>();
}

std::string string_field(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_string()) throw ParseError(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key, const std::string& path) {
    const Json& v = field(j, key, path);
    if (!v.is_boolean()) throw ParseError(path + "." + key + ": expected a boolean");
    return v.get<bool>();
}

std::vector<int> digit_block(const Tower& tw, const Json& j, const std::string& path) {
    if (!j.is_array() || int(j.size()) != tw->e())
        throw ParseError(path + ": expected " + std::to_string(tw->e()) + " base-p digits");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& d = j[i];
        std::string dpath = path + "[" + std::to_string(i) + "]";
        if (!d.is_number_integer()) throw ParseError(dpath + ": expected an integer digit");
        int v = d.get<int>();
        if (v < 0 || v >= tw->p())
            throw ParseError(dpath + ": digit " + std::to_string(v) + " out of range for p = " +
                             std::to_string(tw->p()));
        out.push_back(v);
    }
    return out;
}

Json digits_to_json(const std::vector<int>& digits, int from, int count) {
    Json out = Json::array();
    for (int i = 0; i < count; ++i) out.push_back(digits[std::size_t(from + i)]);
    return out;
}

} // namespace

Json mid_to_json(const Tower& tw, const MidElement& x) {
    (void)tw;
    return digits_to_json(x.digits, 0, int(x.digits.size()));
}

MidElement mid_from_json(const Tower& tw, const Json& j, const std::string& path) {
    return tw->mid_from_digits(digit_block(tw, j, path));
}

Json top_to_json(const Tower& tw, const TopElement& x) {
    Json out = Json::array();
    for (int b = 0; b < tw->m(); ++b) out.push_back(digits_to_json(x.digits, b * tw->e(), tw->e()));
    return out;
}

TopElement top_from_json(const Tower& tw, const Json& j, const std::string& path) {
    if (!j.is_array() || int(j.size()) != tw->m())
        throw ParseError(path + ": expected " + std::to_string(tw->m()) +
                         " coordinate blocks, one per power of the extension generator");
    std::vector<int> digits;
    for (int b = 0; b < tw->m(); ++b) {
        auto block = digit_block(tw, j[std::size_t(b)], path + "[" + std::to_string(b) + "]");
        digits.insert(digits.end(), block.begin(), block.end());
    }
    return tw->top_from_digits(std::move(digits));
}

Json matrix_to_json(const Matrix& m) {
    const Tower& tw = m.tower();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) {
            if (m.level() == Level::mid)
                row.push_back(mid_to_json(tw, tw->try_project(m.at(r, c)).value()));
            else
                row.push_back(top_to_json(tw, m.at(r, c)));
        }
        entries.push_back(std::move(row));
    }
    Json out = Json::object();
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["level"] = m.level() == Level::mid ? "mid" : "top";
    out["entries"] = std::move(entries);
    return out;
}

Matrix matrix_from_json(const Tower& tw, const Json& j, const std::string& path) {
    int rows = int_field(j, "rows", path);
    int cols = int_field(j, "cols", path);
    if (rows < 0 || cols < 1)
        throw ParseError(path + ": rows must be >= 0 and cols >= 1");
    std::string level_s = string_field(j, "level", path);
    Level level;
    if (level_s == "mid")
        level = Level::mid;
    else if (level_s == "top")
        level = Level::top;
    else
        throw ParseError(path + ".level: expected \"mid\" or \"top\", got \"" + level_s + "\"");
    const Json& entries = field(j, "entries", path);
    if (!entries.is_array() || int(entries.size()) != rows)
        throw ParseError(path + ".entries: expected " + std::to_string(rows) + " rows");
    std::vector<std::vector<TopElement>> parsed;
    for (int r = 0; r < rows; ++r) {
        const Json& row = entries[std::size_t(r)];
        std::string rpath = path + ".entries[" + std::to_string(r) + "]";
        if (!row.is_array() || int(row.size()) != cols)
            throw ParseError(rpath + ": expected " + std::to_string(cols) + " entries");
        std::vector<TopElement> prow;
        for (int c = 0; c < cols; ++c) {
            std::string epath = rpath + "[" + std::to_string(c) + "]";
            if (level == Level::mid)
                prow.push_back(tw->embed(mid_from_json(tw, row[std::size_t(c)], epath)));
            else
                prow.push_back(top_from_json(tw, row[std::size_t(c)], epath));
        }
        parsed.push_back(std::move(prow));
    }
    return Matrix::from_rows(tw, level, cols, std::move(parsed));
}

Json tower_to_json(const Tower& tw) {
    Json out = Json::object();
    out["p"] = tw->p();
    out["e"] = tw->e();
    out["m"] = tw->m();
    return out;
}

Tower tower_from_json(const Json& j, const std::string& path) {
    int p = int_field(j, "p", path);
    int e = int_field(j, "e", path);
    int m = int_field(j, "m", path);
    try {
        return FieldTower::make(p, e, m);
    } catch (const Error& ex) {
        throw ParseError(path + ": " + ex.what());
    }
}

Json witness_to_json(const Witness& w) {
    Json out = Json::object();
    out["matrix"] = matrix_to_json(w.m);
    out["source"] = w.source;
    out["target"] = w.target;
    return out;
}

Witness witness_from_json(const Tower& tw, const Json& j, const std::string& path) {
    Witness w{matrix_from_json(tw, field(j, "matrix", path), path + ".matrix"),
              string_field(j, "source", path), string_field(j, "target", path)};
    if (w.m.level() != Level::mid)
        throw ParseError(path + ".matrix: witness matrices live over the base field");
    return w;
}

Json code_to_json(const RankCode& c) {
    Json out = Json::object();
    out["tower"] = tower_to_json(c.tower());
    out["n"] = c.n();
    out["k"] = c.k();
    out["id"] = code_id(c);
    out["generator"] = matrix_to_json(c.generator());
    Json chain = Json::array();
    for (const Witness& w : c.witness_chain()) chain.push_back(witness_to_json(w));
    out["witness_chain"] = std::move(chain);
    return out;
}

RankCode code_from_json(const Json& j, const std::string& path) {
    Tower tw = tower_from_json(field(j, "tower", path), path + ".tower");
    int n = int_field(j, "n", path);
    int k = int_field(j, "k", path);
    Matrix gen = matrix_from_json(tw, field(j, "generator", path), path + ".generator");
    if (gen.level() != Level::top)
        throw ParseError(path + ".generator: code generators live over the extension field");
    if (gen.cols() != n)
        throw ParseError(path + ".generator: has " + std::to_string(gen.cols()) +
                         " columns but n = " + std::to_string(n));
    if (k == 0 && gen.rows() != 0)
        throw ParseError(path + ".generator: k = 0 codes must store an empty generator");
    RankCode c = k == 0 ? RankCode::zero_code(tw, n) : [&] {
        try {
            return RankCode::make(tw, gen);
        } catch (const Error& ex) {
            throw ParseError(path + ".generator: " + std::string(ex.what()));
        }
    }();
    if (c.k() != k)
        throw ParseError(path + ": k = " + std::to_string(k) + " but the generator spans " +
                         std::to_string(c.k()) + " dimensions");
    const Json& chain = field(j, "witness_chain", path);
    if (!chain.is_array()) throw ParseError(path + ".witness_chain: expected an array");
    std::vector<Witness> ws;
    for (std::size_t i = 0; i < chain.size(); ++i)
        ws.push_back(witness_from_json(tw, chain[i],
                                       path + ".witness_chain[" + std::to_string(i) + "]"));
    return c.with_chain(std::move(ws));
}

Json basis_to_json(const Tower& tw, const ExtensionBasis& b) {
    Json gammas = Json::array();
    for (const TopElement& g : b.gammas) gammas.push_back(top_to_json(tw, g));
    Json out = Json::object();
    out["gammas"] = std::move(gammas);
    out["gram"] = matrix_to_json(b.gram);
    out["self_dual"] = b.self_dual;
    return out;
}

ExtensionBasis basis_from_json(const Tower& tw, const Json& j, const std::string& path) {
    const Json& gj = field(j, "gammas", path);
    if (!gj.is_array() || int(gj.size()) != tw->m())
        throw ParseError(path + ".gammas: expected " + std::to_string(tw->m()) + " elements");
    std::vector<TopElement> gammas;
    for (int i = 0; i < tw->m(); ++i)
        gammas.push_back(top_from_json(tw, gj[std::size_t(i)],
                                       path + ".gammas[" + std::to_string(i) + "]"));
    ExtensionBasis b = [&] {
        try {
            return make_basis(tw, std::move(gammas));
        } catch (const Error& ex) {
            throw ParseError(path + ".gammas: " + std::string(ex.what()));
        }
    }();
    Matrix gram = matrix_from_json(tw, field(j, "gram", path), path + ".gram");
    if (!(gram == b.gram))
        throw ParseError(path + ".gram: stored trace form disagrees with the recomputed one");
    if (bool_field(j, "self_dual", path) != b.self_dual)
        throw ParseError(path + ".self_dual: flag disagrees with the recomputed trace form");
    return b;
}

Json matrix_code_to_json(const MatrixCode& mc) {
    Json out = Json::object();
    out["tower"] = tower_to_json(mc.tower());
    out["mrows"] = mc.mrows();
    out["ncols"] = mc.ncols();
    out["dim"] = mc.dim();
    out["gen_rho"] = matrix_to_json(mc.gen_rho());
    return out;
}

MatrixCode matrix_code_from_json(const Json& j, const std::string& path) {
    Tower tw = tower_from_json(field(j, "tower", path), path + ".tower");
    int mrows = int_field(j, "mrows", path);
    int ncols = int_field(j, "ncols", path);
    int dim = int_field(j, "dim", path);
    Matrix gen = matrix_from_json(tw, field(j, "gen_rho", path), path + ".gen_rho");
    MatrixCode mc = [&] {
        try {
            return MatrixCode::make(tw, mrows, ncols, gen);
        } catch (const Error& ex) {
            throw ParseError(path + ".gen_rho: " + std::string(ex.what()));
        }
    }();
    if (mc.dim() != dim)
        throw ParseError(path + ": dim = " + std::to_string(dim) + " but the generator spans " +
                         std::to_string(mc.dim()) + " dimensions");
    return mc;
}

Json standard_form_to_json(const StandardForm& sf) {
    Json out = Json::object();
    out["h"] = sf.h;
    out["permutation"] = witness_to_json(sf.perm);
    out["standard_generator"] = matrix_to_json(sf.std_gen);
    out["A"] = matrix_to_json(sf.A);
    out["B"] = matrix_to_json(sf.B);
    return out;
}

Json reduction_to_json(const RankCode& input, const ReductionResult& r) {
    Json plan = Json::object();
    plan["h"] = r.plan.h;
    plan["ell"] = r.plan.ell;
    plan["s"] = r.plan.s;
    plan["Y"] = matrix_to_json(r.plan.Y);
    plan["X"] = matrix_to_json(r.plan.X);
    plan["M"] = matrix_to_json(r.plan.M);
    Json out = Json::object();
    out["kind"] = "hull_reduction";
    out["input"] = code_to_json(input);
    out["hull_before"] = r.plan.h;
    out["hull_after"] = r.plan.ell;
    out["standard_form"] = standard_form_to_json(r.standard);
    out["plan"] = std::move(plan);
    out["output"] = code_to_json(r.output);
    out["witness"] = witness_to_json(r.witness);
    return out;
}

Json adjustment_to_json(const RankCode& input, const UnitAdjustment& a) {
    Json cert = Json::object();
    const Tower& tw = input.tower();
    cert["v"] = matrix_to_json(a.certificate.v);
    cert["theta"] = top_to_json(tw, a.certificate.theta);
    cert["fv"] = top_to_json(tw, a.certificate.fv);
    cert["Q"] = matrix_to_json(a.certificate.Q);
    cert["S"] = matrix_to_json(a.certificate.S);
    cert["P"] = matrix_to_json(a.certificate.P);
    Json out = Json::object();
    out["kind"] = "unit_adjustment";
    out["input"] = code_to_json(input);
    out["hull_before"] = 1;
    out["hull_after"] = 0;
    out["standard_form"] = standard_form_to_json(a.standard);
    out["M"] = matrix_to_json(a.M);
    out["certificate"] = std::move(cert);
    out["output"] = code_to_json(a.output);
    out["witness"] = witness_to_json(a.witness);
    return out;
}

Json lcd_result_to_json(const RankCode& input, const LcdResult& r) {
    Json out = Json::object();
    out["kind"] = "lcd";
    out["route"] = to_string(r.route);
    out["input"] = code_to_json(input);
    out["output"] = code_to_json(r.output);
    out["reduction"] = r.reduction ? reduction_to_json(input, *r.reduction) : Json(nullptr);
    out["adjustment"] = r.adjustment ? adjustment_to_json(input, *r.adjustment) : Json(nullptr);
    return out;
}

Json chain_report_to_json(const ChainReport& rep) {
    Json steps = Json::array();
    for (const ChainStep& st : rep.steps) {
        Json s = Json::object();
        s["name"] = st.name;
        s["ok"] = st.ok;
        s["detail"] = st.detail;
        steps.push_back(std::move(s));
    }
    Json out = Json::object();
    out["kind"] = "extended_chain";
    out["all_ok"] = rep.all_ok;
    out["matrix_hull"] = rep.matrix_hull;
    out["expected"] = rep.expected;
    out["steps"] = std::move(steps);
    return out;
}

Json matrix_reduction_to_json(const RankCode& input, const ExtensionBasis& basis,
                              const MatrixReduction& mr) {
    Json out = Json::object();
    out["kind"] = "matrix_reduction";
    out["input"] = code_to_json(input);
    out["basis"] = basis_to_json(input.tower(), basis);
    out["matrix_hull"] = mr.matrix_hull;
    out["vector_output"] = code_to_json(mr.vector_output);
    out["matrix_output"] = matrix_code_to_json(mr.output);
    return out;
}

Json load_json_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError(file + ": cannot open file");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(file + ": " + ex.what());
    }
}

void save_json_file(const std::string& file, const Json& j) {
    std::ofstream out(file);
    if (!out) throw Error(file + ": cannot open file for writing");
    out << j.dump(2) << "\n";
    if (!out) throw Error(file + ": write failed");
}

} // namespace rmhull
