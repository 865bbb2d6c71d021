#include "rmhull/verify.hpp"

#include "rmhull/enumerate.hpp"
#include "rmhull/errors.hpp"
#include "rmhull/rng.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace rmhull {

namespace {

std::uint64_t fnv64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

Json grid_point_to_json(const GridPoint& gp) {
    Json out = Json::object();
    out["p"] = gp.p;
    out["e"] = gp.e;
    out["m"] = gp.m;
    out["n"] = gp.n;
    return out;
}

/// Collects check counts and bounded failure records for one suite run.
class Checker {
public:
    Checker(SuiteResult& res, const VerifyOptions& opt) : res_(res), opt_(opt) {}

    void context(Json subject, std::uint64_t seed) {
        subject_ = std::move(subject);
        seed_ = seed;
    }

    void check(bool ok, const std::string& message) {
        ++res_.checks;
        if (!ok) record(message);
    }

    void record(const std::string& message) {
        ++res_.failure_count;
        if (int(res_.failures.size()) < opt_.max_recorded_failures)
            res_.failures.push_back(CheckFailure{res_.name, message, subject_, seed_});
    }

private:
    SuiteResult& res_;
    const VerifyOptions& opt_;
    Json subject_ = Json(nullptr);
    std::uint64_t seed_ = 0;
};

RankCode random_code(const Tower& tw, int n, int k, Rng& rng) {
    return RankCode::make(tw, random_full_rank(tw, Level::top, k, n, rng));
}

Json code_subject(const GridPoint& gp, const RankCode& c) {
    Json out = Json::object();
    out["grid"] = grid_point_to_json(gp);
    out["code"] = code_to_json(c);
    return out;
}

Matrix random_codeword(const RankCode& c, Rng& rng) {
    Matrix coeffs = random_matrix(c.tower(), Level::top, 1, c.k(), rng);
    return coeffs * c.generator();
}

// ---- suite bodies ----

void suite_field_laws(Checker& ck, const Tower& tw, const VerifyOptions& opt, Rng& rng) {
    // Surjectivity certificate: scan elements in enumeration order until one has a
    // nonzero trace (the vanishing locus is a proper subspace, so a witness exists).
    bool trace_hits_nonzero = false;
    for (std::uint64_t i = 0; i < tw->top_order() && !trace_hits_nonzero; ++i)
        trace_hits_nonzero = !tw->mid_is_zero(tw->field_trace(tw->top(i)));
    ck.check(trace_hits_nonzero, "trace vanishes on the entire extension field");
    for (int t = 0; t < opt.trials; ++t) {
        MidElement a = random_mid(tw, rng), b = random_mid(tw, rng), c = random_mid(tw, rng);
        ck.check(tw->mid_add(tw->mid_add(a, b), c) == tw->mid_add(a, tw->mid_add(b, c)),
                 "base-field addition is not associative");
        ck.check(tw->mid_mul(a, b) == tw->mid_mul(b, a), "base-field product is not commutative");
        ck.check(tw->mid_mul(a, tw->mid_add(b, c)) ==
                     tw->mid_add(tw->mid_mul(a, b), tw->mid_mul(a, c)),
                 "base field is not distributive");
        ck.check(tw->mid_add(a, tw->mid_neg(a)) == tw->mid_zero(),
                 "base-field negation fails");
        if (!tw->mid_is_zero(a))
            ck.check(tw->mid_is_one(tw->mid_mul(a, tw->mid_inv(a))),
                     "base-field inverse fails");

        TopElement x = random_top(tw, rng), y = random_top(tw, rng), z = random_top(tw, rng);
        ck.check(tw->top_mul(x, tw->top_add(y, z)) ==
                     tw->top_add(tw->top_mul(x, y), tw->top_mul(x, z)),
                 "extension field is not distributive");
        ck.check(tw->top_sub(x, x) == tw->top_zero(), "extension-field subtraction fails");
        if (!tw->top_is_zero(x))
            ck.check(tw->top_is_one(tw->top_mul(x, tw->top_inv(x))),
                     "extension-field inverse fails");

        // the q-power map is a field automorphism fixing exactly the base field
        TopElement fx = tw->frobenius(x, 1);
        ck.check(tw->frobenius(tw->top_add(x, y), 1) == tw->top_add(fx, tw->frobenius(y, 1)),
                 "q-power map is not additive");
        ck.check(tw->frobenius(tw->top_mul(x, y), 1) == tw->top_mul(fx, tw->frobenius(y, 1)),
                 "q-power map is not multiplicative");
        ck.check(tw->frobenius(x, tw->m()) == x, "m-fold q-power map is not the identity");
        ck.check(tw->frobenius(tw->embed(a), 1) == tw->embed(a),
                 "q-power map moves a base-field constant");

        // trace: q-linear onto the base field, invariant under the q-power map
        ck.check(tw->field_trace(tw->top_add(x, y)) ==
                     tw->mid_add(tw->field_trace(x), tw->field_trace(y)),
                 "trace is not additive");
        ck.check(tw->field_trace(tw->top_mul(tw->embed(a), x)) ==
                     tw->mid_mul(a, tw->field_trace(x)),
                 "trace is not base-field linear");
        ck.check(tw->field_trace(fx) == tw->field_trace(x),
                 "trace changes under the q-power map");
    }
}

void suite_linalg(Checker& ck, const Tower& tw, const GridPoint& gp, const VerifyOptions& opt,
                  Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        for (Level lv : {Level::mid, Level::top}) {
            int r = 1 + int(rng.below(4)), c = 1 + int(rng.below(std::uint64_t(gp.n)));
            Matrix m = random_matrix(tw, lv, r, c, rng);
            RrefResult rr = rref(m);
            ck.check(rr.transform * m == rr.r, "row reduction transform does not reproduce");
            ck.check(rank(rr.transform) == r, "row reduction transform is singular");
            ck.check(int(rr.pivots.size()) == rank(m), "pivot count disagrees with rank");
            ck.check(rank(m) == rank(m.transpose()), "row and column ranks differ");
            RowSpace ker = kernel(m);
            ck.check(ker.dim() == c - rank(m), "kernel dimension is wrong");
            if (ker.dim() > 0)
                ck.check((m * ker.basis().transpose()).is_zero(),
                         "kernel vectors are not annihilated");
            int sq = 2 + int(rng.below(3));
            Matrix a = random_matrix(tw, lv, sq, sq, rng);
            Matrix b = random_matrix(tw, lv, sq, sq, rng);
            ck.check(determinant(a * b) == tw->top_mul(determinant(a), determinant(b)),
                     "determinant is not multiplicative");
            ck.check(determinant(a.transpose()) == determinant(a),
                     "determinant changes under transpose");
            Matrix inv = inverse(random_invertible(tw, lv, sq, rng));
            ck.check(rank(inv) == sq, "inverse is singular");
        }
        // intersection and sum dimensions match on random spaces
        Matrix u = random_matrix(tw, Level::top, 2, gp.n, rng);
        Matrix v = random_matrix(tw, Level::top, 2, gp.n, rng);
        RowSpace su = RowSpace::from_matrix(u), sv = RowSpace::from_matrix(v);
        ck.check(intersect(su, sv).dim() + span_sum(su, sv).dim() == su.dim() + sv.dim(),
                 "intersection/sum dimension identity fails");
    }
}

void suite_duality(Checker& ck, const Tower& tw, const GridPoint& gp, const VerifyOptions& opt,
                   Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        RankCode d = dual(c);
        ck.check(c.k() + d.k() == gp.n, "dual dimension is not n - k");
        if (d.k() > 0)
            ck.check((c.generator() * d.generator().transpose()).is_zero(),
                     "code and dual are not orthogonal");
        ck.check(dual(d) == c, "double dual is not the original code");
        ck.check(hull_code(c) == hull_code(d), "code and dual have different hulls");
        ck.check(hull_dim(c) == hull_code(c).k(),
                 "hull dimension formula disagrees with the intersection");
    }
    RankCode z = RankCode::zero_code(tw, gp.n);
    ck.check(dual(z).k() == gp.n, "dual of the zero code is not the full space");
    ck.check(hull_dim(z) == 0, "zero code has a nonzero hull");
}

void suite_rank_isometry(Checker& ck, const Tower& tw, const GridPoint& gp,
                         const VerifyOptions& opt, Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        Matrix m = random_invertible(tw, Level::mid, gp.n, rng);
        for (int w = 0; w < 4; ++w) {
            Matrix word = random_codeword(c, rng);
            int rw = rank_weight(tw, word);
            ck.check(rank_weight(tw, word * lift(m)) == rw,
                     "base-field column operations changed a rank weight");
            TopElement lambda = random_top_nonzero(tw, rng);
            ck.check(rank_weight(tw, word.scaled(lambda)) == rw,
                     "scaling changed a rank weight");
            ck.check(rw <= std::min(gp.n, tw->m()), "rank weight exceeds its cap");
        }
        if (span_size(tw, Level::top, c.k(), opt.enum_limit)) {
            std::vector<int> before, after;
            RankCode moved = apply_witness(c, m);
            enumerate_span(c.generator(), opt.enum_limit, [&](const std::vector<TopElement>& w) {
                before.push_back(rank_weight(tw, Matrix::row_vector(tw, Level::top, w)));
            });
            enumerate_span(moved.generator(), opt.enum_limit,
                           [&](const std::vector<TopElement>& w) {
                               after.push_back(rank_weight(tw, Matrix::row_vector(tw, Level::top, w)));
                           });
            std::sort(before.begin(), before.end());
            std::sort(after.begin(), after.end());
            ck.check(before == after,
                     "rank-weight distribution changed under an invertible move");
        }
    }
}

void suite_reduction_blocks(Checker& ck, const Tower& tw, const VerifyOptions& opt, Rng& rng) {
    (void)rng;
    (void)opt;
    for (int s = 1; s <= 10; ++s) {
        if (tw->q() <= 3 && s == 1) {
            bool threw = false;
            try {
                (void)reduction_block(tw, s);
            } catch (const NoConstructionError&) {
                threw = true;
            }
            ck.check(threw, "size-1 block over a tiny field should be refused");
            continue;
        }
        Matrix y = reduction_block(tw, s);
        ck.check(y.rows() == s && y.cols() == s, "block has the wrong shape");
        ck.check(rank(y) == s, "block is singular");
        ck.check(rank(y * y.transpose() - Matrix::identity(tw, Level::mid, s)) == s,
                 "block gram defect is singular");
    }
}

void suite_hull_reduction(Checker& ck, const Tower& tw, const GridPoint& gp,
                          const VerifyOptions& opt, Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        StandardForm sf = standardize_hull(c);
        int h = sf.h;
        ck.check(h == hull_dim(c), "standard form found a different hull dimension");
        ck.check(sf.permuted.row_space().dim() == RowSpace::from_matrix(sf.std_gen).dim() &&
                     RowSpace::from_matrix(sf.std_gen) == sf.permuted.row_space(),
                 "standard generator spans a different code");
        if (h > 0) {
            Matrix aat = sf.A * sf.A.transpose();
            ck.check((aat + Matrix::identity(tw, Level::top, h)).is_zero(),
                     "leading block self-product is not minus the identity");
            if (k > h)
                ck.check((sf.A * sf.B.transpose()).is_zero(),
                         "leading and trailing blocks are not orthogonal");
        }
        if (k > h)
            ck.check(rank(sf.B * sf.B.transpose()) == k - h,
                     "trailing block gram has the wrong rank");
        for (int ell : admissible_targets(tw, h)) {
            ReductionResult r = reduce_hull(c, ell);
            ck.check(hull_dim(r.output) == ell, "reduction missed the target (formula route)");
            ck.check(hull_code(r.output).k() == ell,
                     "reduction missed the target (intersection route)");
            ck.check(chain_reproduces(c, r.output), "witness chain does not replay");
            ck.check(r.plan.ell == ell && r.plan.h == h, "plan does not match the request");
        }
        if (tw->q() <= 3 && h >= 1) {
            bool threw = false;
            try {
                (void)reduce_hull(c, h - 1);
            } catch (const InadmissibleTargetError&) {
                threw = true;
            }
            ck.check(threw, "target h-1 must be refused over tiny fields");
        }
        bool threw = false;
        try {
            (void)reduce_hull(c, h + 1);
        } catch (const InadmissibleTargetError&) {
            threw = true;
        }
        ck.check(threw, "targets above the hull dimension must be refused");
    }
}

void suite_lcd_small_q(Checker& ck, const Tower& tw, const GridPoint& gp,
                       const VerifyOptions& opt, Rng& rng) {
    if (tw->q() > 3) return;  // this suite checks the small-field dispatch only
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        int h = hull_dim(c);
        LcdResult r = make_lcd(c);
        ck.check(is_lcd(r.output), "result is not intersection-free");
        if (h == 0)
            ck.check(r.route == LcdRoute::already_lcd, "trivial case took a construction route");
        else if (h == 1)
            ck.check(r.route == LcdRoute::unit_adjustment, "h = 1 must take the unit route");
        else
            ck.check(r.route == LcdRoute::block_reduction, "h >= 2 must take the block route");
        if (r.route == LcdRoute::unit_adjustment) {
            const UnitAdjustment& a = *r.adjustment;
            const Matrix& v = a.certificate.v;
            const Matrix& A = a.standard.A;
            const Matrix& B = a.standard.B;
            Matrix S = B * B.transpose();
            ck.check(S == a.certificate.S, "certificate S is not the trailing gram");
            Matrix P = B.transpose() * inverse(S) * B;
            ck.check(P == a.certificate.P, "certificate P is not the projector");
            Matrix Q = Matrix::identity(tw, Level::top, gp.n - 1) - P;
            ck.check(Q == a.certificate.Q, "certificate Q is not the complement");
            Matrix vl = lift(v);
            TopElement quad = (vl * Q * vl.transpose()).at(0, 0);
            ck.check(quad == a.certificate.theta, "certificate theta is not v Q v^T");
            TopElement lin = (vl * A.transpose()).at(0, 0);
            TopElement fv = tw->top_add(quad, tw->top_add(lin, lin));
            ck.check(fv == a.certificate.fv, "certificate value is not v Q v^T + 2 v A^T");
            ck.check(!tw->top_is_zero(fv), "certificate value must be a unit");
            Matrix moved = a.standard.std_gen * lift(a.M);
            ck.check(determinant(moved * moved.transpose()) == tw->top_mul(determinant(S), fv),
                     "determinant certificate identity fails");
            ck.check(RowSpace::from_matrix(moved) == a.output.row_space(),
                     "adjusted generator spans a different code than the output");
            ck.check(chain_reproduces(c, a.output), "witness chain does not replay");
        }
    }
}

void suite_lcd_total(Checker& ck, const Tower& tw, const GridPoint& gp, const VerifyOptions& opt,
                     Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        LcdResult r = make_lcd(c);
        ck.check(is_lcd(r.output), "result still meets its dual");
        ck.check(hull_dim(r.output) == 0 && hull_code(r.output).k() == 0,
                 "the two hull routes disagree on the result");
        ck.check(r.output.k() == c.k() && r.output.n() == c.n(),
                 "the construction changed the code parameters");
        ck.check(chain_reproduces(c, r.output), "witness chain does not replay");
    }
}

void suite_transfer(Checker& ck, const Tower& tw, const GridPoint& gp, const VerifyOptions& opt,
                    Rng& rng) {
    if (tw->p() != 2 && tw->m() % 2 == 0) {
        bool threw = false;
        try {
            (void)find_self_dual_basis(tw, rng.next(), 1000);
        } catch (const ParityError&) {
            threw = true;
        }
        ck.check(threw, "parity obstruction was not reported");
        return;
    }
    ExtensionBasis sd = find_self_dual_basis(tw, rng.next(), opt.basis_budget);
    ck.check(sd.self_dual && sd.gram.is_identity(), "search returned a non-self-dual basis");
    ExtensionBasis bd = dual_basis(tw, sd);
    ck.check(bd.gammas == sd.gammas, "a self-dual basis must equal its dual");
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        MatrixCode mc = associate(c, sd);
        ck.check(mc.dim() == tw->m() * k, "expansion dimension is not m k");
        ck.check(matrix_hull_dim(mc) == tw->m() * hull_dim(c),
                 "matrix hull is not m times the vector hull");
        ck.check(matrix_hull(mc) == associate(hull_code(c), sd),
                 "matrix hull is not the expansion of the vector hull");
        Matrix x = random_matrix(tw, Level::top, 1, gp.n, rng);
        Matrix y = random_matrix(tw, Level::top, 1, gp.n, rng);
        Matrix fx = rho_flatten(coordinate_matrix(tw, sd, x));
        Matrix fy = rho_flatten(coordinate_matrix(tw, sd, y));
        ck.check(tw->embed(trace_product(tw, x, y)) == (fx * fy.transpose()).at(0, 0),
                 "trace pairing disagrees with the flattened dot product");
    }
    int k = 1 + int(rng.below(std::uint64_t(gp.n)));
    RankCode c = random_code(tw, gp.n, k, rng);
    ck.context(code_subject(gp, c), 0);
    ChainReport rep = extended_block_hull_chain(c, sd, opt.enum_limit);
    ck.check(rep.all_ok, "extended consistency chain failed");
    ck.check(rep.matrix_hull == rep.expected, "chain dimensions disagree");
}

void suite_witness_chain(Checker& ck, const Tower& tw, const GridPoint& gp,
                         const VerifyOptions& opt, Rng& rng) {
    for (int t = 0; t < opt.trials; ++t) {
        int k = 1 + int(rng.below(std::uint64_t(gp.n)));
        RankCode c = random_code(tw, gp.n, k, rng);
        ck.context(code_subject(gp, c), 0);
        Matrix m1 = random_invertible(tw, Level::mid, gp.n, rng);
        Matrix m2 = random_invertible(tw, Level::mid, gp.n, rng);
        RankCode s1 = apply_witness(c, m1);
        RankCode s2 = apply_witness(s1, m2);
        ck.check(chain_reproduces(c, s2), "two-step chain does not replay");
        ck.check(int(s2.witness_chain().size()) == 2, "chain length is wrong");
        Witness w12 = compose(s1.witness_chain().back(), s2.witness_chain().back());
        ck.check(apply_witness(c, w12.m).row_space() == s2.row_space(),
                 "composed witness lands elsewhere");
        Witness inv = inverse_witness(s2.witness_chain().back());
        ck.check(apply_witness(s2, inv.m).row_space() == s1.row_space(),
                 "inverse witness does not undo its step");
        std::vector<int> perm(std::size_t(gp.n), 0);
        for (int i = 0; i < gp.n; ++i) perm[std::size_t(i)] = i;
        for (int i = gp.n - 1; i > 0; --i)
            std::swap(perm[std::size_t(i)], perm[std::size_t(rng.below(std::uint64_t(i + 1)))]);
        Matrix pm = Matrix::permutation(tw, perm);
        ck.check(hull_dim(apply_witness(c, pm)) == hull_dim(c),
                 "a permutation changed the hull dimension");
    }
}

} // namespace

std::vector<GridPoint> default_grid(const std::string& name) {
    std::vector<GridPoint> small{
        {2, 1, 2, 4}, {2, 1, 2, 6}, {2, 1, 3, 4}, {2, 1, 3, 6}, {2, 1, 1, 5},
        {3, 1, 2, 4}, {3, 1, 2, 6}, {3, 1, 3, 4}, {3, 1, 1, 5},
        {2, 2, 2, 4}, {2, 2, 2, 6}, {2, 2, 3, 4},
        {5, 1, 2, 4}, {5, 1, 2, 6}, {5, 1, 3, 4}, {5, 1, 1, 5},
    };
    if (name == "small") return small;
    if (name == "full") {
        std::vector<GridPoint> extra{
            {2, 1, 2, 7}, {2, 1, 3, 7}, {3, 1, 2, 7}, {3, 1, 3, 6}, {3, 2, 2, 4},
            {3, 2, 2, 5}, {2, 3, 2, 4}, {2, 3, 2, 5}, {7, 1, 2, 5}, {7, 1, 3, 4},
            {2, 2, 2, 7}, {5, 1, 2, 7},
        };
        small.insert(small.end(), extra.begin(), extra.end());
        return small;
    }
    throw Error("unknown grid \"" + name + "\" (expected \"small\" or \"full\")");
}

std::vector<std::string> suite_names() {
    return {"field_laws",     "linalg",      "duality",     "rank_isometry",
            "reduction_blocks", "hull_reduction", "lcd_small_q", "lcd_total",
            "transfer",       "witness_chain"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw Error("unknown suite \"" + name + "\"");
    SuiteResult res;
    res.name = name;
    Checker ck(res, opt);
    auto grid = default_grid(opt.grid);
    for (std::size_t idx = 0; idx < grid.size(); ++idx) {
        const GridPoint& gp = grid[idx];
        std::uint64_t child_seed =
            Rng::mix(opt.seed ^ Rng::mix(fnv64(name) ^ (0x9e3779b97f4a7c15ull * (idx + 1))));
        Rng rng(child_seed);
        ck.context(Json{{"grid", grid_point_to_json(gp)}}, child_seed);
        try {
            auto tw = FieldTower::make(gp.p, gp.e, gp.m);
            if (name == "field_laws")
                suite_field_laws(ck, tw, opt, rng);
            else if (name == "linalg")
                suite_linalg(ck, tw, gp, opt, rng);
            else if (name == "duality")
                suite_duality(ck, tw, gp, opt, rng);
            else if (name == "rank_isometry")
                suite_rank_isometry(ck, tw, gp, opt, rng);
            else if (name == "reduction_blocks")
                suite_reduction_blocks(ck, tw, opt, rng);
            else if (name == "hull_reduction")
                suite_hull_reduction(ck, tw, gp, opt, rng);
            else if (name == "lcd_small_q")
                suite_lcd_small_q(ck, tw, gp, opt, rng);
            else if (name == "lcd_total")
                suite_lcd_total(ck, tw, gp, opt, rng);
            else if (name == "transfer")
                suite_transfer(ck, tw, gp, opt, rng);
            else
                suite_witness_chain(ck, tw, gp, opt, rng);
        } catch (const Error& ex) {
            ck.record(std::string("unexpected error: ") + ex.what());
        }
    }
    return res;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    for (const auto& name : names) out.push_back(run_suite(name, opt));
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed(); });
}

Json verify_report_to_json(const std::vector<SuiteResult>& results, const VerifyOptions& opt) {
    Json suites = Json::array();
    std::uint64_t total_checks = 0, total_failures = 0;
    for (const SuiteResult& r : results) {
        Json failures = Json::array();
        for (const CheckFailure& f : r.failures) {
            Json fj = Json::object();
            fj["suite"] = f.suite;
            fj["message"] = f.message;
            fj["seed"] = f.seed;
            fj["subject"] = f.subject;
            failures.push_back(std::move(fj));
        }
        Json sj = Json::object();
        sj["name"] = r.name;
        sj["checks"] = r.checks;
        sj["failures"] = r.failure_count;
        sj["passed"] = r.passed();
        sj["failure_records"] = std::move(failures);
        suites.push_back(std::move(sj));
        total_checks += r.checks;
        total_failures += r.failure_count;
    }
    Json options = Json::object();
    options["seed"] = opt.seed;
    options["trials"] = opt.trials;
    options["grid"] = opt.grid;
    options["enum_limit"] = opt.enum_limit;
    options["basis_budget"] = opt.basis_budget;
    Json out = Json::object();
    out["kind"] = "verification_report";
    out["version"] = kVersion;
    out["prng"] = kPrngName;
    out["options"] = std::move(options);
    out["total_checks"] = total_checks;
    out["total_failures"] = total_failures;
    out["all_passed"] = total_failures == 0;
    out["suites"] = std::move(suites);
    return out;
}

} // namespace rmhull
