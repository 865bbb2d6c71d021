#include "rmhull/hull_variation.hpp"

#include "rmhull/errors.hpp"

#include <algorithm>

namespace rmhull {

namespace {

Matrix unit_block_2(const Tower& tw) {
    return Matrix::of(tw, Level::mid, {{1, 0}, {1, 1}});
}

Matrix unit_block_3(const Tower& tw) {
    return Matrix::of(tw, Level::mid, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
}

/// Smallest enumerated base-field element with a != 0 and a^2 != 1.
MidElement scalar_entry(const Tower& tw) {
    for (std::uint64_t i = 2; i < tw->q(); ++i) {
        MidElement a = tw->mid(i);
        if (!tw->mid_is_one(tw->mid_mul(a, a))) return a;
    }
    throw NoConstructionError("no base-field scalar a with a != 0 and a^2 != 1 exists for q = " +
                              std::to_string(tw->q()));
}

/// Place `block` on the top-left diagonal of I_n.
Matrix corner_embed(const Matrix& block, int n) {
    Matrix out = Matrix::identity(block.tower(), block.level(), n);
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) out.set(i, j, block.at(i, j));
    return out;
}

} // namespace

Matrix reduction_block(const Tower& tw, int s) {
    if (s < 1) throw Error("reduction_block: block size must be positive");
    Matrix y = Matrix::identity(tw, Level::mid, s);
    if (tw->q() > 3) {
        y = y.scaled(tw->embed(scalar_entry(tw)));
    } else {
        if (s == 1)
            throw NoConstructionError(
                "no 1 x 1 block exists over q = " + std::to_string(tw->q()) +
                ": every invertible scalar there squares to 1, so Y Y^T - I_1 vanishes");
        int threes = s % 2 == 0 ? 0 : 1;
        int twos = (s - 3 * threes) / 2;
        std::vector<Matrix> blocks;
        for (int i = 0; i < twos; ++i) blocks.push_back(unit_block_2(tw));
        for (int i = 0; i < threes; ++i) blocks.push_back(unit_block_3(tw));
        y = block_diag(blocks);
    }
    if (rank(y) != s) throw InternalError("reduction_block: block is singular");
    Matrix defect = y * y.transpose() - Matrix::identity(tw, Level::mid, s);
    if (rank(defect) != s) throw InternalError("reduction_block: Y Y^T - I is rank-deficient");
    return y;
}

std::vector<int> admissible_targets(const Tower& tw, int h) {
    std::vector<int> out;
    for (int ell = 0; ell <= h; ++ell)
        if (is_admissible_target(tw, h, ell)) out.push_back(ell);
    return out;
}

bool is_admissible_target(const Tower& tw, int h, int ell) {
    if (ell < 0 || ell > h) return false;
    if (ell == h) return true;
    if (tw->q() <= 3 && ell == h - 1) return false;
    return true;
}

ReductionResult reduce_hull(const RankCode& c, int ell) {
    const Tower& tw = c.tower();
    StandardForm sf = standardize_hull(c);
    const int h = sf.h, n = c.n(), k = c.k();
    if (!is_admissible_target(tw, h, ell)) {
        std::string msg = "reduce_hull: target " + std::to_string(ell) +
                          " is not reachable from hull dimension " + std::to_string(h);
        if (tw->q() <= 3 && ell == h - 1)
            msg += " (over q = " + std::to_string(tw->q()) +
                   " the single-step block would be 1 x 1, which cannot be both invertible and"
                   " have Y Y^T - I invertible; use the unit-vector adjustment for hull 1,"
                   " or aim two steps down)";
        throw InadmissibleTargetError(msg);
    }

    const int s = h - ell;
    ReductionPlan plan;
    plan.h = h;
    plan.ell = ell;
    plan.s = s;
    plan.Y = s == 0 ? Matrix::identity(tw, Level::mid, 0) : reduction_block(tw, s);
    plan.X = corner_embed(plan.Y, h);
    plan.M = corner_embed(plan.X, n);

    RankCode output = apply_witness(sf.permuted, plan.M);

    // The moved generator [X A; 0 B] has Gram matrix diag(Y Y^T - I_s, 0, B B^T).
    Matrix moved = sf.std_gen * lift(plan.M);
    Matrix gram = moved * moved.transpose();
    Matrix expect = Matrix::zeros(tw, Level::top, k, k);
    Matrix defect = lift(plan.Y * plan.Y.transpose()) - Matrix::identity(tw, Level::top, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) expect.set(i, j, defect.at(i, j));
    Matrix bbt = sf.B * sf.B.transpose();
    for (int i = 0; i < k - h; ++i)
        for (int j = 0; j < k - h; ++j) expect.set(h + i, h + j, bbt.at(i, j));
    if (gram != expect)
        throw InternalError("reduce_hull: moved Gram matrix lacks the block-diagonal shape");
    if (hull_dim(output) != ell)
        throw InternalError("reduce_hull: output hull dimension is not the target");
    if (hull_code(output).k() != ell)
        throw InternalError("reduce_hull: intersection route disagrees with the target");

    Witness w = compose(sf.perm, output.witness_chain().back());
    return ReductionResult{std::move(output), std::move(sf), std::move(plan), std::move(w)};
}

UnitAdjustment make_lcd_h1(const RankCode& c) {
    const Tower& tw = c.tower();
    if (tw->q() > 3)
        throw Error("make_lcd_h1: only needed for q in {2,3}; use reduce_hull elsewhere");
    StandardForm sf = standardize_hull(c);
    if (sf.h != 1)
        throw Error("make_lcd_h1: hull dimension is " + std::to_string(sf.h) + ", not 1");
    const int n = c.n();

    Matrix s = sf.B * sf.B.transpose();            // invertible (k-1) x (k-1)
    Matrix p = sf.B.transpose() * inverse(s) * sf.B;
    Matrix q = Matrix::identity(tw, Level::top, n - 1) - p;

    // Pick a base-field unit vector with f(v) = v Q v^T + 2 v A^T != 0.
    Matrix v = Matrix::zeros(tw, Level::mid, 1, n - 1);
    int pick = -1;
    if (tw->q() == 2) {
        // some diagonal entry of Q is nonzero, else A Q A^T = A A^T = 1 fails
        for (int j = 0; j < n - 1 && pick < 0; ++j)
            if (!tw->top_is_zero(q.at(j, j))) pick = j;
        if (pick < 0) throw InternalError("make_lcd_h1: Q has zero diagonal over q = 2");
    } else {
        for (int j = 0; j < n - 1 && pick < 0; ++j)
            if (!tw->top_is_zero(sf.A.at(0, j))) pick = j;
        if (pick < 0) throw InternalError("make_lcd_h1: A vanishes although A A^T = -1");
    }
    v.set(0, pick, tw->mid_one());

    auto f_of = [&](const Matrix& vm) {
        Matrix vl = lift(vm);
        TopElement quad = (vl * q * vl.transpose()).at(0, 0);
        TopElement cross = (vl * sf.A.transpose()).at(0, 0);
        return std::pair{quad, tw->top_add(quad, tw->top_add(cross, cross))};
    };
    auto [theta, fv] = f_of(v);
    if (tw->top_is_zero(fv)) {
        // q = 3: f(-v) = v Q v^T - 2 v A^T = 2 v Q v^T when f(v) = 0
        v = v.scaled(tw->embed(tw->mid_neg(tw->mid_one())));
        auto retry = f_of(v);
        theta = retry.first;
        fv = retry.second;
    }
    if (tw->top_is_zero(fv)) throw InternalError("make_lcd_h1: no unit-vector choice works");

    Matrix m = Matrix::identity(tw, Level::mid, n);
    for (int j = 0; j < n - 1; ++j) m.set(0, j + 1, v.at(0, j));

    RankCode output = apply_witness(sf.permuted, m);

    // Schur identity: det of the moved Gram matrix equals det(S) f(v).
    Matrix moved = sf.std_gen * lift(m);
    Matrix gram = moved * moved.transpose();
    if (determinant(gram) != tw->top_mul(determinant(s), fv))
        throw InternalError("make_lcd_h1: determinant certificate does not match");
    if (hull_dim(output) != 0)
        throw InternalError("make_lcd_h1: output still has a nontrivial hull");
    if (hull_code(output).k() != 0)
        throw InternalError("make_lcd_h1: intersection route found a nontrivial hull");

    Witness w = compose(sf.perm, output.witness_chain().back());
    LcdCertificate cert{std::move(v), std::move(theta), std::move(fv),
                        std::move(q), std::move(s), std::move(p)};
    return UnitAdjustment{std::move(output), std::move(sf), std::move(m), std::move(cert),
                          std::move(w)};
}

std::string to_string(LcdRoute r) {
    switch (r) {
        case LcdRoute::already_lcd: return "already_lcd";
        case LcdRoute::block_reduction: return "block_reduction";
        case LcdRoute::unit_adjustment: return "unit_adjustment";
    }
    throw Error("to_string: unknown LcdRoute");
}

LcdResult make_lcd(const RankCode& c) {
    const int h = hull_dim(c);
    if (h == 0) return LcdResult{c, LcdRoute::already_lcd, std::nullopt, std::nullopt};
    if (c.tower()->q() <= 3 && h == 1) {
        UnitAdjustment adj = make_lcd_h1(c);
        RankCode out = adj.output;
        return LcdResult{std::move(out), LcdRoute::unit_adjustment, std::nullopt, std::move(adj)};
    }
    ReductionResult red = reduce_hull(c, 0);
    RankCode out = red.output;
    return LcdResult{std::move(out), LcdRoute::block_reduction, std::move(red), std::nullopt};
}

} // namespace rmhull
