#include "rmhull/rank_code.hpp"

#include "rmhull/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace rmhull {

namespace {

int leading_col(const Matrix& m, int row) {
    for (int j = 0; j < m.cols(); ++j)
        if (!m.tower()->top_is_zero(m.at(row, j))) return j;
    return -1;
}

} // namespace

RankCode RankCode::make(const Tower& tw, const Matrix& generator) {
    if (!same_tower(tw, generator.tower()))
        throw Error("RankCode::make: generator belongs to a different tower");
    if (generator.level() != Level::top)
        throw Error("RankCode::make: generator must live at the top level");
    if (generator.cols() < 1)
        throw Error("RankCode::make: ambient dimension must be positive");
    RowSpace space = RowSpace::from_matrix(generator);
    if (space.dim() == 0)
        throw Error("RankCode::make: generator has rank 0; use zero_code for the trivial code");
    return RankCode(tw, space.basis(), generator.cols());
}

RankCode RankCode::zero_code(const Tower& tw, int n) {
    if (n < 1) throw Error("RankCode::zero_code: ambient dimension must be positive");
    return RankCode(tw, Matrix::zeros(tw, Level::top, 0, n), n);
}

RankCode RankCode::with_chain(std::vector<Witness> chain) const {
    RankCode out = *this;
    out.chain_ = std::move(chain);
    return out;
}

bool RankCode::operator==(const RankCode& o) const {
    return same_tower(tower_, o.tower_) && n_ == o.n_ && gen_ == o.gen_;
}

std::string code_id(const RankCode& c) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ull;
        }
    };
    const Tower& tw = c.tower();
    eat(std::uint64_t(tw->p()));
    eat(std::uint64_t(tw->e()));
    eat(std::uint64_t(tw->m()));
    eat(std::uint64_t(c.n()));
    eat(std::uint64_t(c.k()));
    for (int i = 0; i < c.k(); ++i)
        for (int j = 0; j < c.n(); ++j)
            for (int d : c.generator().at(i, j).digits) eat(std::uint64_t(d));
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

RankCode dual(const RankCode& c) {
    RowSpace ker = kernel(c.generator());
    if (ker.dim() == 0) return RankCode::zero_code(c.tower(), c.n());
    return RankCode::make(c.tower(), ker.basis());
}

int rank_weight(const Tower& tw, const Matrix& row) {
    if (row.rows() != 1 || row.level() != Level::top)
        throw Error("rank_weight: expected a 1 x n top-level row");
    Matrix coords = Matrix::zeros(tw, Level::mid, tw->m(), row.cols());
    for (int i = 0; i < row.cols(); ++i)
        for (int j = 0; j < tw->m(); ++j) coords.set(j, i, tw->mid_coeff(row.at(0, i), j));
    return rank(coords);
}

int hull_dim(const RankCode& c) {
    if (c.k() == 0) return 0;
    const Matrix& g = c.generator();
    return c.k() - rank(g * g.transpose());
}

RankCode hull_code(const RankCode& c) {
    if (c.k() == 0) return RankCode::zero_code(c.tower(), c.n());
    RowSpace cap = intersect(c.row_space(), dual(c).row_space());
    if (cap.dim() == 0) return RankCode::zero_code(c.tower(), c.n());
    return RankCode::make(c.tower(), cap.basis());
}

bool is_lcd(const RankCode& c) { return hull_dim(c) == 0; }

RankCode apply_witness(const RankCode& c, const Matrix& m) {
    if (m.level() != Level::mid)
        throw Error("apply_witness: equivalence matrices live over the base field");
    if (m.rows() != c.n() || m.cols() != c.n())
        throw Error("apply_witness: matrix shape does not match the ambient dimension");
    int r = rank(m);
    if (r < c.n()) throw SingularError("apply_witness: matrix is not invertible", r);
    if (c.k() == 0) return c;  // nothing to move; keep the chain as-is
    RankCode out = RankCode::make(c.tower(), c.generator() * lift(m));
    std::vector<Witness> chain = c.witness_chain();
    chain.push_back(Witness{m, code_id(c), code_id(out)});
    return out.with_chain(std::move(chain));
}

Witness identity_witness(const RankCode& c) {
    std::string id = code_id(c);
    return Witness{Matrix::identity(c.tower(), Level::mid, c.n()), id, id};
}

Witness compose(const Witness& a, const Witness& b) {
    if (a.target != b.source)
        throw Error("compose: witness chain mismatch (" + a.target + " vs " + b.source + ")");
    return Witness{a.m * b.m, a.source, b.target};
}

Witness inverse_witness(const Witness& w) { return Witness{inverse(w.m), w.target, w.source}; }

bool chain_reproduces(const RankCode& origin, const RankCode& derived) {
    const auto& chain = derived.witness_chain();
    if (chain.empty()) return origin == derived;
    if (chain.front().source != code_id(origin)) return false;
    if (chain.back().target != code_id(derived)) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (chain[i].target != chain[i + 1].source) return false;
    Matrix prod = chain.front().m;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i].m.rows() != prod.cols()) return false;
        prod = prod * chain[i].m;
    }
    if (prod.rows() != origin.n() || rank(prod) != origin.n()) return false;
    if (origin.k() != derived.k()) return false;
    if (origin.k() == 0) return true;
    RowSpace moved = RowSpace::from_matrix(origin.generator() * lift(prod));
    return moved == derived.row_space();
}

StandardForm standardize_hull(const RankCode& c) {
    const Tower& tw = c.tower();
    const int n = c.n(), k = c.k();
    if (k == 0) throw Error("standardize_hull: the zero code has no generator to standardize");

    RankCode hull = hull_code(c);
    const int h = hull.k();

    // Column permutation moving the hull basis pivots to the front, keeping
    // every other column in its original relative order.
    std::vector<int> perm;
    std::vector<char> taken(std::size_t(n), 0);
    for (int i = 0; i < h; ++i) {
        int piv = leading_col(hull.generator(), i);
        if (piv < 0) throw InternalError("standardize_hull: zero row in hull basis");
        perm.push_back(piv);
        taken[std::size_t(piv)] = 1;
    }
    for (int j = 0; j < n; ++j)
        if (!taken[std::size_t(j)]) perm.push_back(j);

    Matrix p = Matrix::permutation(tw, perm);
    RankCode permuted = apply_witness(c, p);
    Witness perm_witness = permuted.witness_chain().back();

    // Permuting the hull basis the same way gives the hull of the permuted
    // code, now of the shape [ I_h | A ].
    Matrix hp = h == 0 ? Matrix::zeros(tw, Level::top, 0, n)
                       : permute_cols(hull.generator(), perm);
    if (!hp.submatrix(0, 0, h, h).is_identity())
        throw InternalError("standardize_hull: pivot block is not the identity");

    RowSpace full = permuted.row_space();
    RowSpace sub = h == 0 ? RowSpace::zero(tw, Level::top, n) : RowSpace::from_matrix(hp);
    Matrix comp = complete_basis(sub, full);

    // Clear the first h columns of the completion rows against [ I_h | A ].
    Matrix extra = comp.submatrix(h, 0, k - h, n);
    Matrix cleared = extra - extra.submatrix(0, 0, k - h, h) * hp;
    if (!cleared.submatrix(0, 0, k - h, h).is_zero())
        throw InternalError("standardize_hull: elimination left nonzero entries");

    StandardForm out{permuted,
                     perm_witness,
                     vstack(hp, cleared),
                     hp.submatrix(0, h, h, n - h),
                     cleared.submatrix(0, h, k - h, n - h),
                     h};

    // Hull rows are orthogonal to everything: A A^T = -I_h and A B^T = 0.
    Matrix aat = out.A * out.A.transpose();
    if (!(aat + Matrix::identity(tw, Level::top, h)).is_zero())
        throw InternalError("standardize_hull: A A^T + I is nonzero");
    if (!(out.A * out.B.transpose()).is_zero())
        throw InternalError("standardize_hull: A B^T is nonzero");
    if (rank(out.B * out.B.transpose()) != k - h)
        throw InternalError("standardize_hull: B B^T is rank-deficient");
    if (RowSpace::from_matrix(out.std_gen) != full)
        throw InternalError("standardize_hull: standard form spans the wrong code");
    return out;
}

} // namespace rmhull
