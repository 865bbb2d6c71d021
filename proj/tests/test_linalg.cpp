#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhull/matrix.hpp"

#include <random>

using namespace rmhull;

namespace {

Matrix random_matrix(const Tower& tw, Level lv, int rows, int cols, std::mt19937_64& rng) {
    Matrix out = Matrix::zeros(tw, lv, rows, cols);
    std::uint64_t size = lv == Level::mid ? tw->q() : tw->top_order();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto idx = rng() % size;
            if (lv == Level::mid)
                out.set(i, j, tw->mid(idx));
            else
                out.set(i, j, tw->top(idx));
        }
    return out;
}

} // namespace

TEST_CASE("rref of an invertible 2x2 over F_4 is the identity") {
    auto tw = FieldTower::make(2, 1, 2);
    auto m = Matrix::of(tw, Level::top, {{2, 3}, {3, 2}}); // [[w, w^2], [w^2, w]]

    // oracle: the 2x2 determinant a*d - b*c, computed with field operations
    auto det = tw->top_sub(tw->top_mul(m.at(0, 0), m.at(1, 1)),
                           tw->top_mul(m.at(0, 1), m.at(1, 0)));
    REQUIRE_FALSE(tw->top_is_zero(det));
    CHECK(det == tw->top_one());

    auto res = rref(m);
    CHECK(res.r.is_identity());
    CHECK(res.pivots == std::vector<int>{0, 1});
    CHECK(res.transform * m == res.r);
    CHECK(determinant(m) == det);
}

TEST_CASE("rank of the small binary block is full") {
    auto tw = FieldTower::make(2, 1, 1);
    auto m = Matrix::of(tw, Level::mid, {{0, 1}, {1, 1}});
    CHECK(rank(m) == 2);
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937_64 rng(3);
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {3, 1, 2}, {2, 2, 1}, {5, 1, 1}, {2, 1, 3}}) {
        auto tw = FieldTower::make(p, e, m);
        for (int t = 0; t < 40; ++t) {
            int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
            auto a = random_matrix(tw, Level::top, rows, cols, rng);
            auto res = rref(a);
            CHECK(res.transform * a == res.r);
            CHECK(rank(res.transform) == rows); // transform invertible
            CHECK(std::is_sorted(res.pivots.begin(), res.pivots.end()));
            CHECK(rank(a) == rank(a.transpose()));
            CHECK(rref(res.r).r == res.r); // idempotent

            auto ker = kernel(a);
            CHECK(ker.dim() == cols - rank(a));
            for (int i = 0; i < ker.dim(); ++i) {
                auto prod = a * Matrix::row_vector(tw, Level::top, ker.basis().row(i)).transpose();
                CHECK(prod.is_zero());
            }
        }
    }
}

TEST_CASE("row space canonicalization is invariant under row operations") {
    std::mt19937_64 rng(17);
    auto tw = FieldTower::make(3, 1, 2);
    for (int t = 0; t < 30; ++t) {
        auto a = random_matrix(tw, Level::top, 3, 5, rng);
        auto u = RowSpace::from_matrix(a);
        // multiply by a random invertible matrix on the left: same row space
        Matrix g = random_matrix(tw, Level::top, 3, 3, rng);
        while (rank(g) < 3) g = random_matrix(tw, Level::top, 3, 3, rng);
        CHECK(RowSpace::from_matrix(g * a) == u);
        for (int i = 0; i < a.rows(); ++i) CHECK(u.contains_row(a.row(i)));
    }
}

TEST_CASE("intersection satisfies the dimension identity") {
    std::mt19937_64 rng(23);
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {3, 1, 2}, {2, 2, 2}, {5, 1, 1}}) {
        auto tw = FieldTower::make(p, e, m);
        for (int t = 0; t < 40; ++t) {
            int amb = 2 + int(rng() % 7);
            auto u = RowSpace::from_matrix(random_matrix(tw, Level::top, 1 + int(rng() % 4), amb, rng));
            auto v = RowSpace::from_matrix(random_matrix(tw, Level::top, 1 + int(rng() % 4), amb, rng));
            auto cap = intersect(u, v);
            auto cup = span_sum(u, v);
            CHECK(cap.dim() + cup.dim() == u.dim() + v.dim());
            CHECK(u.contains(cap));
            CHECK(v.contains(cap));
            CHECK(cup.contains(u));
            CHECK(cup.contains(v));
            CHECK(intersect(v, u) == cap);
        }
    }
}

TEST_CASE("complete_basis extends a subspace deterministically") {
    auto tw = FieldTower::make(2, 1, 2);
    auto g = Matrix::of(tw, Level::top, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    auto sub = RowSpace::from_matrix(g.submatrix(0, 0, 1, 4));
    auto full = RowSpace::from_matrix(g);
    auto got = complete_basis(sub, full);
    CHECK(got == g); // first row kept, second appended from full's basis

    // the completion spans full and starts with sub's basis
    CHECK(RowSpace::from_matrix(got) == full);
    CHECK(got.submatrix(0, 0, 1, 4) == sub.basis());

    auto other = RowSpace::from_matrix(Matrix::of(tw, Level::top, {{1, 0, 0, 0}}));
    CHECK_THROWS_AS((void)complete_basis(other, full), Error);
}

TEST_CASE("complete_basis on random nested spaces") {
    std::mt19937_64 rng(29);
    auto tw = FieldTower::make(3, 1, 2);
    for (int t = 0; t < 30; ++t) {
        int amb = 3 + int(rng() % 5);
        auto full = RowSpace::from_matrix(random_matrix(tw, Level::top, 2 + int(rng() % 3), amb, rng));
        if (full.dim() == 0) continue;
        // random subspace: combinations of full's basis rows
        auto mix = random_matrix(tw, Level::top, 1 + int(rng() % full.dim()), full.dim(), rng);
        auto sub = RowSpace::from_matrix(mix * full.basis());
        auto got = complete_basis(sub, full);
        CHECK(got.rows() == full.dim());
        CHECK(RowSpace::from_matrix(got) == full);
        for (int i = 0; i < sub.dim(); ++i) CHECK(got.row(i) == sub.basis().row(i));
    }
}

TEST_CASE("block assembly") {
    auto tw = FieldTower::make(2, 1, 2);
    auto z2 = Matrix::of(tw, Level::mid, {{1, 0}, {1, 1}});
    auto m = block_diag({z2, Matrix::identity(tw, Level::mid, 2)});
    CHECK(m == Matrix::of(tw, Level::mid, {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));

    auto e = embed_block(z2, 1, 2, 3, 4);
    CHECK(e.at(1, 2) == tw->top_one());
    CHECK(e.at(2, 2) == tw->top_one());
    CHECK(e.at(2, 3) == tw->top_one());
    CHECK(e.at(0, 0) == tw->top_zero());
    CHECK_THROWS_AS((void)embed_block(z2, 2, 0, 3, 4), Error);
}

TEST_CASE("lift and project move between levels") {
    auto tw = FieldTower::make(2, 1, 2);
    auto m = Matrix::of(tw, Level::mid, {{1, 0}, {1, 1}});
    auto lifted = lift(m);
    CHECK(lifted.level() == Level::top);
    CHECK(project_check(lifted) == m);

    auto w = Matrix::of(tw, Level::top, {{2}});
    CHECK_THROWS_AS((void)project_check(w), Error);
    CHECK_THROWS_AS(Matrix::zeros(tw, Level::mid, 1, 1).set(0, 0, tw->top(2)), Error);
}

TEST_CASE("inverse and singularity") {
    auto tw = FieldTower::make(3, 1, 2);
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        auto a = random_matrix(tw, Level::top, 4, 4, rng);
        if (rank(a) < 4) {
            try {
                (void)inverse(a);
                FAIL("expected SingularError");
            } catch (const SingularError& err) {
                CHECK(err.rank_found == rank(a));
            }
        } else {
            CHECK((inverse(a) * a).is_identity());
        }
    }
}

TEST_CASE("permutation matrices act by column selection") {
    auto tw = FieldTower::make(2, 1, 2);
    auto g = Matrix::of(tw, Level::top, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    std::vector<int> perm{2, 0, 3, 1};
    auto p = Matrix::permutation(tw, perm);
    CHECK(g * lift(p) == permute_cols(g, perm));
    CHECK((p * p.transpose()).is_identity());
}

TEST_CASE("shape and level mismatches are rejected") {
    auto tw = FieldTower::make(2, 1, 2);
    auto a = Matrix::zeros(tw, Level::top, 2, 3);
    auto b = Matrix::zeros(tw, Level::top, 3, 2);
    auto c = Matrix::zeros(tw, Level::mid, 2, 3);
    CHECK_THROWS_AS((void)(a + b), Error);
    CHECK_THROWS_AS((void)(a * a), Error);
    CHECK_THROWS_AS((void)(a + c), Error);
    auto u = RowSpace::from_matrix(a);
    auto v = RowSpace::from_matrix(b);
    CHECK_THROWS_AS((void)intersect(u, v), Error);
}
