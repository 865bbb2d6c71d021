#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhull/enumerate.hpp"
#include "rmhull/rank_code.hpp"
#include "rmhull/rng.hpp"

#include <algorithm>
#include <map>

using namespace rmhull;

namespace {

// Independent oracle: rank of an integer matrix mod a prime, plain
// Gaussian elimination on ints with no library field code involved.
int int_rank_mod_p(std::vector<std::vector<int>> m, int p) {
    int rows = int(m.size());
    if (rows == 0) return 0;
    int cols = int(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[std::size_t(i)][std::size_t(c)] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[std::size_t(r)], m[std::size_t(piv)]);
        int lead = ((m[std::size_t(r)][std::size_t(c)] % p) + p) % p;
        int inv = 1;
        while (inv * lead % p != 1) ++inv;
        for (int i = r + 1; i < rows; ++i) {
            int f = ((m[std::size_t(i)][std::size_t(c)] % p) + p) % p * inv % p;
            for (int j = 0; j < cols; ++j)
                m[std::size_t(i)][std::size_t(j)] =
                    ((m[std::size_t(i)][std::size_t(j)] - f * m[std::size_t(r)][std::size_t(j)]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

// Independent oracle: count span members orthogonal to every generator row.
std::uint64_t hull_count_by_enumeration(const RankCode& c, std::uint64_t limit) {
    std::uint64_t count = 0;
    const Matrix& g = c.generator();
    bool done = enumerate_span(g, limit, [&](const std::vector<TopElement>& word) {
        auto row = Matrix::row_vector(c.tower(), Level::top, word);
        if ((g * row.transpose()).is_zero()) ++count;
    });
    REQUIRE(done);
    return count;
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

RankCode random_code(const Tower& tw, int n, int k, Rng& rng) {
    return RankCode::make(tw, random_full_rank(tw, Level::top, k, n, rng));
}

} // namespace

TEST_CASE("worked example: a self-orthogonal [4,2] code over F_4") {
    auto tw = FieldTower::make(2, 1, 2);
    auto g = Matrix::of(tw, Level::top, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    auto c = RankCode::make(tw, g);
    CHECK(c.k() == 2);
    CHECK(c.generator() == g); // already canonical
    CHECK((g * g.transpose()).is_zero());
    CHECK(hull_dim(c) == 2);
    CHECK(hull_code(c) == c);
    CHECK(hull_count_by_enumeration(c, 1 << 10) == 16); // whole code is its hull

    auto sf = standardize_hull(c);
    CHECK(sf.h == 2);
    CHECK(sf.std_gen == g);
    CHECK(sf.A == Matrix::of(tw, Level::top, {{2, 3}, {3, 2}}));
    CHECK(sf.B.rows() == 0);
    CHECK(chain_reproduces(c, sf.permuted));
}

TEST_CASE("worked example: a [4,2] code over F_4 with one-dimensional hull") {
    auto tw = FieldTower::make(2, 1, 2);
    auto g = Matrix::of(tw, Level::top, {{1, 2, 0, 3}, {0, 2, 0, 1}});
    auto c = RankCode::make(tw, g);
    CHECK(hull_dim(c) == 1);
    CHECK(hull_count_by_enumeration(c, 1 << 10) == 4);

    auto hull = hull_code(c);
    CHECK(hull.k() == 1);
    CHECK(hull.generator() == Matrix::of(tw, Level::top, {{1, 2, 0, 3}}));

    auto sf = standardize_hull(c);
    CHECK(sf.h == 1);
    CHECK(sf.std_gen == g); // the original generator is already standard
    CHECK(sf.A == Matrix::of(tw, Level::top, {{2, 0, 3}}));
    CHECK(sf.B == Matrix::of(tw, Level::top, {{2, 0, 1}}));
    CHECK(sf.permuted == c); // identity permutation
}

TEST_CASE("dual matches ambient-space enumeration") {
    auto tw = FieldTower::make(2, 1, 2);
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        auto c = random_code(tw, 3, 1 + int(rng.below(2)), rng);
        auto d = dual(c);
        CHECK(d.k() == c.n() - c.k());
        CHECK((c.generator() * d.generator().transpose()).is_zero());
        CHECK(dual(d) == c);

        // oracle: enumerate the whole ambient space and test orthogonality
        std::uint64_t members = 0;
        auto ambient = RankCode::make(tw, Matrix::identity(tw, Level::top, 3));
        bool done = enumerate_span(ambient.generator(), 1 << 10, [&](const std::vector<TopElement>& w) {
            auto row = Matrix::row_vector(tw, Level::top, w);
            bool orth = (c.generator() * row.transpose()).is_zero();
            if (orth) {
                ++members;
                CHECK(d.row_space().contains_row(w));
            }
        });
        REQUIRE(done);
        CHECK(members == pow_u64(4, d.k()));
    }
}

TEST_CASE("hull dimension: formula, intersection, and enumeration agree") {
    Rng rng(13);
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {3, 1, 1}, {2, 1, 3}, {2, 2, 1}}) {
        auto tw = FieldTower::make(p, e, m);
        for (int t = 0; t < 25; ++t) {
            int n = 2 + int(rng.below(4));
            int k = 1 + int(rng.below(std::uint64_t(n)));
            auto c = random_code(tw, n, k, rng);
            int viaFormula = hull_dim(c);
            auto hc = hull_code(c);
            CHECK(viaFormula == hc.k());
            CHECK(c.row_space().contains(hc.row_space()));
            CHECK(dual(c).row_space().contains(hc.row_space()));
            if (span_size(tw, Level::top, k, 1 << 12)) {
                CHECK(hull_count_by_enumeration(c, 1 << 12) ==
                      pow_u64(tw->top_order(), viaFormula));
            }
        }
    }
}

TEST_CASE("rank weight against an integer Gaussian elimination oracle") {
    auto tw = FieldTower::make(2, 1, 2);
    // hand values: 1 -> (1,0), w -> (0,1), w^2 -> (1,1)
    auto word = [&](std::vector<std::uint64_t> idx) {
        std::vector<TopElement> w;
        for (auto i : idx) w.push_back(tw->top(i));
        return Matrix::row_vector(tw, Level::top, w);
    };
    CHECK(rank_weight(tw, word({1, 2, 3})) == 2);
    CHECK(rank_weight(tw, word({1, 1, 0})) == 1);
    CHECK(rank_weight(tw, word({0, 0, 0})) == 0);

    Rng rng(17);
    for (auto [p, e, m] : {std::tuple{2, 1, 3}, {3, 1, 2}, {5, 1, 2}}) {
        auto t2 = FieldTower::make(p, e, m);
        for (int t = 0; t < 40; ++t) {
            int n = 1 + int(rng.below(5));
            auto row = random_matrix(t2, Level::top, 1, n, rng);
            std::vector<std::vector<int>> digits(std::size_t(m), std::vector<int>(std::size_t(n), 0));
            for (int j = 0; j < m; ++j)
                for (int i = 0; i < n; ++i)
                    digits[std::size_t(j)][std::size_t(i)] = t2->mid_coeff(row.at(0, i), j).digits[0];
            CHECK(rank_weight(t2, row) == int_rank_mod_p(digits, p));
        }
    }
}

TEST_CASE("rank weight is invariant under base-field equivalence and top scaling") {
    Rng rng(19);
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {3, 1, 2}, {2, 2, 1}}) {
        auto tw = FieldTower::make(p, e, m);
        for (int t = 0; t < 30; ++t) {
            int n = 2 + int(rng.below(4));
            auto row = random_matrix(tw, Level::top, 1, n, rng);
            auto mm = random_invertible(tw, Level::mid, n, rng);
            CHECK(rank_weight(tw, row * lift(mm)) == rank_weight(tw, row));
            auto alpha = random_top_nonzero(tw, rng);
            CHECK(rank_weight(tw, row.scaled(alpha)) == rank_weight(tw, row));
        }
    }
}

TEST_CASE("rank weight multisets survive equivalence") {
    Rng rng(23);
    auto tw = FieldTower::make(2, 1, 2);
    for (int t = 0; t < 8; ++t) {
        auto c = random_code(tw, 4, 2, rng);
        auto moved = apply_witness(c, random_invertible(tw, Level::mid, 4, rng));
        auto weights = [&](const RankCode& code) {
            std::map<int, int> hist;
            bool done = enumerate_span(code.generator(), 1 << 10, [&](const std::vector<TopElement>& w) {
                ++hist[rank_weight(tw, Matrix::row_vector(tw, Level::top, w))];
            });
            REQUIRE(done);
            return hist;
        };
        CHECK(weights(c) == weights(moved));
    }
}

TEST_CASE("witness algebra and chain replay") {
    Rng rng(29);
    auto tw = FieldTower::make(3, 1, 2);
    auto c = random_code(tw, 4, 2, rng);

    auto m1 = random_invertible(tw, Level::mid, 4, rng);
    auto m2 = random_invertible(tw, Level::mid, 4, rng);
    auto c1 = apply_witness(c, m1);
    auto c2 = apply_witness(c1, m2);
    CHECK(c2.witness_chain().size() == 2);
    CHECK(chain_reproduces(c, c2));
    CHECK(chain_reproduces(c, c));

    auto w = compose(c2.witness_chain()[0], c2.witness_chain()[1]);
    CHECK(w.source == code_id(c));
    CHECK(w.target == code_id(c2));
    CHECK(RowSpace::from_matrix(c.generator() * lift(w.m)) == c2.row_space());

    auto back = inverse_witness(w);
    CHECK(RowSpace::from_matrix(c2.generator() * lift(back.m)) == c.row_space());
    CHECK((w.m * back.m).is_identity());

    auto ident = identity_witness(c);
    CHECK(compose(ident, c2.witness_chain()[0]).m == c2.witness_chain()[0].m);
    CHECK_THROWS_AS((void)compose(c2.witness_chain()[1], c2.witness_chain()[1]), Error);

    auto singular = Matrix::zeros(tw, Level::mid, 4, 4);
    CHECK_THROWS_AS((void)apply_witness(c, singular), SingularError);
    CHECK_THROWS_AS((void)apply_witness(c, Matrix::identity(tw, Level::top, 4)), Error);

    // permutations preserve hull dimension; general witnesses need not
    std::vector<int> perm{3, 1, 0, 2};
    CHECK(hull_dim(apply_witness(c, Matrix::permutation(tw, perm))) == hull_dim(c));
}

TEST_CASE("standard form on random codes") {
    Rng rng(31);
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {3, 1, 2}, {2, 1, 3}}) {
        auto tw = FieldTower::make(p, e, m);
        for (int t = 0; t < 20; ++t) {
            int n = 3 + int(rng.below(3));
            int k = 1 + int(rng.below(std::uint64_t(n) - 1));
            auto c = random_code(tw, n, k, rng);
            auto sf = standardize_hull(c);
            CHECK(sf.h == hull_dim(c));
            CHECK(hull_dim(sf.permuted) == sf.h); // permutation invariance
            CHECK(RowSpace::from_matrix(sf.std_gen) == sf.permuted.row_space());
            CHECK(chain_reproduces(c, sf.permuted));
            if (sf.h > 0) {
                auto top = sf.std_gen.submatrix(0, 0, sf.h, n);
                CHECK(RowSpace::from_matrix(top) == hull_code(sf.permuted).row_space());
                CHECK(top.submatrix(0, 0, sf.h, sf.h).is_identity());
            }
            CHECK(rank(sf.B * sf.B.transpose()) == k - sf.h);
        }
    }
}

TEST_CASE("code identity and canonicalization") {
    auto tw = FieldTower::make(2, 1, 2);
    auto g = Matrix::of(tw, Level::top, {{1, 2, 0, 3}, {0, 2, 0, 1}});
    auto c = RankCode::make(tw, g);
    // same row space from scrambled generators gives the same id
    auto scrambled = Matrix::of(tw, Level::top, {{1, 0, 0, 2}, {0, 2, 0, 1}});
    REQUIRE(RowSpace::from_matrix(scrambled) == c.row_space());
    CHECK(code_id(RankCode::make(tw, scrambled)) == code_id(c));
    CHECK(code_id(dual(c)) != code_id(c));

    CHECK_THROWS_AS((void)RankCode::make(tw, Matrix::zeros(tw, Level::top, 2, 4)), Error);
    CHECK_THROWS_AS((void)RankCode::make(tw, Matrix::identity(tw, Level::mid, 2)), Error);

    auto z = RankCode::zero_code(tw, 3);
    CHECK(z.k() == 0);
    CHECK(hull_dim(z) == 0);
    CHECK(dual(z).k() == 3);
    CHECK(dual(dual(z)) == z);
    CHECK(hull_code(dual(z)).k() == 0); // the full code meets its dual {0}
}
