#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rmhull/errors.hpp"
#include "rmhull/field_tower.hpp"

#include <random>

using namespace rmhull;

namespace {

// Independent oracle: dictionary-smallest monic cubic over F_3 with nonzero
// constant term and no root. Works from first principles, without the tower.
std::vector<int> smallest_cubic_no_root_f3() {
    for (int c0 = 1; c0 < 3; ++c0)
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = 0; c2 < 3; ++c2) {
                bool has_root = false;
                for (int x = 0; x < 3; ++x) {
                    int v = (x * x * x + c2 * x * x + c1 * x + c0) % 3;
                    if (v == 0) has_root = true;
                }
                if (!has_root) return {c0, c1, c2, 1};
            }
    return {};
}

TopElement top_of(const Tower& tw, std::uint64_t idx) { return tw->top(idx); }

} // namespace

TEST_CASE("modulus selection is the dictionary-smallest irreducible") {
    auto f4 = FieldTower::make(2, 1, 2);
    CHECK(f4->mid_modulus() == std::vector<int>{1, 1});          // x + 1
    CHECK(f4->top_modulus().size() == 3);                        // x^2 + x + 1
    CHECK(f4->top_modulus()[0].digits == std::vector<int>{1});
    CHECK(f4->top_modulus()[1].digits == std::vector<int>{1});
    CHECK(f4->top_modulus()[2].digits == std::vector<int>{1});

    auto f2 = FieldTower::make(2, 1, 1);
    CHECK(f2->top_modulus().size() == 2);                        // x + 1
    CHECK(f2->top_modulus()[0].digits == std::vector<int>{1});
    CHECK(f2->top_modulus()[1].digits == std::vector<int>{1});

    auto f27 = FieldTower::make(3, 1, 3);
    auto expect = smallest_cubic_no_root_f3();
    REQUIRE(expect.size() == 4);
    for (int i = 0; i <= 3; ++i)
        CHECK(f27->top_modulus()[std::size_t(i)].digits == std::vector<int>{expect[std::size_t(i)]});
    // frozen value of the oracle above: x^3 + 2x^2 + 1
    CHECK(expect == std::vector<int>{1, 0, 2, 1});
}

TEST_CASE("F_4 arithmetic matches the defining relation w^2 = w + 1") {
    auto tw = FieldTower::make(2, 1, 2);
    auto w = top_of(tw, 2);
    auto w2 = top_of(tw, 3); // w + 1

    CHECK(tw->top_mul(w, w) == w2);
    CHECK(tw->top_mul(w2, w2) == w);       // w^4 = w
    CHECK(tw->top_mul(w, w2) == tw->top_one());
    CHECK(tw->top_inv(w) == w2);
    CHECK(tw->top_div(tw->top_one(), w2) == w);
}

TEST_CASE("frobenius is exact q-power iteration") {
    auto tw = FieldTower::make(2, 1, 2);
    auto w = top_of(tw, 2);
    CHECK(tw->frobenius(w, 1) == top_of(tw, 3));
    CHECK(tw->frobenius(w, 0) == w);

    for (auto [p, e, m] : {std::tuple{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
        auto t = FieldTower::make(p, e, m);
        for (std::uint64_t i = 0; i < t->top_order(); ++i) {
            auto x = t->top(i);
            CHECK(t->frobenius(x, m) == x);
        }
        // the base field is fixed pointwise
        for (std::uint64_t i = 0; i < t->q(); ++i) {
            auto c = t->embed(t->mid(i));
            CHECK(t->frobenius(c, 1) == c);
        }
    }
}

TEST_CASE("trace values over F_4/F_2") {
    auto tw = FieldTower::make(2, 1, 2);
    auto w = top_of(tw, 2);
    CHECK(tw->field_trace(w) == tw->mid_one());
    CHECK(tw->field_trace(tw->top_one()) == tw->mid_zero());
    CHECK(tw->field_trace(tw->top_zero()) == tw->mid_zero());
}

TEST_CASE("trace is F_q-linear and surjective") {
    for (auto [p, e, m] : {std::tuple{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
        auto tw = FieldTower::make(p, e, m);
        REQUIRE(tw->top_order() <= (1u << 12));

        std::mt19937_64 rng(7);
        auto rand_top = [&] { return tw->top(rng() % tw->top_order()); };
        for (int t = 0; t < 50; ++t) {
            auto x = rand_top(), y = rand_top();
            auto c = tw->mid(rng() % tw->q());
            auto lhs = tw->field_trace(tw->top_add(tw->top_mul(tw->embed(c), x), y));
            auto rhs = tw->mid_add(tw->mid_mul(c, tw->field_trace(x)), tw->field_trace(y));
            CHECK(lhs == rhs);
            CHECK(tw->field_trace(tw->frobenius(x, 1)) == tw->field_trace(x));
        }

        std::vector<bool> hit(std::size_t(tw->q()), false);
        for (std::uint64_t i = 0; i < tw->top_order(); ++i)
            hit[std::size_t(tw->mid_index(tw->field_trace(tw->top(i))))] = true;
        for (bool h : hit) CHECK(h);
    }
}

TEST_CASE("field axioms hold on sampled elements") {
    for (auto [p, e, m] : {std::tuple{2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {7, 1, 1}, {3, 2, 1}}) {
        auto tw = FieldTower::make(p, e, m);
        std::mt19937_64 rng(11);
        auto rand_top = [&] { return tw->top(rng() % tw->top_order()); };
        for (int t = 0; t < 60; ++t) {
            auto a = rand_top(), b = rand_top(), c = rand_top();
            CHECK(tw->top_add(a, b) == tw->top_add(b, a));
            CHECK(tw->top_mul(a, b) == tw->top_mul(b, a));
            CHECK(tw->top_add(tw->top_add(a, b), c) == tw->top_add(a, tw->top_add(b, c)));
            CHECK(tw->top_mul(tw->top_mul(a, b), c) == tw->top_mul(a, tw->top_mul(b, c)));
            CHECK(tw->top_mul(a, tw->top_add(b, c)) ==
                  tw->top_add(tw->top_mul(a, b), tw->top_mul(a, c)));
            CHECK(tw->top_add(a, tw->top_neg(a)) == tw->top_zero());
            CHECK(tw->top_mul(a, tw->top_one()) == a);
            if (!tw->top_is_zero(a)) {
                CHECK(tw->top_mul(a, tw->top_inv(a)) == tw->top_one());
                CHECK(tw->top_div(tw->top_mul(a, b), a) == b);
            }
        }
        // same laws at the middle level
        for (int t = 0; t < 60; ++t) {
            auto a = tw->mid(rng() % tw->q());
            auto b = tw->mid(rng() % tw->q());
            CHECK(tw->mid_add(a, b) == tw->mid_add(b, a));
            CHECK(tw->mid_mul(a, b) == tw->mid_mul(b, a));
            CHECK(tw->mid_sub(a, a) == tw->mid_zero());
            if (!tw->mid_is_zero(a)) CHECK(tw->mid_mul(a, tw->mid_inv(a)) == tw->mid_one());
        }
    }
}

TEST_CASE("mid and top embeddings agree") {
    auto tw = FieldTower::make(3, 2, 2);
    for (std::uint64_t i = 0; i < tw->q(); ++i) {
        for (std::uint64_t j = 0; j < tw->q(); ++j) {
            auto a = tw->mid(i), b = tw->mid(j);
            CHECK(tw->embed(tw->mid_mul(a, b)) == tw->top_mul(tw->embed(a), tw->embed(b)));
            CHECK(tw->embed(tw->mid_add(a, b)) == tw->top_add(tw->embed(a), tw->embed(b)));
        }
        auto back = tw->try_project(tw->embed(tw->mid(i)));
        REQUIRE(back.has_value());
        CHECK(*back == tw->mid(i));
    }
    CHECK_FALSE(tw->try_project(tw->top(tw->q())).has_value()); // y itself is not in F_q
}

TEST_CASE("enumeration round trip") {
    auto tw = FieldTower::make(2, 2, 2);
    for (std::uint64_t i = 0; i < tw->top_order(); ++i) CHECK(tw->top_index(tw->top(i)) == i);
    for (std::uint64_t i = 0; i < tw->q(); ++i) CHECK(tw->mid_index(tw->mid(i)) == i);
}

TEST_CASE("construction and arithmetic errors") {
    CHECK_THROWS_AS((void)FieldTower::make(4, 1, 2), Error);
    CHECK_THROWS_AS((void)FieldTower::make(2, 0, 2), Error);
    CHECK_THROWS_AS((void)FieldTower::make(2, 1, 0), Error);

    auto tw = FieldTower::make(2, 1, 2);
    CHECK_THROWS_AS((void)tw->top_inv(tw->top_zero()), Error);
    CHECK_THROWS_AS((void)tw->mid_inv(tw->mid_zero()), Error);
    CHECK_THROWS_AS((void)tw->top_div(tw->top_one(), tw->top_zero()), Error);
    CHECK_THROWS_AS((void)tw->frobenius(tw->top_one(), -1), Error);
}
