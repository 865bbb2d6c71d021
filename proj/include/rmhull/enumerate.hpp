#pragma once

#include "rmhull/matrix.hpp"

#include <functional>
#include <optional>

namespace rmhull {

/// Number of coefficient tuples enumerate_span would visit for a generator
/// with `rows` rows at level `lv` (coefficients range over F_q for mid, over
/// F_{q^m} for top), or nullopt when it exceeds `limit`.
inline std::optional<std::uint64_t> span_size(const Tower& tw, Level lv, int rows,
                                              std::uint64_t limit) {
    const std::uint64_t order = lv == Level::mid ? tw->q() : tw->top_order();
    unsigned __int128 acc = 1;
    for (int i = 0; i < rows; ++i) {
        acc *= order;
        if (acc > limit) return std::nullopt;
    }
    return std::uint64_t(acc);
}

/// Visit every linear combination of the rows of `gen` exactly once per
/// coefficient tuple, with coefficients drawn from the field matching the
/// generator's level (tuples are distinct words whenever the rows are
/// independent). Combinations are maintained incrementally with an odometer
/// over the coefficients, so a visit costs amortized O(n) field operations.
/// Returns false without visiting anything when the tuple count exceeds
/// `limit`.
inline bool enumerate_span(const Matrix& gen, std::uint64_t limit,
                           const std::function<void(const std::vector<TopElement>&)>& fn) {
    const Tower& tw = gen.tower();
    const int k = gen.rows(), n = gen.cols();
    if (!span_size(tw, gen.level(), k, limit)) return false;
    const std::uint64_t order = gen.level() == Level::mid ? tw->q() : tw->top_order();
    auto coeff = [&](std::uint64_t idx) {
        return gen.level() == Level::mid ? tw->embed(tw->mid(idx)) : tw->top(idx);
    };

    // partial[i] = sum over rows >= i of coeff_i * row_i; partial[k] = 0.
    std::vector<std::uint64_t> digit(std::size_t(k), 0);
    std::vector<std::vector<TopElement>> partial(std::size_t(k) + 1,
                                                 std::vector<TopElement>(std::size_t(n), tw->top_zero()));
    auto rebuild = [&](int from) {
        for (int i = from; i >= 0; --i) {
            TopElement c = coeff(digit[std::size_t(i)]);
            if (tw->top_is_zero(c)) {
                partial[std::size_t(i)] = partial[std::size_t(i) + 1];
            } else {
                for (int j = 0; j < n; ++j)
                    partial[std::size_t(i)][std::size_t(j)] = tw->top_add(
                        tw->top_mul(c, gen.at(i, j)), partial[std::size_t(i) + 1][std::size_t(j)]);
            }
        }
    };
    rebuild(k - 1);
    while (true) {
        fn(partial[0]);
        int i = 0;
        while (i < k && digit[std::size_t(i)] == order - 1) digit[std::size_t(i++)] = 0;
        if (i == k) return true;
        ++digit[std::size_t(i)];
        rebuild(i);
    }
}

} // namespace rmhull
