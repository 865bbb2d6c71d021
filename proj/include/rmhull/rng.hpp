#pragma once

#include "rmhull/matrix.hpp"

#include <cstdint>
#include <random>

namespace rmhull {

/// Deterministic PRNG used everywhere randomness is needed. Built on
/// mt19937_64 with a splitmix64 seed scrambler; draws avoid the standard
/// library distributions so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform draw in [0, bound) without modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error("Rng::below: bound must be positive");
        std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
        std::uint64_t x;
        do { x = engine_(); } while (x >= limit);
        return x % bound;
    }

    /// Child generator with an independent stream, for per-case seeding.
    Rng fork(std::uint64_t salt) { return Rng(mix(engine_() ^ mix(salt))); }

private:
    std::mt19937_64 engine_;
};

inline MidElement random_mid(const Tower& tw, Rng& rng) {
    return tw->mid(rng.below(std::uint64_t(tw->q())));
}

inline TopElement random_top(const Tower& tw, Rng& rng) {
    return tw->top(rng.below(tw->top_order()));
}

inline TopElement random_top_nonzero(const Tower& tw, Rng& rng) {
    return tw->top(1 + rng.below(tw->top_order() - 1));
}

inline Matrix random_matrix(const Tower& tw, Level lv, int rows, int cols, Rng& rng) {
    Matrix out = Matrix::zeros(tw, lv, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (lv == Level::mid)
                out.set(i, j, random_mid(tw, rng));
            else
                out.set(i, j, random_top(tw, rng));
        }
    return out;
}

/// Random invertible square matrix by rejection sampling; over any field with
/// q >= 2 the singular fraction is below 1 - prod(1 - q^-i) so a handful of
/// draws suffices.
inline Matrix random_invertible(const Tower& tw, Level lv, int n, Rng& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix m = random_matrix(tw, lv, n, n, rng);
        if (rank(m) == n) return m;
    }
    throw InternalError("random_invertible: rejection sampling failed");
}

/// Random full-rank rows x cols matrix (rows <= cols).
inline Matrix random_full_rank(const Tower& tw, Level lv, int rows, int cols, Rng& rng) {
    if (rows > cols) throw Error("random_full_rank: rows must not exceed cols");
    for (int attempt = 0; attempt < 256; ++attempt) {
        Matrix m = random_matrix(tw, lv, rows, cols, rng);
        if (rank(m) == rows) return m;
    }
    throw InternalError("random_full_rank: rejection sampling failed");
}

} // namespace rmhull
