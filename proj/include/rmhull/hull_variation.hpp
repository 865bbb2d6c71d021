#pragma once

#include "rmhull/rank_code.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmhull {

/// The s x s base-field block Y used to lower hull dimension: Y is invertible
/// and Y Y^T - I_s has full rank s. For q > 3 it is a scalar matrix a I_s with
/// a != 0, a^2 != 1; for q in {2,3} it is assembled from fixed 2x2 and 3x3
/// unit blocks (s even: all 2x2; s odd: a single trailing 3x3), which is why
/// s = 1 is impossible there (NoConstructionError).
Matrix reduction_block(const Tower& tw, int s);

/// Hull dimensions reachable from h by the block construction: every value in
/// [0, h] except h - 1 when q in {2,3} (h - 1 needs the s = 1 block that does
/// not exist over those fields). h itself is always reachable (identity).
std::vector<int> admissible_targets(const Tower& tw, int h);
bool is_admissible_target(const Tower& tw, int h, int ell);

/// Base-field matrices of one hull-lowering step, all mid level:
///   X = diag(Y, I_ell)  (h x h),  M = diag(X, I_{n-h})  (n x n).
struct ReductionPlan {
    int h = 0;
    int ell = 0;
    int s = 0;   // h - ell
    Matrix Y;    // s x s
    Matrix X;    // h x h
    Matrix M;    // n x n
};

struct ReductionResult {
    RankCode output;       // equivalent code with hull dimension ell
    StandardForm standard; // intermediate standard form of the input
    ReductionPlan plan;
    Witness witness;       // composed: input -> output
};

/// Produce an equivalent code whose hull has dimension exactly ell.
/// Throws InadmissibleTargetError when ell is not reachable for this q and h.
ReductionResult reduce_hull(const RankCode& c, int ell);

/// Evidence that a one-dimensional hull was removed by the unit-vector
/// adjustment: with the standard-form blocks A, B and S = B B^T,
/// P = B^T S^-1 B, Q = I - P, the adjusted code is linear-complementary-dual
/// iff fv = v Q v^T + 2 v A^T is nonzero, and det(G' G'^T) = det(S) fv.
struct LcdCertificate {
    Matrix v;         // mid level, 1 x (n-1), the chosen base-field row
    TopElement theta; // v Q v^T
    TopElement fv;    // theta + 2 v A^T; nonzero certifies the result
    Matrix Q;         // top level, (n-1) x (n-1)
    Matrix S;         // top level, (k-1) x (k-1)
    Matrix P;         // top level, (n-1) x (n-1)
};

struct UnitAdjustment {
    RankCode output;       // equivalent LCD code
    StandardForm standard;
    Matrix M;              // mid level witness block [[1, v], [0, I_{n-1}]]
    LcdCertificate certificate;
    Witness witness;       // composed: input -> output
};

/// Remove a one-dimensional hull over q in {2,3}, where the block route is
/// unavailable, by adding a base-field unit vector to the hull row.
UnitAdjustment make_lcd_h1(const RankCode& c);

enum class LcdRoute { already_lcd, block_reduction, unit_adjustment };
std::string to_string(LcdRoute);

struct LcdResult {
    RankCode output;  // equivalent LCD code
    LcdRoute route;
    std::optional<ReductionResult> reduction;     // block_reduction route
    std::optional<UnitAdjustment> adjustment;     // unit_adjustment route
};

/// Equivalent LCD code for any input: identity when the hull is already
/// trivial, the block construction when it applies (q > 3, or hull >= 2),
/// and the unit-vector adjustment for the remaining q in {2,3}, hull 1 case.
LcdResult make_lcd(const RankCode& c);

} // namespace rmhull
