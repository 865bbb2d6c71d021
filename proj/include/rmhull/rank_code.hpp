#pragma once

#include "rmhull/matrix.hpp"

#include <string>
#include <vector>

namespace rmhull {

class RankCode;

/// Equivalence step between two codes: an invertible n x n matrix over the
/// base field F_q, applied on the right of a generator matrix. Witnesses are
/// kept alongside derived codes so any transformation can be replayed.
struct Witness {
    Matrix m;            // mid level, n x n, invertible
    std::string source;  // code_id before applying
    std::string target;  // code_id after applying

    bool operator==(const Witness& o) const = default;
};

/// F_{q^m}-linear [n, k] code in F_{q^m}^n, stored by its canonical
/// (reduced-row-echelon) generator matrix. Codes remember the chain of
/// equivalence witnesses that produced them from whatever they were made of.
class RankCode {
public:
    /// Canonicalize an arbitrary generator matrix (top level, rank >= 1).
    static RankCode make(const Tower& tw, const Matrix& generator);

    /// The k = 0 code inside F_{q^m}^n.
    static RankCode zero_code(const Tower& tw, int n);

    int n() const { return n_; }
    int k() const { return int(gen_.rows()); }
    const Tower& tower() const { return tower_; }
    const Matrix& generator() const { return gen_; }
    RowSpace row_space() const { return RowSpace::from_matrix(gen_); }

    const std::vector<Witness>& witness_chain() const { return chain_; }
    RankCode with_chain(std::vector<Witness> chain) const;

    /// Equality compares tower parameters and canonical generators only;
    /// provenance chains are ignored.
    bool operator==(const RankCode& o) const;

private:
    RankCode(Tower tw, Matrix gen, int n) : tower_(std::move(tw)), gen_(std::move(gen)), n_(n) {}
    Tower tower_;
    Matrix gen_;  // k x n canonical
    int n_;
    std::vector<Witness> chain_;
};

/// Stable fingerprint of a code: 64-bit FNV-1a over tower parameters and the
/// canonical generator digits, in lowercase hex.
std::string code_id(const RankCode& c);

/// Dual code under the standard bilinear form x . y = sum x_i y_i.
RankCode dual(const RankCode& c);

/// Rank weight of a codeword: the rank over F_q of its m x n matrix of
/// base-field coordinates. `row` is a 1 x n top-level matrix.
int rank_weight(const Tower& tw, const Matrix& row);

/// dim(C meet dual(C)) by the closed formula k - rank(G G^T). Kept formula-only
/// so tests can compare it against the independent intersection route.
int hull_dim(const RankCode& c);

/// The hull as a code, computed by explicit row-space intersection with the
/// dual (independent of the hull_dim formula).
RankCode hull_code(const RankCode& c);

bool is_lcd(const RankCode& c);

/// Right-multiply the generator by an invertible base-field matrix and record
/// the step. Throws SingularError if m is not invertible.
RankCode apply_witness(const RankCode& c, const Matrix& m);

Witness identity_witness(const RankCode& c);
/// Sequential composition; requires a.target == b.source.
Witness compose(const Witness& a, const Witness& b);
Witness inverse_witness(const Witness& w);

/// Replay `derived`'s witness chain from `origin`: ids must link up and the
/// composed matrix must carry origin's row space onto derived's.
bool chain_reproduces(const RankCode& origin, const RankCode& derived);

/// Generator-side standard form of a code with hull dimension h: after a
/// column permutation (itself a recorded witness), the code has a generator
///   [ I_h  A ]
///   [ 0    B ]
/// whose first h rows span the hull. The blocks then satisfy
/// A A^T = -I_h, A B^T = 0 and rank(B B^T) = k - h.
struct StandardForm {
    RankCode permuted;   // the column-permuted code, chain extended by P
    Witness perm;        // P: original -> permuted
    Matrix std_gen;      // k x n, rows as displayed above; spans permuted
    Matrix A;            // h x (n - h)
    Matrix B;            // (k - h) x (n - h)
    int h = 0;
};

StandardForm standardize_hull(const RankCode& c);

} // namespace rmhull
