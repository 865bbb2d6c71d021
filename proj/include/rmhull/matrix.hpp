#pragma once

#include "rmhull/errors.hpp"
#include "rmhull/field_tower.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmhull {

/// Level of the tower a matrix lives over: F_q (mid) or F_{q^m} (top).
enum class Level { mid, top };

std::string to_string(Level);

/// Dense exact matrix over one level of a tower. Entries are stored uniformly
/// as top-field values; a Level::mid matrix keeps every entry inside the F_q
/// subfield, which construction enforces and all operations preserve.
class Matrix {
public:
    Matrix() = default; // 0x0 without a tower; useful only as a container slot

    static Matrix zeros(Tower, Level, int rows, int cols);
    static Matrix identity(Tower, Level, int n);
    /// Builds a matrix from enumeration indices of the level's field.
    static Matrix of(Tower, Level, const std::vector<std::vector<std::uint64_t>>& indices);
    static Matrix from_rows(Tower, Level, int cols, std::vector<std::vector<TopElement>> rows);
    static Matrix row_vector(Tower, Level, std::vector<TopElement> row);
    /// Permutation matrix P with (M*P) column j equal to M column perm[j].
    static Matrix permutation(Tower, const std::vector<int>& perm);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Level level() const { return level_; }
    const Tower& tower() const { return tower_; }

    const TopElement& at(int r, int c) const;
    /// Writes one entry; rejects values outside F_q on a mid-level matrix.
    void set(int r, int c, const TopElement& v);
    void set(int r, int c, const MidElement& v);
    std::vector<TopElement> row(int r) const;

    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator*(const Matrix&) const;
    Matrix transpose() const;
    Matrix scaled(const TopElement&) const;
    Matrix submatrix(int r0, int c0, int rows, int cols) const;

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix&) const;

    /// Compact digit rendering for diagnostics and error payloads.
    std::string to_text() const;

private:
    Tower tower_;
    Level level_ = Level::top;
    int rows_ = 0, cols_ = 0;
    std::vector<TopElement> ent_;

    Matrix(Tower, Level, int rows, int cols);
    std::size_t idx(int r, int c) const { return std::size_t(r) * cols_ + c; }
    void check_compatible(const Matrix&, const char* what) const;

    friend Matrix lift(const Matrix&);
    friend Matrix project_check(const Matrix&);
};

Matrix hstack(const Matrix&, const Matrix&);
Matrix vstack(const Matrix&, const Matrix&);
/// Retags a mid-level matrix as top-level; entries are unchanged.
Matrix lift(const Matrix&);
/// Retags a top-level matrix as mid-level; errors on any entry outside F_q.
Matrix project_check(const Matrix&);
/// Block-diagonal assembly of square blocks over one level.
Matrix block_diag(const std::vector<Matrix>&);
/// Places M into an otherwise zero rows x cols matrix at (r0, c0).
Matrix embed_block(const Matrix&, int r0, int c0, int rows, int cols);
/// Result column j is source column perm[j].
Matrix permute_cols(const Matrix&, const std::vector<int>& perm);

struct RrefResult {
    Matrix r;                // reduced row echelon form
    std::vector<int> pivots; // strictly increasing pivot columns
    Matrix transform;        // invertible, transform * input == r
};

/// Gauss-Jordan elimination with full transform tracking. Deterministic:
/// pivots are chosen top to bottom in the first eligible column.
RrefResult rref(const Matrix&);
int rank(const Matrix&);
/// Inverse of a square matrix; SingularError carries the rank found.
Matrix inverse(const Matrix&);
/// Determinant via elimination; exact.
TopElement determinant(const Matrix&);

/// Subspace of row vectors, kept as a canonical RREF basis with no zero rows.
class RowSpace {
public:
    static RowSpace from_matrix(const Matrix&);
    static RowSpace zero(Tower, Level, int ambient);

    int dim() const { return basis_.rows(); }
    int ambient() const { return ambient_; }
    Level level() const { return basis_.level(); }
    const Tower& tower() const { return basis_.tower(); }
    const Matrix& basis() const { return basis_; }

    bool contains_row(const std::vector<TopElement>&) const;
    bool contains(const RowSpace&) const;
    bool operator==(const RowSpace&) const;

private:
    Matrix basis_;
    int ambient_ = 0;
};

/// Right null space {x : M x^T = 0} as a row space of the column count.
RowSpace kernel(const Matrix&);
/// Intersection, computed from the left kernel of the stacked bases.
RowSpace intersect(const RowSpace&, const RowSpace&);
RowSpace span_sum(const RowSpace&, const RowSpace&);
/// Extends a basis of sub to one of full by greedily scanning full's RREF
/// basis rows; the first dim(sub) output rows are sub's basis verbatim.
Matrix complete_basis(const RowSpace& sub, const RowSpace& full);

} // namespace rmhull
