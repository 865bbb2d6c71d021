#include "rmhull/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rmhull {

std::string to_string(Level lv) { return lv == Level::mid ? "mid" : "top"; }

Matrix::Matrix(Tower tw, Level lv, int rows, int cols)
    : tower_(std::move(tw)), level_(lv), rows_(rows), cols_(cols) {
    if (!tower_) throw Error("matrix needs a tower");
    if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
    ent_.assign(std::size_t(rows) * std::size_t(cols), tower_->top_zero());
}

Matrix Matrix::zeros(Tower tw, Level lv, int rows, int cols) {
    return Matrix(std::move(tw), lv, rows, cols);
}

Matrix Matrix::identity(Tower tw, Level lv, int n) {
    Matrix out(std::move(tw), lv, n, n);
    auto one = out.tower_->top_one();
    for (int i = 0; i < n; ++i) out.ent_[out.idx(i, i)] = one;
    return out;
}

Matrix Matrix::of(Tower tw, Level lv, const std::vector<std::vector<std::uint64_t>>& indices) {
    int rows = int(indices.size());
    int cols = rows == 0 ? 0 : int(indices[0].size());
    Matrix out(std::move(tw), lv, rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (int(indices[std::size_t(r)].size()) != cols) throw Error("ragged entry grid");
        for (int c = 0; c < cols; ++c) {
            auto v = indices[std::size_t(r)][std::size_t(c)];
            out.ent_[out.idx(r, c)] = lv == Level::mid
                                          ? out.tower_->embed(out.tower_->mid(v))
                                          : out.tower_->top(v);
        }
    }
    return out;
}

Matrix Matrix::from_rows(Tower tw, Level lv, int cols, std::vector<std::vector<TopElement>> rows) {
    Matrix out(std::move(tw), lv, int(rows.size()), cols);
    for (int r = 0; r < out.rows_; ++r) {
        if (int(rows[std::size_t(r)].size()) != cols) throw Error("ragged row list");
        for (int c = 0; c < cols; ++c) out.set(r, c, rows[std::size_t(r)][std::size_t(c)]);
    }
    return out;
}

Matrix Matrix::row_vector(Tower tw, Level lv, std::vector<TopElement> row) {
    int cols = int(row.size());
    return from_rows(std::move(tw), lv, cols, {std::move(row)});
}

Matrix Matrix::permutation(Tower tw, const std::vector<int>& perm) {
    int n = int(perm.size());
    std::vector<bool> seen(std::size_t(n), false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[std::size_t(v)]) throw Error("not a permutation");
        seen[std::size_t(v)] = true;
    }
    Matrix out(std::move(tw), Level::mid, n, n);
    auto one = out.tower_->top_one();
    for (int j = 0; j < n; ++j) out.ent_[out.idx(perm[std::size_t(j)], j)] = one;
    return out;
}

const TopElement& Matrix::at(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    return ent_[idx(r, c)];
}

void Matrix::set(int r, int c, const TopElement& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw Error("matrix index out of range");
    if (level_ == Level::mid && !tower_->in_mid(v))
        throw Error("entry outside F_q assigned to a mid-level matrix");
    ent_[idx(r, c)] = v;
}

void Matrix::set(int r, int c, const MidElement& v) { set(r, c, tower_->embed(v)); }

std::vector<TopElement> Matrix::row(int r) const {
    if (r < 0 || r >= rows_) throw Error("matrix row out of range");
    return {ent_.begin() + std::ptrdiff_t(idx(r, 0)), ent_.begin() + std::ptrdiff_t(idx(r, 0)) + cols_};
}

void Matrix::check_compatible(const Matrix& o, const char* what) const {
    if (!tower_ || !o.tower_) throw Error(std::string(what) + ": matrix without a tower");
    if (!same_tower(tower_, o.tower_)) throw Error(std::string(what) + ": tower mismatch");
    if (level_ != o.level_) throw Error(std::string(what) + ": level mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_compatible(o, "matrix add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix add: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < ent_.size(); ++i)
        out.ent_[i] = tower_->top_add(ent_[i], o.ent_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_compatible(o, "matrix sub");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sub: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < ent_.size(); ++i)
        out.ent_[i] = tower_->top_sub(ent_[i], o.ent_[i]);
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_compatible(o, "matrix mul");
    if (cols_ != o.rows_) throw Error("matrix mul: inner dimension mismatch");
    Matrix out(tower_, level_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const auto& a = ent_[idx(i, t)];
            if (tower_->top_is_zero(a)) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const auto& b = o.ent_[o.idx(t, j)];
                if (tower_->top_is_zero(b)) continue;
                out.ent_[out.idx(i, j)] =
                    tower_->top_add(out.ent_[out.idx(i, j)], tower_->top_mul(a, b));
            }
        }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(tower_, level_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.ent_[out.idx(j, i)] = ent_[idx(i, j)];
    return out;
}

Matrix Matrix::scaled(const TopElement& s) const {
    if (level_ == Level::mid && !tower_->in_mid(s))
        throw Error("scalar outside F_q applied to a mid-level matrix");
    Matrix out = *this;
    for (auto& v : out.ent_) v = tower_->top_mul(v, s);
    return out;
}

Matrix Matrix::submatrix(int r0, int c0, int rows, int cols) const {
    if (r0 < 0 || c0 < 0 || rows < 0 || cols < 0 || r0 + rows > rows_ || c0 + cols > cols_)
        throw Error("submatrix out of range");
    Matrix out(tower_, level_, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.ent_[out.idx(i, j)] = ent_[idx(r0 + i, c0 + j)];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(ent_.begin(), ent_.end(),
                       [&](const TopElement& v) { return tower_->top_is_zero(v); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto& v = ent_[idx(i, j)];
            if (i == j ? !tower_->top_is_one(v) : !tower_->top_is_zero(v)) return false;
        }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!tower_ || !o.tower_) return rows_ == o.rows_ && cols_ == o.cols_ && !tower_ && !o.tower_;
    return same_tower(tower_, o.tower_) && level_ == o.level_ && rows_ == o.rows_ &&
           cols_ == o.cols_ && ent_ == o.ent_;
}

std::string Matrix::to_text() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " " << to_string(level_) << " [";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " ; " : "");
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << (level_ == Level::mid ? tower_->format_mid(*tower_->try_project(ent_[idx(i, j)]))
                                        : tower_->format_top(ent_[idx(i, j)]));
        }
    }
    os << "]";
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (!same_tower(a.tower(), b.tower()) || a.level() != b.level())
        throw Error("hstack: incompatible matrices");
    if (a.rows() != b.rows()) throw Error("hstack: row count mismatch");
    Matrix out = Matrix::zeros(a.tower(), a.level(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!same_tower(a.tower(), b.tower()) || a.level() != b.level())
        throw Error("vstack: incompatible matrices");
    if (a.cols() != b.cols()) throw Error("vstack: column count mismatch");
    Matrix out = Matrix::zeros(a.tower(), a.level(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

Matrix lift(const Matrix& m) {
    if (m.level() == Level::top) throw Error("lift expects a mid-level matrix");
    Matrix out = m;
    out.level_ = Level::top;
    return out;
}

Matrix project_check(const Matrix& m) {
    if (m.level() == Level::mid) throw Error("project_check expects a top-level matrix");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.tower()->in_mid(m.at(i, j)))
                throw Error("project_check: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") lies outside F_q");
    Matrix out = m;
    out.level_ = Level::mid;
    return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw Error("block_diag needs at least one block");
    int n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw Error("block_diag blocks must be square");
        if (!same_tower(b.tower(), blocks[0].tower()) || b.level() != blocks[0].level())
            throw Error("block_diag: incompatible blocks");
        n += b.rows();
    }
    Matrix out = Matrix::zeros(blocks[0].tower(), blocks[0].level(), n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.set(off + i, off + j, b.at(i, j));
        off += b.rows();
    }
    return out;
}

Matrix embed_block(const Matrix& m, int r0, int c0, int rows, int cols) {
    if (r0 < 0 || c0 < 0 || r0 + m.rows() > rows || c0 + m.cols() > cols)
        throw Error("embed_block: dimension overflow");
    Matrix out = Matrix::zeros(m.tower(), m.level(), rows, cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.set(r0 + i, c0 + j, m.at(i, j));
    return out;
}

Matrix permute_cols(const Matrix& m, const std::vector<int>& perm) {
    if (int(perm.size()) != m.cols()) throw Error("permute_cols: length mismatch");
    Matrix out = Matrix::zeros(m.tower(), m.level(), m.rows(), m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        int src = perm[std::size_t(j)];
        if (src < 0 || src >= m.cols()) throw Error("permute_cols: not a permutation");
        for (int i = 0; i < m.rows(); ++i) out.set(i, j, m.at(i, src));
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    const auto& tw = m.tower();
    if (!tw) throw Error("rref: matrix without a tower");
    Matrix r = m;
    Matrix t = Matrix::identity(tw, m.level(), m.rows());
    std::vector<int> pivots;

    auto row_scale = [&](Matrix& x, int i, const TopElement& s) {
        for (int j = 0; j < x.cols(); ++j) x.set(i, j, tw->top_mul(x.at(i, j), s));
    };
    auto row_axpy = [&](Matrix& x, int dst, int src, const TopElement& s) {
        for (int j = 0; j < x.cols(); ++j)
            x.set(dst, j, tw->top_sub(x.at(dst, j), tw->top_mul(s, x.at(src, j))));
    };
    auto row_swap = [&](Matrix& x, int a, int b) {
        for (int j = 0; j < x.cols(); ++j) {
            auto tmp = x.at(a, j);
            x.set(a, j, x.at(b, j));
            x.set(b, j, tmp);
        }
    };

    int next = 0;
    for (int c = 0; c < m.cols() && next < m.rows(); ++c) {
        int pivot = -1;
        for (int i = next; i < m.rows(); ++i)
            if (!tw->top_is_zero(r.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != next) {
            row_swap(r, pivot, next);
            row_swap(t, pivot, next);
        }
        auto inv = tw->top_inv(r.at(next, c));
        row_scale(r, next, inv);
        row_scale(t, next, inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == next) continue;
            auto f = r.at(i, c);
            if (tw->top_is_zero(f)) continue;
            row_axpy(r, i, next, f);
            row_axpy(t, i, next, f);
        }
        pivots.push_back(c);
        ++next;
    }
    return {std::move(r), std::move(pivots), std::move(t)};
}

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("inverse: matrix not square");
    auto res = rref(m);
    if (int(res.pivots.size()) != m.rows())
        throw SingularError("inverse: matrix is singular (rank " +
                                std::to_string(res.pivots.size()) + " of " +
                                std::to_string(m.rows()) + ")",
                            int(res.pivots.size()));
    return res.transform;
}

TopElement determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    const auto& tw = m.tower();
    Matrix a = m;
    TopElement det = tw->top_one();
    int n = m.rows();
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!tw->top_is_zero(a.at(i, c))) {
                pivot = i;
                break;
            }
        if (pivot < 0) return tw->top_zero();
        if (pivot != c) {
            for (int j = 0; j < n; ++j) {
                auto tmp = a.at(c, j);
                a.set(c, j, a.at(pivot, j));
                a.set(pivot, j, tmp);
            }
            det = tw->top_neg(det);
        }
        det = tw->top_mul(det, a.at(c, c));
        auto inv = tw->top_inv(a.at(c, c));
        for (int i = c + 1; i < n; ++i) {
            auto f = tw->top_mul(a.at(i, c), inv);
            if (tw->top_is_zero(f)) continue;
            for (int j = c; j < n; ++j)
                a.set(i, j, tw->top_sub(a.at(i, j), tw->top_mul(f, a.at(c, j))));
        }
    }
    return det;
}

RowSpace RowSpace::from_matrix(const Matrix& m) {
    auto res = rref(m);
    RowSpace out;
    out.ambient_ = m.cols();
    out.basis_ = res.r.submatrix(0, 0, int(res.pivots.size()), m.cols());
    return out;
}

RowSpace RowSpace::zero(Tower tw, Level lv, int ambient) {
    RowSpace out;
    out.ambient_ = ambient;
    out.basis_ = Matrix::zeros(std::move(tw), lv, 0, ambient);
    return out;
}

namespace {

/// Reduces a row against an RREF basis; returns the remainder.
std::vector<TopElement> reduce_row(const Tower& tw, std::vector<TopElement> row,
                                   const Matrix& basis) {
    for (int i = 0; i < basis.rows(); ++i) {
        int pc = -1;
        for (int j = 0; j < basis.cols(); ++j)
            if (!tw->top_is_zero(basis.at(i, j))) {
                pc = j;
                break;
            }
        if (pc < 0) continue;
        const auto& f = row[std::size_t(pc)];
        if (tw->top_is_zero(f)) continue;
        auto c = f; // pivot entries are 1 in RREF
        for (int j = 0; j < basis.cols(); ++j)
            row[std::size_t(j)] = tw->top_sub(row[std::size_t(j)], tw->top_mul(c, basis.at(i, j)));
    }
    return row;
}

bool row_is_zero(const Tower& tw, const std::vector<TopElement>& row) {
    return std::all_of(row.begin(), row.end(),
                       [&](const TopElement& v) { return tw->top_is_zero(v); });
}

} // namespace

bool RowSpace::contains_row(const std::vector<TopElement>& row) const {
    if (int(row.size()) != ambient_) throw Error("contains_row: ambient mismatch");
    return row_is_zero(tower(), reduce_row(tower(), row, basis_));
}

bool RowSpace::contains(const RowSpace& other) const {
    if (ambient_ != other.ambient_) throw Error("contains: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains_row(other.basis().row(i))) return false;
    return true;
}

bool RowSpace::operator==(const RowSpace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

RowSpace kernel(const Matrix& m) {
    auto res = rref(m);
    const auto& tw = m.tower();
    int n = m.cols();
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int c : res.pivots) is_pivot[std::size_t(c)] = true;

    std::vector<std::vector<TopElement>> rows;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[std::size_t(f)]) continue;
        std::vector<TopElement> x(std::size_t(n), tw->top_zero());
        x[std::size_t(f)] = tw->top_one();
        for (std::size_t j = 0; j < res.pivots.size(); ++j)
            x[std::size_t(res.pivots[j])] = tw->top_neg(res.r.at(int(j), f));
        rows.push_back(std::move(x));
    }
    if (rows.empty()) return RowSpace::zero(tw, m.level(), n);
    return RowSpace::from_matrix(Matrix::from_rows(tw, m.level(), n, std::move(rows)));
}

RowSpace intersect(const RowSpace& u, const RowSpace& v) {
    if (!same_tower(u.tower(), v.tower()) || u.level() != v.level())
        throw Error("intersect: incompatible spaces");
    if (u.ambient() != v.ambient()) throw Error("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return RowSpace::zero(u.tower(), u.level(), u.ambient());

    Matrix stacked = vstack(u.basis(), v.basis());
    RowSpace left = kernel(stacked.transpose()); // rows z with z * stacked = 0
    if (left.dim() == 0) return RowSpace::zero(u.tower(), u.level(), u.ambient());
    Matrix x = left.basis().submatrix(0, 0, left.dim(), u.dim());
    return RowSpace::from_matrix(x * u.basis());
}

RowSpace span_sum(const RowSpace& u, const RowSpace& v) {
    if (!same_tower(u.tower(), v.tower()) || u.level() != v.level())
        throw Error("span_sum: incompatible spaces");
    if (u.ambient() != v.ambient()) throw Error("span_sum: ambient mismatch");
    return RowSpace::from_matrix(vstack(u.basis(), v.basis()));
}

Matrix complete_basis(const RowSpace& sub, const RowSpace& full) {
    if (!same_tower(sub.tower(), full.tower()) || sub.level() != full.level())
        throw Error("complete_basis: incompatible spaces");
    if (sub.ambient() != full.ambient()) throw Error("complete_basis: ambient mismatch");
    if (!full.contains(sub)) throw Error("complete_basis: sub is not contained in full");

    const auto& tw = sub.tower();
    Matrix out = sub.basis();
    Matrix reducer = sub.basis(); // stays RREF throughout
    for (int i = 0; i < full.dim() && out.rows() < full.dim(); ++i) {
        auto cand = full.basis().row(i);
        if (row_is_zero(tw, reduce_row(tw, cand, reducer))) continue;
        out = vstack(out, Matrix::row_vector(tw, sub.level(), cand));
        reducer = rref(out).r;
    }
    if (out.rows() != full.dim()) throw InternalError("complete_basis: completion fell short");
    return out;
}

} // namespace rmhull
