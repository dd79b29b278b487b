#include "tenscross/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace tenscross {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw DimensionMismatch("from_columns");
        for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vec& v) { return from_columns({v}, static_cast<int>(v.size())); }

Matrix Matrix::row(const Vec& v) {
    Matrix m(1, static_cast<int>(v.size()));
    for (int j = 0; j < m.cols(); ++j) m(0, j) = v[j];
    return m;
}

Vec Matrix::col(int j) const {
    Vec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row_vec(int i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
               a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

void Matrix::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector product");
    Vec out(a.rows_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
    Matrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.a_) x *= s;
    return c;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
    Matrix b(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

Matrix Matrix::select_rows(const std::vector<int>& idx) const {
    Matrix b(static_cast<int>(idx.size()), cols_);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
    return b;
}

Matrix Matrix::select_cols(const std::vector<int>& idx) const {
    Matrix b(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < b.cols(); ++j) b(i, j) = (*this)(i, idx[j]);
    return b;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack");
    Matrix c(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack");
    Matrix c(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
        for (int i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
    }
    return c;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) c(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return c;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Scale a row to coprime integers (content 1); zero rows are left alone.
void make_primitive(Vec& row) {
    Rational l = 1;
    for (const auto& x : row)
        if (!x.is_zero() && x.den() != 1) l *= Rational(x.den() / gcd64(l.num(), x.den()));
    if (!l.is_one())
        for (auto& x : row) x *= l;
    std::int64_t g = 0;
    for (const auto& x : row)
        if (!x.is_zero()) g = gcd64(g, x.num());
    if (g > 1)
        for (auto& x : row)
            if (!x.is_zero()) x = Rational(x.num() / g);
}

}  // namespace

/*
 * Fraction-free Gauss-Jordan: rows are kept as primitive integer vectors and
 * combined as p*row_i - a*row_r, then rescaled by their content. Pivot rows
 * are normalized to a leading 1 only at the end.
 */
Echelon row_reduce(const Matrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<Vec> rows(R);
    for (int i = 0; i < R; ++i) {
        rows[i] = m.row_vec(i);
        make_primitive(rows[i]);
    }
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (!rows[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(rows[p], rows[r]);
        const Rational piv = rows[r][c];
        for (int i = 0; i < R; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational a = rows[i][c];
            for (int j = 0; j < C; ++j) {
                if (rows[r][j].is_zero()) {
                    if (!rows[i][j].is_zero()) rows[i][j] *= piv;
                } else {
                    rows[i][j] = piv * rows[i][j] - a * rows[r][j];
                }
            }
            make_primitive(rows[i]);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e{Matrix(R, C), pivots};
    for (int i = 0; i < R; ++i) {
        Rational s = i < r ? rows[i][pivots[i]].inverse() : Rational(1);
        for (int j = 0; j < C; ++j) e.rref(i, j) = rows[i][j].is_zero() ? Rational() : rows[i][j] * s;
    }
    return e;
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<Vec> kernel_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(static_cast<int>(i), f);
        out.push_back(std::move(v));
    }
    return out;
}

Matrix kernel_matrix(const Matrix& m) { return Matrix::from_columns(kernel_basis(m), m.cols()); }

Subspace kernel_subspace(const Matrix& m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    Subspace s;
    std::vector<Vec> cols;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(static_cast<int>(i), f);
        cols.push_back(std::move(v));
        s.pivots.push_back(f);
    }
    s.basis = Matrix::from_columns(cols, m.cols());
    return s;
}

Subspace column_space(const Matrix& m) {
    Echelon e = row_reduce(m.transpose());
    Subspace s;
    s.pivots = e.pivots;
    s.basis = Matrix(m.rows(), static_cast<int>(e.pivots.size()));
    for (int k = 0; k < s.basis.cols(); ++k)
        for (int i = 0; i < m.rows(); ++i) s.basis(i, k) = e.rref(k, i);
    return s;
}

Vec Subspace::coords(const Vec& v) const {
    Vec c(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = v[pivots[k]];
    return c;
}

Matrix Subspace::coords(const Matrix& m) const { return m.select_rows(pivots); }

bool Subspace::contains(const Vec& v) const { return basis * coords(v) == v; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve");
    Echelon e = row_reduce(Matrix::hstack(m, Matrix::column(b)));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(static_cast<int>(i), m.cols());
    return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw DimensionMismatch("solve");
    Echelon e = row_reduce(Matrix::hstack(m, b));
    Matrix x(m.cols(), b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= m.cols()) return std::nullopt;
        for (int j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.rref(static_cast<int>(i), m.cols() + j);
    }
    return x;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("invert: not square");
    const int n = m.rows();
    Echelon e = row_reduce(Matrix::hstack(m, Matrix::identity(n)));
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) throw NotInvertible("matrix is singular");
    return e.rref.block(0, n, n, n);
}

Rational determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant: not square");
    Matrix a = m;
    const int n = a.rows();
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!a(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            Rational f = a(i, c) / a(c, c);
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add");
    Vec c = a;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

Vec vec_scale(const Rational& s, const Vec& a) {
    Vec c = a;
    for (auto& x : c) x *= s;
    return c;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

// ---- sparse ----

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix s(n, n);
    for (int i = 0; i < n; ++i) s.r_[i].emplace_back(i, Rational(1));
    return s;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s.push(i, j, m(i, j));
    return s;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : r_[i]) m(i, j) = v;
    return m;
}

std::size_t SparseMatrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : r_) n += r.size();
    return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("sparse product");
    SparseMatrix c(a.rows_, b.cols_);
    std::vector<Rational> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<int> touched;
    for (int i = 0; i < a.rows_; ++i) {
        touched.clear();
        for (const auto& [k, x] : a.r_[i])
            for (const auto& [j, y] : b.r_[k]) {
                if (!used[j]) {
                    used[j] = 1;
                    touched.push_back(j);
                    acc[j] = x * y;
                } else {
                    acc[j] += x * y;
                }
            }
        std::sort(touched.begin(), touched.end());
        for (int j : touched) {
            c.push(i, j, acc[j]);
            used[j] = 0;
        }
    }
    return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sparse sum");
    SparseMatrix c(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        const auto &x = a.r_[i], &y = b.r_[i];
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                c.r_[i].push_back(x[p++]);
            } else if (p == x.size() || y[q].first < x[p].first) {
                c.r_[i].push_back(y[q++]);
            } else {
                c.push(i, x[p].first, x[p].second + y[q].second);
                ++p;
                ++q;
            }
        }
    }
    return c;
}

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
    if (s.is_zero()) return SparseMatrix(a.rows_, a.cols_);
    SparseMatrix c = a;
    for (auto& r : c.r_)
        for (auto& e : r) e.second *= s;
    return c;
}

Vec SparseMatrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("sparse apply");
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, x] : r_[i])
            if (!v[j].is_zero()) out[i] += x * v[j];
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, x] : r_[i]) t.r_[j].emplace_back(i, x);
    return t;
}

bool SparseMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        if (r_[i].size() != 1 || r_[i][0].first != i || !r_[i][0].second.is_one()) return false;
    return true;
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.rows(); ++k) {
            auto& out = c.row(i * b.rows() + k);
            for (const auto& [j, x] : a.row(i))
                for (const auto& [l, y] : b.row(k)) out.emplace_back(j * b.cols() + l, x * y);
        }
    return c;
}

}  // namespace tenscross
