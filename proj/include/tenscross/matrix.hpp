#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tenscross/rational.hpp"

namespace tenscross {

using Vec = std::vector<Rational>;

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/*
 * Dense row-major rational matrix.
 *
 * Tensor convention (used by every module): in V (x) W the basis vector
 * e_i (x) f_j has index i * dim W + j, i.e. the left factor varies slowest.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);
    static Matrix column(const Vec& v);
    static Matrix row(const Vec& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    Vec row_vec(int i) const;
    void set_col(int j, const Vec& v);

    Matrix transpose() const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix block(int r0, int c0, int nr, int nc) const;
    Matrix select_rows(const std::vector<int>& idx) const;
    Matrix select_cols(const std::vector<int>& idx) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

Matrix kronecker(const Matrix& a, const Matrix& b);

// Reduced row echelon form. pivots[i] is the pivot column of row i.
struct Echelon {
    Matrix rref;
    std::vector<int> pivots;
};
Echelon row_reduce(const Matrix& m);

int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
Matrix kernel_matrix(const Matrix& m);  // kernel basis as columns (cols x k)
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);  // m X = b, column by column
bool is_invertible(const Matrix& m);
Matrix invert(const Matrix& m);
Rational determinant(const Matrix& m);

/*
 * A subspace given by a basis (columns of B) in reduced column-echelon form:
 * B restricted to the pivot rows is the identity, so coordinates of any vector
 * in the span are read off at the pivot rows.
 */
struct Subspace {
    Matrix basis;             // ambient x k
    std::vector<int> pivots;  // k rows of the ambient space

    int dim() const { return basis.cols(); }
    int ambient() const { return basis.rows(); }
    Vec coords(const Vec& v) const;       // assumes v in the span
    Matrix coords(const Matrix& m) const;  // column-wise
    bool contains(const Vec& v) const;
};
Subspace kernel_subspace(const Matrix& m);
Subspace column_space(const Matrix& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& s, const Vec& a);
bool vec_is_zero(const Vec& a);

/*
 * Compressed sparse rows, used for the large structured maps that appear when
 * composing associators.
 */
class SparseMatrix {
public:
    using Entry = std::pair<int, Rational>;

    SparseMatrix() = default;
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows) {}

    static SparseMatrix identity(int n);
    static SparseMatrix from_dense(const Matrix& m);
    Matrix to_dense() const;

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& row(int i) const { return r_[i]; }
    std::vector<Entry>& row(int i) { return r_[i]; }
    // Entries must be pushed in increasing column order per row.
    void push(int i, int j, const Rational& v) {
        if (!v.is_zero()) r_[i].emplace_back(j, v);
    }
    std::size_t nnz() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }
    Vec apply(const Vec& v) const;
    SparseMatrix transpose() const;
    bool is_identity() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::vector<Entry>> r_;
};

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace tenscross
