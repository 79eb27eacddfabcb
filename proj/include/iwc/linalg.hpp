// Exact linear algebra over Q and Z.
//
// Dense matrices are used for the small per-weight problems (root systems,
// weight spaces of highest-weight modules); the sparse integer echelon is
// used for the large nullspace problems in the symmetric algebra.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iwc {

using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

/// Renders "p" or "p/q" in lowest terms.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

bool is_integral(const Rational& q);
bool is_zero(const Vec& v);

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Matrix operator*(const Matrix& other) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix transpose() const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan with the first nonzero entry of each column as pivot.
Echelon reduced_row_echelon(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in reduced form.
std::vector<Vec> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// A subspace of Q^n held as a reduced row echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace whole(std::size_t ambient);

    /// Returns true when v was not already in the span.
    bool add(const Vec& v);
    void add_all(const Subspace& other);

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    const std::vector<Vec>& basis() const { return basis_; }

    bool operator==(const Subspace& other) const;

private:
    Vec reduce(Vec v) const;

    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Row-sparse matrix over the rationals.
struct SparseMatrix {
    std::vector<std::map<int, Rational>> rows;
    std::size_t ncols = 0;

    explicit SparseMatrix(std::size_t n = 0) : rows(n), ncols(n) {}
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), ncols(c) {}

    static SparseMatrix from_dense(const Matrix& m);
    Matrix to_dense() const;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return ncols; }

    SparseMatrix operator*(const SparseMatrix& o) const;
    Vec operator*(const Vec& v) const;
    /// Row vector times matrix.
    Vec left_apply(const Vec& v) const;
    SparseMatrix axpy(const Rational& s, const SparseMatrix& o) const;  // this + s * o
    SparseMatrix scaled(const Rational& s) const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const { return rows == o.rows && ncols == o.ncols; }
};

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column

/// Incremental fraction-free row echelon form of an integer matrix.
///
/// Rows are reduced against existing pivot rows by integer cross
/// multiplication followed by removal of the row content, so no fractions
/// appear during elimination. The pivot of a row is its first nonzero column.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row increased the rank.
    bool insert(SparseRow row);

    std::size_t rank() const { return pivot_rows_.size(); }
    std::size_t cols() const { return cols_; }

    /// Kernel basis: for each free column f, the unique kernel vector with a
    /// 1 at f and 0 at every other free column.
    std::vector<Vec> kernel() const;

private:
    std::size_t cols_;
    std::map<std::size_t, SparseRow> pivot_rows_;
};

}  // namespace iwc
