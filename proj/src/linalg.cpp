#include "iwc/linalg.hpp"

#include "iwc/errors.hpp"

#include <algorithm>

namespace iwc {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("not a rational number: '" + s + "'");
    q.canonicalize();
    return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InternalError("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw InternalError("Matrix product: shape mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                if (other(k, j) != 0) out(i, j) += a * other(k, j);
        }
    return out;
}

Vec Matrix::operator*(const Vec& v) const {
    if (cols_ != v.size()) throw InternalError("Matrix-vector product: shape mismatch");
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InternalError("Matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InternalError("Matrix difference: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Echelon reduced_row_echelon(Matrix m) {
    Echelon e;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
        const Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(lead_row, j) != 0) m(r, j) -= f * m(lead_row, j);
        }
        e.pivots.push_back(c);
        ++lead_row;
    }
    e.rref = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
    const Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = reduced_row_echelon(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw InternalError("solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const Echelon e = reduced_row_echelon(std::move(aug));
    Vec x(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;
        x[e.pivots[r]] = e.rref(r, a.cols());
    }
    return x;
}

// Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.add(v);
    return s;
}

Subspace Subspace::whole(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = 1;
        s.add(v);
    }
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw InternalError("Subspace: dimension mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational f = v[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_[i][j] != 0) v[j] -= f * basis_[i][j];
    }
    return v;
}

bool Subspace::add(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p] == 0) ++p;
    if (p == ambient_) return false;
    const Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    for (auto& b : basis_) {
        const Rational f = b[p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (r[j] != 0) b[j] -= f * r[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(r));
    return true;
}

void Subspace::add_all(const Subspace& other) {
    for (const auto& v : other.basis_) add(v);
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const Vec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
}

// SparseEchelon

namespace {

void remove_content(SparseRow& row) {
    Integer g = 0;
    for (const auto& [c, x] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (row.front().second < 0) g = -g;
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// a * row - b * pivot
SparseRow combine(const Integer& a, const SparseRow& row, const Integer& b, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.emplace_back(pivot[j].first, -b * pivot[j].second);
            ++j;
        } else {
            Integer x = a * row[i].second - b * pivot[j].second;
            if (x != 0) out.emplace_back(row[i].first, std::move(x));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

bool SparseEchelon::insert(SparseRow row) {
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    while (!row.empty()) {
        const std::size_t lead = row.front().first;
        if (lead >= cols_) throw InternalError("SparseEchelon: column out of range");
        auto it = pivot_rows_.find(lead);
        if (it == pivot_rows_.end()) {
            remove_content(row);
            pivot_rows_.emplace(lead, std::move(row));
            return true;
        }
        const SparseRow& pivot = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), pivot.front().second.get_mpz_t(), row.front().second.get_mpz_t());
        const Integer a = pivot.front().second / g;
        const Integer b = row.front().second / g;
        row = combine(a, row, b, pivot);
        if (!row.empty()) remove_content(row);
    }
    return false;
}

std::vector<Vec> SparseEchelon::kernel() const {
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivot_rows_.count(f)) continue;
        std::map<std::size_t, Rational> x;
        x[f] = 1;
        // Back substitution from the last pivot upwards.
        for (auto it = pivot_rows_.rbegin(); it != pivot_rows_.rend(); ++it) {
            const SparseRow& row = it->second;
            Rational acc = 0;
            for (std::size_t k = 1; k < row.size(); ++k) {
                auto xv = x.find(row[k].first);
                if (xv != x.end()) acc += Rational(row[k].second) * xv->second;
            }
            if (acc != 0) x[it->first] = -acc / Rational(row.front().second);
        }
        Vec v(cols_);
        for (auto& [c, val] : x) v[c] = val;
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) s.rows[r][static_cast<int>(c)] = m(r, c);
    return s;
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m(r, c) = v;
    return m;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    SparseMatrix out(rows.size(), o.ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, a] : rows[i])
            for (const auto& [j, b] : o.rows[k]) {
                Rational& slot = out.rows[i][j];
                slot += a * b;
                if (slot == 0) out.rows[i].erase(j);
            }
    return out;
}

Vec SparseMatrix::operator*(const Vec& v) const {
    Vec out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [k, a] : rows[i])
            if (v[k] != 0) out[i] += a * v[k];
    return out;
}

Vec SparseMatrix::left_apply(const Vec& v) const {
    Vec out(ncols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (v[i] == 0) continue;
        for (const auto& [k, a] : rows[i]) out[k] += v[i] * a;
    }
    return out;
}

SparseMatrix SparseMatrix::axpy(const Rational& s, const SparseMatrix& o) const {
    SparseMatrix out = *this;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, b] : o.rows[i]) {
            Rational& slot = out.rows[i][j];
            slot += s * b;
            if (slot == 0) out.rows[i].erase(j);
        }
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    if (s == 0) return SparseMatrix(rows.size(), ncols);
    SparseMatrix out = *this;
    for (auto& row : out.rows)
        for (auto& [j, v] : row) v *= s;
    return out;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.empty(); });
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return (a * b).axpy(-1, b * a); }

}  // namespace iwc
