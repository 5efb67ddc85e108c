#pragma once

// Sparse and dense linear algebra over Q(v).

#include <map>
#include <optional>
#include <vector>

#include "qcentre/errors.hpp"
#include "qcentre/qfield.hpp"

namespace qcentre {

/// Row-major sparse matrix over Q(v); absent entries are zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, QScalar(1));
        return m;
    }
    static Matrix diagonal(const std::vector<QScalar>& d)
    {
        Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (int i = 0; i < m.rows_; ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QScalar get(int r, int c) const
    {
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = row.find(c);
        return it == row.end() ? QScalar{} : it->second;
    }
    void set(int r, int c, const QScalar& v)
    {
        auto& row = data_[static_cast<std::size_t>(r)];
        if (v.is_zero())
            row.erase(c);
        else
            row[c] = v;
    }
    void add(int r, int c, const QScalar& v)
    {
        if (v.is_zero()) return;
        auto& row = data_[static_cast<std::size_t>(r)];
        auto [it, fresh] = row.try_emplace(c, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) row.erase(it);
        }
    }
    const std::map<int, QScalar>& row(int r) const { return data_[static_cast<std::size_t>(r)]; }

    bool is_zero() const
    {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }
    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : data_) n += r.size();
        return n;
    }

    QScalar trace() const
    {
        QScalar t;
        for (int i = 0; i < rows_ && i < cols_; ++i) t += get(i, i);
        return t;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row(r)) t.set(c, r, v);
        return t;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.row(r)) add(r, c, v);
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.row(r)) add(r, c, -v);
        return *this;
    }
    Matrix& operator*=(const QScalar& s)
    {
        if (s.is_zero()) return *this = Matrix(rows_, cols_);
        for (auto& row : data_)
            for (auto& [c, v] : row) v *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const QScalar& s) { return a *= s; }
    friend Matrix operator*(const QScalar& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix shape mismatch in product");
        Matrix p(a.rows_, b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (const auto& [k, av] : a.row(r))
                for (const auto& [c, bv] : b.row(k)) p.add(r, c, av * bv);
        return p;
    }

    /// Kronecker product; basis index of (i, j) is i * b.rows() + j.
    static Matrix kron(const Matrix& a, const Matrix& b)
    {
        Matrix k(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int r = 0; r < a.rows_; ++r)
            for (const auto& [c, av] : a.row(r))
                for (int s = 0; s < b.rows_; ++s)
                    for (const auto& [d, bv] : b.row(s)) k.set(r * b.rows_ + s, c * b.cols_ + d, av * bv);
        return k;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Dense copy as a row-major table.
    std::vector<std::vector<QScalar>> dense() const
    {
        std::vector<std::vector<QScalar>> d(static_cast<std::size_t>(rows_),
                                            std::vector<QScalar>(static_cast<std::size_t>(cols_)));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row(r)) d[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        return d;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, QScalar>> data_;

    void check_same(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch");
    }
};

using DenseMatrix = std::vector<std::vector<QScalar>>;

/// Row echelon form in place; returns pivot columns.
inline std::vector<int> row_reduce(DenseMatrix& m)
{
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        QScalar inv = m[r][c].inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m[r][k].is_zero()) m[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            QScalar f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

inline int rank(DenseMatrix m) { return static_cast<int>(row_reduce(m).size()); }

inline QScalar determinant(DenseMatrix m)
{
    const std::size_t n = m.size();
    QScalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return QScalar{};
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        QScalar inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            QScalar f = m[i][c] * inv;
            for (std::size_t k = c; k < n; ++k)
                if (!m[c][k].is_zero()) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Solves a X = b for square nonsingular a; b has one column per right-hand side.
inline DenseMatrix solve(const DenseMatrix& a, const DenseMatrix& b)
{
    const std::size_t n = a.size();
    const std::size_t k = n ? b[0].size() : 0;
    DenseMatrix aug(n, std::vector<QScalar>(n + k));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        for (std::size_t j = 0; j < k; ++j) aug[i][n + j] = b[i][j];
    }
    auto piv = row_reduce(aug);
    if (piv.size() != n || (n && piv.back() != static_cast<int>(n) - 1))
        throw DomainError("singular system");
    DenseMatrix x(n, std::vector<QScalar>(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x[i][j] = aug[i][n + j];
    return x;
}

} // namespace qcentre
