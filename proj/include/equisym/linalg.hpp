#pragma once

// Exact rational linear algebra: dense matrices with row reduction, sparse
// column matrices for tensor maps, and an incremental sparse span for ranks.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "equisym/error.hpp"

namespace equisym {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool isZero() const {
        for (const auto& x : data_)
            if (x != 0)
                return false;
        return true;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw UserError("matrix product: inner extents " + std::to_string(a.cols_) + " and " + std::to_string(b.rows_));
        ExactMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const mpq_class& x = a(i, k);
                if (x == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        out(i, j) += x * b(k, j);
            }
        return out;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] += b.data_[i];
        return a;
    }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            a.data_[i] -= b.data_[i];
        return a;
    }
    friend ExactMatrix operator-(ExactMatrix a) {
        for (auto& x : a.data_)
            x = -x;
        return a;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

struct RowEchelon {
    ExactMatrix reduced;             ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

inline RowEchelon rref(ExactMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col) == 0)
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != row)
            for (std::size_t c = col; c < m.cols(); ++c)
                std::swap(m(pivot, c), m(row, c));
        const mpq_class inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const mpq_class factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (m(row, c) != 0)
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).pivots.size(); }

/// Basis of the right kernel, one basis vector per column.
inline ExactMatrix kernelBasis(const ExactMatrix& m) {
    const auto ech = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : ech.pivots)
        isPivot[p] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!isPivot[c])
            freeCols.push_back(c);
    ExactMatrix basis(m.cols(), freeCols.size());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        basis(freeCols[k], k) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            basis(ech.pivots[r], k) = -ech.reduced(r, freeCols[k]);
    }
    return basis;
}

/// Exact inverse; throws ConsistencyError when singular.
inline ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols())
        throw UserError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const auto ech = rref(std::move(aug));
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
        throw ConsistencyError("matrix is singular");
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = ech.reduced(r, n + c);
    return inv;
}

// ---------------------------------------------------------------------------

using SparseVector = std::map<std::uint64_t, mpq_class>;

/// Incrementally built span of sparse vectors; add() reports independence.
class SparseSpan {
public:
    bool add(SparseVector v) {
        prune(v);
        while (!v.empty()) {
            const auto lead = v.begin()->first;
            auto it = pivotRow_.find(lead);
            if (it == pivotRow_.end()) {
                pivotRow_.emplace(lead, basis_.size());
                basis_.push_back(std::move(v));
                return true;
            }
            const SparseVector& b = basis_[it->second];
            const mpq_class factor = v.begin()->second / b.begin()->second;
            for (const auto& [idx, x] : b) {
                auto& slot = v[idx];
                slot -= factor * x;
                if (slot == 0)
                    v.erase(idx);
            }
        }
        return false;
    }

    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<SparseVector>& basis() const noexcept { return basis_; }

private:
    static void prune(SparseVector& v) { std::erase_if(v, [](const auto& kv) { return kv.second == 0; }); }

    std::vector<SparseVector> basis_;
    std::map<std::uint64_t, std::size_t> pivotRow_;
};

/// Sparse matrix stored by columns; used for maps between tensor powers.
class SparseExactMatrix {
public:
    using Column = std::map<std::uint64_t, mpq_class>;

    SparseExactMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

    std::uint64_t rows() const noexcept { return rows_; }
    std::uint64_t cols() const noexcept { return cols_; }

    void add(std::uint64_t r, std::uint64_t c, const mpq_class& x) {
        if (x == 0)
            return;
        auto& slot = columns_[c][r];
        slot += x;
        if (slot == 0)
            columns_[c].erase(r);
    }

    mpq_class at(std::uint64_t r, std::uint64_t c) const {
        const auto& col = columns_[c];
        auto it = col.find(r);
        return it == col.end() ? mpq_class(0) : it->second;
    }

    const Column& column(std::uint64_t c) const { return columns_[c]; }

    std::size_t nonZeros() const {
        std::size_t n = 0;
        for (const auto& col : columns_)
            n += col.size();
        return n;
    }

    SparseExactMatrix operator-() const {
        SparseExactMatrix out = *this;
        for (auto& col : out.columns_)
            for (auto& [r, x] : col)
                x = -x;
        return out;
    }

    friend SparseExactMatrix operator*(const SparseExactMatrix& a, const SparseExactMatrix& b) {
        if (a.cols_ != b.rows_)
            throw UserError("sparse product: inner extents " + std::to_string(a.cols_) + " and " + std::to_string(b.rows_));
        SparseExactMatrix out(a.rows_, b.cols_);
        for (std::uint64_t j = 0; j < b.cols_; ++j)
            for (const auto& [k, y] : b.columns_[j])
                for (const auto& [i, x] : a.columns_[k])
                    out.add(i, j, x * y);
        return out;
    }

    friend bool operator==(const SparseExactMatrix& a, const SparseExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
    }

    /// Row-major flattening (index r * cols + c).
    SparseVector flatten() const {
        SparseVector v;
        for (std::uint64_t c = 0; c < cols_; ++c)
            for (const auto& [r, x] : columns_[c])
                v.emplace(r * cols_ + c, x);
        return v;
    }

    ExactMatrix toDense() const {
        ExactMatrix m(rows_, cols_);
        for (std::uint64_t c = 0; c < cols_; ++c)
            for (const auto& [r, x] : columns_[c])
                m(r, c) = x;
        return m;
    }

private:
    std::uint64_t rows_;
    std::uint64_t cols_;
    std::vector<Column> columns_;
};

} // namespace equisym
