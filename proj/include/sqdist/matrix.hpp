#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sqdist/errors.hpp"
#include "sqdist/rational.hpp"

namespace sqdist {

// Dense row-major matrix. Everything at desk scale, so no attempt at
// sparsity or blocking.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols, const T& init = T(0))
        : rows_(rows), cols_(cols), entries_(rows * cols, init) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_)
                throw InvalidParametersError("ragged initializer list");
            for (const auto& v : row) entries_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix ones(std::size_t rows, std::size_t cols) {
        return Matrix(rows, cols, T(1));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Principal submatrix with row i and column j removed.
    Matrix minor_matrix(std::size_t di, std::size_t dj) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, r = 0; i < rows_; ++i) {
            if (i == di) continue;
            for (std::size_t j = 0, c = 0; j < cols_; ++j) {
                if (j == dj) continue;
                m(r, c) = (*this)(i, j);
                ++c;
            }
            ++r;
        }
        return m;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw InvalidParametersError("matrix product dimension mismatch");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw InvalidParametersError("matrix sum dimension mismatch");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = entries_[i] + rhs.entries_[i];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw InvalidParametersError("matrix difference dimension mismatch");
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            out.entries_[i] = entries_[i] - rhs.entries_[i];
        return out;
    }

    Matrix operator-() const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
        return out;
    }

    Matrix scaled(const T& factor) const {
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    std::vector<T> row_sums() const {
        std::vector<T> sums(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) sums[i] += (*this)(i, j);
        return sums;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<long long>;
using RatMatrix = Matrix<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

}  // namespace sqdist
