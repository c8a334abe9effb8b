#pragma once

#include <cstddef>
#include <vector>

#include "spk/errors.hpp"

namespace spk::exact {

// Dense matrix over an exact coefficient type.  rank() additionally needs
// division on K, the ring operations suffice for everything else.
template <typename K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    explicit Matrix(const std::vector<std::vector<K>>& rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()), a_(rows_ * cols_) {
        for (size_t i = 0; i < rows_; ++i) {
            if (rows[i].size() != cols_) throw Error("ragged rows");
            for (size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
        }
    }

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    K& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const K& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    bool is_zero() const {
        for (const K& v : a_)
            if (!(v == K())) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch");
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error("matrix shape mismatch");
        Matrix r(x.rows_, x.cols_);
        for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw Error("matrix shape mismatch in product");
        Matrix r(x.rows_, y.cols_);
        for (size_t i = 0; i < x.rows_; ++i)
            for (size_t k = 0; k < x.cols_; ++k) {
                const K& v = x.at(i, k);
                if (v == K()) continue;
                for (size_t j = 0; j < y.cols_; ++j) r.at(i, j) = r.at(i, j) + v * y.at(k, j);
            }
        return r;
    }

    Matrix scaled(const K& c) const {
        Matrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<K> row(size_t i) const {
        return std::vector<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<K> col(size_t j) const {
        std::vector<K> v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    void append_row(const std::vector<K>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw Error("row length mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    size_t rank() const {
        Matrix m = *this;
        size_t r = 0;
        for (size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
            size_t piv = r;
            while (piv < m.rows_ && m.at(piv, c) == K()) ++piv;
            if (piv == m.rows_) continue;
            if (piv != r)
                for (size_t j = 0; j < m.cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
            const K p = m.at(r, c);
            for (size_t i = r + 1; i < m.rows_; ++i) {
                if (m.at(i, c) == K()) continue;
                K f = m.at(i, c) / p;
                for (size_t j = c; j < m.cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

private:
    size_t rows_, cols_;
    std::vector<K> a_;
};

template <typename K>
size_t matrix_rank(const Matrix<K>& m) {
    return m.rank();
}

template <typename K>
size_t matrix_rank(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return 0;
    return Matrix<K>(rows).rank();
}

} // namespace spk::exact
