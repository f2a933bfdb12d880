#pragma once

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace exactla {

/// Dense integer matrix (64-bit entries). Workhorse for the combinatorial
/// side: flag matrices, adjacency matrices, relation matrices and their
/// exact integer products.
class MatZ {
public:
    MatZ() : rows_(0), cols_(0) {}
    MatZ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static MatZ identity(std::size_t n) {
        MatZ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static MatZ ones(std::size_t rows, std::size_t cols) {
        MatZ m(rows, cols);
        for (auto& x : m.e_) x = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    MatZ operator+(const MatZ& o) const {
        check_same_shape(o);
        MatZ r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }
    MatZ operator-(const MatZ& o) const {
        check_same_shape(o);
        MatZ r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }
    MatZ operator*(const MatZ& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("MatZ: shape mismatch in product");
        MatZ r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                std::int64_t a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }
    MatZ scaled(std::int64_t c) const {
        MatZ r(rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
        return r;
    }
    MatZ transposed() const {
        MatZ r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    bool operator==(const MatZ& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const MatZ& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto x : e_) if (x != 0) return false;
        return true;
    }

private:
    void check_same_shape(const MatZ& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("MatZ: shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<std::int64_t> e_;
};

} // namespace exactla
