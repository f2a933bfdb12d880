#pragma once

#include "exactla/fp.hpp"
#include "exactla/matz.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace exactla {

/// Dense matrix over GF(p), entries reduced residues.
class MatF {
public:
    MatF(std::size_t rows, std::size_t cols, PrimeModulus m)
        : rows_(rows), cols_(cols), mod_(m), e_(rows * cols, 0) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("MatF: dimensions must be positive");
    }

    static MatF identity(std::size_t n, PrimeModulus m) {
        MatF r(n, n, m);
        for (std::size_t i = 0; i < n; ++i) r(i, i) = 1 % static_cast<Res>(m.value());
        return r;
    }
    static MatF from_int(const MatZ& z, PrimeModulus m) {
        MatF r(z.rows(), z.cols(), m);
        for (std::size_t i = 0; i < z.rows(); ++i)
            for (std::size_t j = 0; j < z.cols(); ++j)
                r(i, j) = m.reduce(z(i, j));
        return r;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    PrimeModulus modulus() const { return mod_; }

    Res& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    Res operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::span<const Res> row(std::size_t i) const { return {e_.data() + i * cols_, cols_}; }

    MatF operator+(const MatF& o) const {
        MatF r(rows_, cols_, mod_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_.add(e_[i], o.e_[i]);
        return r;
    }
    MatF operator-(const MatF& o) const {
        MatF r(rows_, cols_, mod_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_.sub(e_[i], o.e_[i]);
        return r;
    }
    MatF operator*(const MatF& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("MatF: shape mismatch in product");
        MatF r(rows_, o.cols_, mod_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                Res a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) = mod_.add(r(i, j), mod_.mul(a, o(k, j)));
            }
        return r;
    }
    MatF scaled(Res c) const {
        MatF r(rows_, cols_, mod_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = mod_.mul(c, e_[i]);
        return r;
    }
    MatF transposed() const {
        MatF r(cols_, rows_, mod_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<Res> apply(std::span<const Res> x) const {
        std::vector<Res> y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            Res acc = 0;
            for (std::size_t j = 0; j < cols_; ++j)
                acc = mod_.add(acc, mod_.mul((*this)(i, j), x[j]));
            y[i] = acc;
        }
        return y;
    }

    Res trace() const {
        Res t = 0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t = mod_.add(t, (*this)(i, i));
        return t;
    }

    bool operator==(const MatF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && e_ == o.e_;
    }
    bool operator!=(const MatF& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto x : e_) if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    PrimeModulus mod_;
    std::vector<Res> e_;
};

struct RrefResult {
    MatF reduced;
    std::size_t rank;
    std::vector<std::size_t> pivot_columns;
};

/// Canonical reduced row-echelon form (Gauss-Jordan over GF(p)).
RrefResult rref(const MatF& m);

/// Reduced echelon rows of the span of the given vectors; zero rows dropped.
std::vector<std::vector<Res>> echelon_rows(std::vector<std::vector<Res>> rows,
                                           PrimeModulus m);

/// One solution of A x = b, or nullopt if inconsistent.
std::optional<std::vector<Res>> solve(const MatF& a, std::span<const Res> b);

} // namespace exactla
