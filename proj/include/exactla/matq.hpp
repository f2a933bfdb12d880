#pragma once

#include "exactla/matz.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace exactla {

/// Dense matrix over the exact rationals. No floating point anywhere;
/// entries are GMP rationals kept in lowest terms by the gmp canonicalizer.
class MatQ {
public:
    MatQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("MatQ: dimensions must be positive");
    }

    static MatQ identity(std::size_t n) {
        MatQ r(n, n);
        for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
        return r;
    }
    static MatQ from_int(const MatZ& z) {
        MatQ r(z.rows(), z.cols());
        for (std::size_t i = 0; i < z.rows(); ++i)
            for (std::size_t j = 0; j < z.cols(); ++j)
                r(i, j) = static_cast<long>(z(i, j));
        return r;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    mpq_class& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    MatQ operator+(const MatQ& o) const;
    MatQ operator-(const MatQ& o) const;
    MatQ operator*(const MatQ& o) const;
    MatQ scaled(const mpq_class& c) const;

    bool operator==(const MatQ& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool is_zero() const {
        for (const auto& x : e_) if (x != 0) return false;
        return true;
    }

private:
    std::size_t rows_, cols_;
    std::vector<mpq_class> e_;
};

/// Exact rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators.
std::size_t rank_rational(const MatQ& m);

/// Rational polynomial, coefficient i on x^i.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    PolyQ operator*(const PolyQ& o) const;
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }

    MatQ eval(const MatQ& m) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpq_class> c_;
};

/// Minimal polynomial over Q, same Krylov/lcm scheme as the GF(p) version.
PolyQ minpoly(const MatQ& m);

} // namespace exactla
