#pragma once

#include "exactla/fp.hpp"
#include "exactla/matf.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace exactla {

/// Univariate polynomial over GF(p); coefficient i belongs to x^i, trailing
/// zeros trimmed (zero polynomial has empty coefficient list).
class PolyF {
public:
    explicit PolyF(PrimeModulus m) : mod_(m) {}
    PolyF(PrimeModulus m, std::vector<Res> coeffs) : mod_(m), c_(std::move(coeffs)) {
        for (auto& x : c_) x %= static_cast<Res>(mod_.value());
        trim();
    }

    static PolyF zero(PrimeModulus m) { return PolyF(m); }
    static PolyF one(PrimeModulus m) { return PolyF(m, {1}); }
    static PolyF x(PrimeModulus m) { return PolyF(m, {0, 1}); }
    /// x - c
    static PolyF linear(PrimeModulus m, Res c) { return PolyF(m, {m.neg(m.reduce(static_cast<std::int64_t>(c))), 1}); }

    PrimeModulus modulus() const { return mod_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Res coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Res leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<Res>& coeffs() const { return c_; }

    bool operator==(const PolyF& o) const { return c_ == o.c_ && mod_ == o.mod_; }
    bool operator!=(const PolyF& o) const { return !(*this == o); }

    PolyF operator+(const PolyF& o) const;
    PolyF operator-(const PolyF& o) const;
    PolyF operator*(const PolyF& o) const;
    PolyF scaled(Res c) const;
    PolyF monic() const;
    PolyF derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<PolyF, PolyF> divmod(const PolyF& divisor) const;
    PolyF operator%(const PolyF& o) const { return divmod(o).second; }
    PolyF operator/(const PolyF& o) const { return divmod(o).first; }

    Res eval(Res x) const;
    MatF eval(const MatF& m) const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    PrimeModulus mod_;
    std::vector<Res> c_;
};

PolyF gcd(const PolyF& a, const PolyF& b);   // monic
PolyF lcm(const PolyF& a, const PolyF& b);   // monic
/// a^e mod f by binary powering.
PolyF powmod(const PolyF& a, std::uint64_t e, const PolyF& f);

/// Full factorization into monic irreducibles with multiplicities
/// (squarefree split, then Berlekamp with a deterministic GF(p) sweep;
/// intended for the small p, small degree regime of this library).
std::vector<std::pair<PolyF, std::size_t>> factor(const PolyF& f);

/// Characteristic polynomial (monic, of det(xI - M)) by the division-free
/// Samuelson-Berkowitz method, valid in any characteristic.
PolyF charpoly(const MatF& m);

/// Minimal polynomial via Krylov chains of the standard basis vectors and
/// lcm of the local relations.
PolyF minpoly(const MatF& m);

} // namespace exactla
