#pragma once

#include <cstdint>
#include <stdexcept>

namespace exactla {

using Res = std::uint64_t; // residue in [0, p)

/// A prime modulus, checked deterministically at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::int64_t p) : p_(p) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("PrimeModulus: not a prime");
        if (p > max_modulus)
            throw std::invalid_argument("PrimeModulus: modulus too large");
    }

    std::int64_t value() const { return p_; }

    Res reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return static_cast<Res>(r < 0 ? r + p_ : r);
    }

    Res add(Res a, Res b) const {
        Res s = a + b;
        return s >= up() ? s - up() : s;
    }
    Res sub(Res a, Res b) const { return a >= b ? a - b : a + up() - b; }
    Res neg(Res a) const { return a == 0 ? 0 : up() - a; }
    Res mul(Res a, Res b) const { return (a * b) % up(); }

    Res pow(Res a, std::uint64_t e) const {
        Res r = 1 % up();
        Res base = a % up();
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse by extended Euclid; a must be nonzero mod p.
    Res inv(Res a) const {
        if (a % up() == 0) throw std::domain_error("inv of zero residue");
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = static_cast<std::int64_t>(a % up());
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        return reduce(t);
    }

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeModulus& o) const { return p_ != o.p_; }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::int64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    // keeps products of two residues inside unsigned 64-bit range
    static constexpr std::int64_t max_modulus = (std::int64_t{1} << 31) - 1;

private:
    Res up() const { return static_cast<Res>(p_); }
    std::int64_t p_;
};

} // namespace exactla
