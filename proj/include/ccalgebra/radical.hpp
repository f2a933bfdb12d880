#pragma once

#include "ccalgebra/algebra.hpp"

#include <vector>

namespace ccalgebra {

/// Jacobson radical with its power filtration: dims of Rad, Rad^2, ... while
/// nonzero, and the Loewy length (least L with Rad^L = 0; 1 when semisimple).
struct RadicalReport {
    Subspace basis;
    std::vector<std::size_t> power_dims;
    std::size_t loewy_length = 1;
};

/// Radical by the layered characteristic-coefficient chain on the regular
/// representation (Cohen-Ivanyos-Wales): layer i cuts by the bilinear form
/// (a,b) -> c_{p^i}(L_{ab}), the x^(d-p^i) coefficient of the characteristic
/// polynomial; layer 0 is the ordinary trace form. The result is certified:
/// two-sided ideal, nilpotent power chain, and zero radical of the quotient.
/// Certificate failure throws std::logic_error.
RadicalReport radical(const FpAlgebra& a);

/// Exhaustive oracle: an element lies in the radical iff the left ideal it
/// generates is nilpotent; all p^dim elements are tested (necessary-condition
/// filters first, then the subspace nilpotency closure). Requires
/// p^dim <= 10^6. The passing set is verified to be exactly a subspace.
/// Enumeration is partitioned across threads when OpenMP is enabled; the
/// returned canonical subspace is schedule-independent.
Subspace radical_bruteforce(const FpAlgebra& a);

/// Single-threaded reference implementation of the same oracle.
Subspace radical_bruteforce_serial(const FpAlgebra& a);

} // namespace ccalgebra
