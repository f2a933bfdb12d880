#pragma once

#include "ccalgebra/algebra.hpp"
#include "ccalgebra/coherent.hpp"

#include <stdexcept>
#include <vector>

namespace ccalgebra {

/// One simple component M_n(F_{p^f}).
struct WedderburnComponent {
    std::size_t n = 0;
    std::size_t f = 0;

    bool operator==(const WedderburnComponent&) const = default;
    auto operator<=>(const WedderburnComponent&) const = default;
};

struct WedderburnReport {
    std::vector<WedderburnComponent> components;   // sorted by (n, f)
    std::size_t total_dim = 0;                     // sum of n^2 f
};

/// A component dimension divided by its center degree is not a perfect
/// square: either a bug or a non-semisimple quotient slipped through.
struct NonSquareDimension : std::logic_error {
    using std::logic_error::logic_error;
};

/// Wedderburn decomposition of a / Rad(a): quotient by the radical, center
/// by linear commutation equations, center split into fields through the
/// Frobenius-fixed subalgebra, component sizes from dimensions.
WedderburnReport wedderburn(const FpAlgebra& a);

/// dim of A/[A,A] for the design algebra: 10 minus the rank of the span of
/// the structure-constant commutators, over Q or over GF(p).
std::size_t commutator_quotient_dim_rational(const StructureConstants& sc);
std::size_t commutator_quotient_dim_mod_p(const StructureConstants& sc, PrimeModulus p);

/// Same quantity for an arbitrary table algebra.
std::size_t commutator_quotient_dim(const FpAlgebra& a);

} // namespace ccalgebra
