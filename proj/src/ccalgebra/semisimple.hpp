#pragma once

// Internal machinery shared by the Wedderburn and quiver computations:
// center, Frobenius-fixed splitting of the center into primitive central
// idempotents, and per-component data. All inputs are assumed semisimple
// (callers quotient by the radical first).

#include "ccalgebra/algebra.hpp"
#include "ccalgebra/wedderburn.hpp"

#include <vector>

namespace ccalgebra::detail {

/// Center as a subspace: kernel of the stacked commutation equations.
Subspace center_of(const FpAlgebra& a);

struct Component {
    std::vector<Res> idempotent;   // primitive central idempotent
    std::size_t dim = 0;           // n^2 f
    std::size_t center_deg = 0;    // f
    std::size_t matrix_size = 0;   // n
};

/// Splits a semisimple algebra into its simple components: the primitive
/// central idempotents span the Frobenius-fixed subalgebra of the center,
/// and are separated by eigen-idempotents 1 - (u - c)^(p-1) of its basis
/// elements.
std::vector<Component> split_semisimple(const FpAlgebra& q);

/// A complete list of orthogonal primitive (not necessarily central)
/// idempotents of the semisimple algebra, tagged by component index; the
/// component entry count is its matrix size n.
struct PrimitiveDecomposition {
    std::vector<Component> components;
    std::vector<std::vector<Res>> idempotents;
    std::vector<std::size_t> component_of;
};

PrimitiveDecomposition primitive_idempotents(const FpAlgebra& q);

} // namespace ccalgebra::detail
