#pragma once

#include "incidence/incidence.hpp"

namespace incidence {

/// The generalized quadrangle GQ(2,2): points are the 2-subsets of a
/// 6-element set, blocks the 15 perfect matchings on it, incidence is
/// membership.
IncidenceStructure gen_doily();

/// The n x n grid: n^2 points, blocks are the n rows and n columns.
/// Realizes GQ(n-1, 1). Requires n >= 2.
IncidenceStructure gen_grid(std::size_t n);

} // namespace incidence
