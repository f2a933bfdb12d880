#pragma once

#include "exactla/matz.hpp"
#include "incidence/incidence.hpp"

#include <array>
#include <cstdint>
#include <variant>

namespace ccalgebra {

/// The ten relation matrices of the design coherent configuration on
/// X = P ⊔ B, in the fixed order: point diagonal, point-graph adjacency,
/// point-graph non-adjacency, block diagonal, block-graph adjacency,
/// block-graph non-adjacency, flags, antiflags and their transposes.
struct CoherentConfig {
    std::size_t n1 = 0, n2 = 0;
    std::array<exactla::MatZ, 10> sigma;

    std::size_t order() const { return n1 + n2; }

    /// 1-based accessor matching the customary numbering.
    const exactla::MatZ& relation(int i) const { return sigma.at(static_cast<std::size_t>(i - 1)); }

    /// Checks the defining invariants: the ten matrices are 0-1, pairwise
    /// disjoint, sum to the all-ones matrix, the diagonal ones sum to the
    /// identity, and transposition permutes them as (7 9)(8 10).
    /// Throws std::logic_error on failure.
    void verify() const;
};

/// Builds the configuration from an SRD. Precondition: params = check_srd(d).
CoherentConfig build_cc(const incidence::IncidenceStructure& d,
                        const incidence::SrdParams& params);

/// Same construction driven by the observed maximal intersection numbers,
/// with no SRD assumption; the ten matrices always partition X x X, but the
/// span need not close under products.
CoherentConfig build_cc_raw(const incidence::IncidenceStructure& d);

/// Intersection numbers p_{ij}^k: sigma_i sigma_j = sum_k p_{ij}^k sigma_k.
struct StructureConstants {
    std::int64_t p[10][10][10] = {};

    /// 1-based accessor.
    std::int64_t coeff(int i, int j, int k) const {
        return p[i - 1][j - 1][k - 1];
    }
};

/// First product that leaves the integral span of the relations (1-based
/// indices and a witness entry).
struct NotCoherent {
    int i = 0, j = 0;
    std::size_t row = 0, col = 0;
};

using StructureConstantsResult = std::variant<StructureConstants, NotCoherent>;

/// Reads one candidate coefficient per relation class off the product and
/// verifies the claimed combination entrywise.
StructureConstantsResult structure_constants(const CoherentConfig& cc);

} // namespace ccalgebra
