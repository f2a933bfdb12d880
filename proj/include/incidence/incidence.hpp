#pragma once

#include "exactla/matz.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace incidence {

/// A finite incidence structure: points, blocks and the 0-1 flag matrix,
/// which is the single source of truth (flag sets are derived views).
struct IncidenceStructure {
    std::size_t n_points = 0;
    std::size_t n_blocks = 0;
    exactla::MatZ flags;   // n_points x n_blocks

    IncidenceStructure() = default;
    IncidenceStructure(std::size_t n1, std::size_t n2)
        : n_points(n1), n_blocks(n2), flags(n1, n2) {}

    IncidenceStructure dual() const {
        IncidenceStructure d(n_blocks, n_points);
        d.flags = flags.transposed();
        return d;
    }

    std::vector<std::size_t> block_members(std::size_t block) const {
        std::vector<std::size_t> v;
        for (std::size_t x = 0; x < n_points; ++x)
            if (flags(x, block)) v.push_back(x);
        return v;
    }
    std::vector<std::size_t> blocks_through(std::size_t point) const {
        std::vector<std::size_t> v;
        for (std::size_t y = 0; y < n_blocks; ++y)
            if (flags(point, y)) v.push_back(y);
        return v;
    }
};

/// Parameters of a strongly regular design: replication numbers,
/// block/point intersection numbers and the four local regularity counts.
struct SrdParams {
    std::int64_t s1 = 0, s2 = 0;
    std::int64_t a1 = 0, b1 = 0;
    std::int64_t a2 = 0, b2 = 0;
    std::int64_t N1 = 0, P1 = 0;
    std::int64_t N2 = 0, P2 = 0;

    bool operator==(const SrdParams&) const = default;
};

/// First violated axiom (1..6) with a concrete witness.
struct Violation {
    int condition = 0;
    std::string witness;
};

using SrdCheckResult = std::variant<SrdParams, Violation>;

/// Checks the six strongly-regular-design axioms by exhaustive counting,
/// including the dual condition; on failure reports the lexicographically
/// first offending pair.
SrdCheckResult check_srd(const IncidenceStructure& d);

/// Simple graph as a symmetric 0-1 adjacency matrix with zero diagonal.
struct Graph {
    exactla::MatZ adjacency;

    std::size_t order() const { return adjacency.rows(); }
};

Graph point_graph(const IncidenceStructure& d, const SrdParams& params);
Graph block_graph(const IncidenceStructure& d, const SrdParams& params);
Graph complement(const Graph& g);

struct SrgParams {
    std::int64_t v = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParams&) const = default;
};
struct NotStronglyRegular {
    std::string reason;
};
using SrgCheckResult = std::variant<SrgParams, NotStronglyRegular>;

/// (v,k,lambda,mu) when constant over all pairs; complete and edgeless
/// graphs are rejected (mu resp. lambda would be vacuous).
SrgCheckResult srg_params_of(const Graph& g);

/// The five incidence/adjacency matrix identities of an SRD, each checked
/// by exact integer arithmetic:
///   (i)  row sums of N are s2, column sums are s1
///   (ii) N N^T  = s2 I + a2 A1 + b2 (J - I - A1)
///  (iii) N^T N  = s1 I + a1 A2 + b1 (J - I - A2)
///   (iv) A1 N   = (N1-P1) N + P1 J
///    (v) N A2   = (N2-P2) N + P2 J
struct MatrixIdentityReport {
    std::array<bool, 5> holds{};
    bool all() const {
        for (bool b : holds) if (!b) return false;
        return true;
    }
};

MatrixIdentityReport verify_matrix_identities(const IncidenceStructure& d,
                                              const SrdParams& params);

} // namespace incidence
