#pragma once

#include "ccalgebra/radical.hpp"
#include "ccalgebra/wedderburn.hpp"

#include <stdexcept>
#include <vector>

namespace ccalgebra {

/// Gabriel-quiver data: one vertex per simple module (canonical order by
/// component type, then a fixed coordinate tie-break). `idempotents` is the
/// complete lifted set of orthogonal primitive idempotents, summing to 1;
/// `idempotent_vertex` tags each with its vertex. Arrow, Cartan and Loewy
/// entries are GF(p)-dimensions computed from one representative idempotent
/// per vertex:
///   arrows[i][j] = dim e_i (Rad/Rad^2) e_j
///   cartan[i][j] = dim e_i A e_j
///   loewy_layers[i][k] = dim e_i Rad^k / Rad^{k+1}   (k = 0 gives the top)
struct QuiverReport {
    std::size_t vertices = 0;
    std::vector<WedderburnComponent> vertex_types;
    std::vector<std::vector<Res>> idempotents;
    std::vector<std::size_t> idempotent_vertex;
    std::vector<std::vector<std::size_t>> arrows;
    std::vector<std::vector<std::size_t>> cartan;
    std::vector<std::vector<std::size_t>> loewy_layers;
    std::vector<std::size_t> projective_dims;   // dim e_i A per vertex

    std::size_t arrow_total() const {
        std::size_t s = 0;
        for (const auto& row : arrows)
            for (auto x : row) s += x;
        return s;
    }
};

/// Idempotent lifting did not stabilize within the iteration budget.
struct LiftingFailure : std::logic_error {
    using std::logic_error::logic_error;
};

/// Lifts a complete orthogonal set of primitive idempotents from a/Rad(a)
/// (iterated p-th powering along the nilpotent kernel, with orthogonal
/// correction), then reads off the quiver, Cartan matrix and Loewy series
/// of the projective indecomposables.
QuiverReport quiver(const FpAlgebra& a);

} // namespace ccalgebra
