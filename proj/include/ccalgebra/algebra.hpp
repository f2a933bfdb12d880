#pragma once

#include "ccalgebra/coherent.hpp"
#include "exactla/fp.hpp"
#include "exactla/matf.hpp"
#include "exactla/poly.hpp"
#include "exactla/subspace.hpp"
#include "incidence/incidence.hpp"

#include <span>
#include <string>
#include <vector>

namespace ccalgebra {

using exactla::MatF;
using exactla::PrimeModulus;
using exactla::Res;
using exactla::Subspace;

/// A finite-dimensional unital algebra over GF(p) given by its structure
/// table. Elements are coordinate vectors in the distinguished basis.
/// Associativity and the unit law are verified on construction.
class FpAlgebra {
public:
    FpAlgebra(PrimeModulus mod, std::vector<std::string> labels,
              std::vector<Res> table, std::vector<Res> unit,
              std::vector<MatF> representation = {});

    std::size_t dim() const { return dim_; }
    PrimeModulus modulus() const { return mod_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Res>& unit() const { return unit_; }
    const std::vector<MatF>& representation() const { return rep_; }

    /// Coordinates of e_i * e_j.
    std::span<const Res> table_entry(std::size_t i, std::size_t j) const {
        return {table_.data() + (i * dim_ + j) * dim_, dim_};
    }

    std::vector<Res> basis_element(std::size_t i) const;
    std::vector<Res> zero() const { return std::vector<Res>(dim_, 0); }

    std::vector<Res> mul(std::span<const Res> a, std::span<const Res> b) const;
    std::vector<Res> add(std::span<const Res> a, std::span<const Res> b) const;
    std::vector<Res> sub(std::span<const Res> a, std::span<const Res> b) const;
    std::vector<Res> smul(Res c, std::span<const Res> a) const;
    std::vector<Res> pow(std::span<const Res> a, std::uint64_t e) const;

    MatF left_mul_matrix(std::span<const Res> a) const;
    MatF right_mul_matrix(std::span<const Res> a) const;

    /// Minimal polynomial of the element relative to the algebra unit.
    exactla::PolyF element_minpoly(std::span<const Res> a) const;

    /// Horner evaluation of a polynomial at an element (constant term maps
    /// to the algebra unit).
    std::vector<Res> eval_poly(const exactla::PolyF& f, std::span<const Res> a) const;

    bool is_commutative() const;
    bool is_zero_vec(std::span<const Res> a) const;

    exactla::BilinearProduct product_fn() const;

    FpAlgebra with_representation(std::vector<MatF> rep) const {
        FpAlgebra copy = *this;
        copy.rep_ = std::move(rep);
        return copy;
    }

private:
    PrimeModulus mod_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Res> table_;   // (i * dim + j) * dim + k
    std::vector<Res> unit_;
    std::vector<MatF> rep_;

    void verify() const;
};

/// The 10-dimensional design algebra from structure constants, reduced
/// mod p; the unit is sigma_1 + sigma_4.
FpAlgebra fp_algebra_from_sc(const StructureConstants& sc, PrimeModulus p);

/// Convenience: extracts structure constants from the configuration
/// (throwing on NotCoherent) and attaches the relation matrices mod p as a
/// faithful representation.
FpAlgebra fp_algebra_from_cc(const CoherentConfig& cc, PrimeModulus p);

/// The rank-3 adjacency algebra of a strongly regular graph: basis
/// {I, A, J-I-A} with the table read off (and verified against) the exact
/// integer products.
FpAlgebra rank3_algebra(const incidence::Graph& g, PrimeModulus p);

/// The subalgebra on a multiplicatively closed subspace, with the given
/// unit; coordinates are taken in the echelon basis of the subspace.
FpAlgebra subalgebra(const FpAlgebra& a, const Subspace& s, std::vector<Res> unit);

enum class Fiber { point, block };

/// Corner algebra e A e of the design algebra for e = sigma_1 (point fiber,
/// basis sigma_1..sigma_3) or e = sigma_4 (block fiber, sigma_4..sigma_6).
FpAlgebra corner_algebra(const FpAlgebra& design_algebra, Fiber fiber);

/// Embeds corner coordinates back into design-algebra coordinates.
std::vector<Res> corner_embed(std::span<const Res> v, Fiber fiber);

/// The element sigma_2 * sigma_7 of the design algebra (mod p).
std::vector<Res> special_element_u(const FpAlgebra& design_algebra);

/// Quotient by a two-sided ideal, with the projection and a linear section
/// between the coordinate spaces.
struct Quotient {
    FpAlgebra algebra;
    MatF projection;   // (d - k) x d
    MatF section;      // d x (d - k)

    std::vector<Res> project(std::span<const Res> v) const { return projection.apply(v); }
    std::vector<Res> lift(std::span<const Res> v) const { return section.apply(v); }
};

Quotient quotient_by_ideal(const FpAlgebra& a, const Subspace& ideal);

} // namespace ccalgebra
