#pragma once

#include "exactla/fp.hpp"
#include "exactla/matf.hpp"

#include <functional>
#include <span>
#include <vector>

namespace exactla {

/// A subspace of GF(p)^n held by its reduced-echelon basis, which is unique
/// for a given subspace, so equality is plain comparison.
class Subspace {
public:
    Subspace(std::size_t ambient, PrimeModulus m)
        : ambient_(ambient), mod_(m) {}

    static Subspace span(std::size_t ambient, PrimeModulus m,
                         std::vector<std::vector<Res>> vectors);
    static Subspace full(std::size_t ambient, PrimeModulus m);

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient() const { return ambient_; }
    PrimeModulus modulus() const { return mod_; }
    const std::vector<std::vector<Res>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Canonical residual of v after reduction by the basis; zero iff v lies
    /// in the subspace.
    std::vector<Res> reduce(std::span<const Res> v) const;
    bool contains(std::span<const Res> v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v with respect to the echelon basis (v must lie in the
    /// subspace; throws otherwise).
    std::vector<Res> coordinates(std::span<const Res> v) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    PrimeModulus mod_;
    std::vector<std::vector<Res>> basis_;   // reduced echelon rows
    std::vector<std::size_t> pivots_;
};

using BilinearProduct =
    std::function<std::vector<Res>(std::span<const Res>, std::span<const Res>)>;

/// Canonical span of {s*t : s in basis(S), t in basis(T)} under the given
/// bilinear product.
Subspace subspace_product(const Subspace& s, const Subspace& t, const BilinearProduct& mul);

/// Basis of {x : Mx = 0} as a canonical subspace of GF(p)^cols.
Subspace nullspace(const MatF& m);

} // namespace exactla
