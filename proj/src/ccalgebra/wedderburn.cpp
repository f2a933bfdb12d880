#include "ccalgebra/wedderburn.hpp"

#include "ccalgebra/radical.hpp"
#include "exactla/matq.hpp"
#include "exactla/poly.hpp"
#include "semisimple.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccalgebra {

namespace detail {

Subspace center_of(const FpAlgebra& a) {
    const std::size_t d = a.dim();
    const PrimeModulus p = a.modulus();
    MatF stacked(d * d, d, p);
    for (std::size_t j = 0; j < d; ++j) {
        const auto e = a.basis_element(j);
        const MatF diff = a.left_mul_matrix(e) - a.right_mul_matrix(e);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) stacked(j * d + r, c) = diff(r, c);
    }
    return exactla::nullspace(stacked);
}

namespace {

// eigen-projection of the idempotent e along u (u in the Frobenius-fixed
// subalgebra, so its spectrum lies in the prime field): the nonzero
// e - (u - c e)^(p-1) are orthogonal idempotents refining e
std::vector<std::vector<Res>> split_by(const FpAlgebra& q, const std::vector<Res>& e,
                                       const std::vector<Res>& u) {
    const PrimeModulus p = q.modulus();
    std::vector<std::vector<Res>> parts;
    for (std::int64_t c = 0; c < p.value(); ++c) {
        const auto shifted = q.sub(u, q.smul(p.reduce(c), e));
        const auto proj = q.sub(e, q.pow(shifted, static_cast<std::uint64_t>(p.value() - 1)));
        if (!q.is_zero_vec(proj)) parts.push_back(proj);
    }
    return parts;
}

} // namespace

std::vector<Component> split_semisimple(const FpAlgebra& q) {
    const std::size_t d = q.dim();
    const PrimeModulus p = q.modulus();
    const Subspace center = center_of(q);
    const std::size_t m = center.dim();

    // Frobenius-fixed subalgebra of the center: x with x^p = x, computed as
    // the kernel of (Phi - I) in center coordinates. Its dimension is the
    // number of simple components.
    MatF phi(m, m, p);
    for (std::size_t i = 0; i < m; ++i) {
        const auto zp = q.pow(center.basis()[i], static_cast<std::uint64_t>(p.value()));
        const auto coords = center.coordinates(zp);
        for (std::size_t r = 0; r < m; ++r) phi(r, i) = coords[r];
    }
    const Subspace fixed_coords = exactla::nullspace(phi - MatF::identity(m, p));
    std::vector<std::vector<Res>> fixed;
    for (const auto& x : fixed_coords.basis()) {
        std::vector<Res> v(d, 0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < d; ++k)
                v[k] = p.add(v[k], p.mul(x[i], center.basis()[i][k]));
        fixed.push_back(std::move(v));
    }
    const std::size_t expected_components = fixed.size();

    std::vector<std::vector<Res>> idems{q.unit()};
    for (const auto& t : fixed) {
        std::vector<std::vector<Res>> refined;
        for (const auto& e : idems) {
            const auto u = q.mul(e, t);
            for (auto& part : split_by(q, e, u)) refined.push_back(std::move(part));
        }
        idems = std::move(refined);
    }
    if (idems.size() != expected_components)
        throw std::logic_error("split_semisimple: central idempotent count mismatch");

    std::vector<Component> comps;
    for (const auto& e : idems) {
        if (q.mul(e, e) != e)
            throw std::logic_error("split_semisimple: non-idempotent projection");
        std::vector<std::vector<Res>> span_alg, span_center;
        for (std::size_t j = 0; j < d; ++j)
            span_alg.push_back(q.mul(e, q.basis_element(j)));
        for (std::size_t i = 0; i < m; ++i)
            span_center.push_back(q.mul(e, center.basis()[i]));
        Component comp;
        comp.idempotent = e;
        comp.dim = Subspace::span(d, p, std::move(span_alg)).dim();
        comp.center_deg = Subspace::span(d, p, std::move(span_center)).dim();
        if (comp.center_deg == 0 || comp.dim % comp.center_deg != 0)
            throw NonSquareDimension("split_semisimple: center degree does not divide dimension");
        const std::size_t nn = comp.dim / comp.center_deg;
        std::size_t n = 0;
        while ((n + 1) * (n + 1) <= nn) ++n;
        if (n * n != nn)
            throw NonSquareDimension("split_semisimple: component dimension not a square");
        comp.matrix_size = n;
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// primitive idempotents inside one simple component: find a zero divisor
// from a reducible minimal polynomial, take a minimal left ideal, solve for
// its generating idempotent, recurse on the complement corner
std::vector<std::vector<Res>> split_component(const FpAlgebra& q,
                                              const std::vector<Res>& unit_e) {
    const std::size_t d = q.dim();
    const PrimeModulus p = q.modulus();

    std::vector<std::vector<Res>> gens;
    for (std::size_t j = 0; j < d; ++j)
        gens.push_back(q.mul(q.mul(unit_e, q.basis_element(j)), unit_e));
    const Subspace comp = Subspace::span(d, p, gens);

    // commutative corner = field component = n = 1
    bool commutative = true;
    for (std::size_t i = 0; i < comp.dim() && commutative; ++i)
        for (std::size_t j = i + 1; j < comp.dim() && commutative; ++j)
            if (q.mul(comp.basis()[i], comp.basis()[j]) !=
                q.mul(comp.basis()[j], comp.basis()[i]))
                commutative = false;
    if (commutative) return {unit_e};

    // candidate elements for a reducible minimal polynomial
    std::vector<std::vector<Res>> candidates;
    for (const auto& b : comp.basis()) candidates.push_back(b);
    for (std::size_t i = 0; i < comp.dim(); ++i)
        for (std::size_t j = 0; j < comp.dim(); ++j) {
            candidates.push_back(q.mul(comp.basis()[i], comp.basis()[j]));
            if (j > i) candidates.push_back(q.add(comp.basis()[i], comp.basis()[j]));
        }

    std::vector<Res> divisor;
    for (const auto& u : candidates) {
        if (q.is_zero_vec(u)) continue;
        // minimal polynomial of u relative to the corner unit
        std::vector<std::vector<Res>> krylov{unit_e};
        std::vector<Res> power = unit_e;
        exactla::PolyF mp = exactla::PolyF::zero(p);
        for (std::size_t deg = 1; deg <= comp.dim() + 1; ++deg) {
            power = q.mul(power, u);
            krylov.push_back(power);
            const Subspace lower =
                Subspace::span(d, p, {krylov.begin(), krylov.end() - 1});
            if (lower.contains(power)) {
                // dependency gives the monic minimal polynomial
                MatF mat(d, deg, p);
                for (std::size_t c = 0; c + 1 < krylov.size(); ++c)
                    for (std::size_t r = 0; r < d; ++r) mat(r, c) = krylov[c][r];
                const auto sol = exactla::solve(mat, power);
                std::vector<Res> coeffs(deg + 1, 0);
                for (std::size_t c = 0; c < deg; ++c) coeffs[c] = p.neg((*sol)[c]);
                coeffs[deg] = 1;
                mp = exactla::PolyF(p, std::move(coeffs));
                break;
            }
        }
        if (mp.degree() < 2) continue;
        const auto factors = exactla::factor(mp);
        if (factors.size() == 1 && factors[0].second == 1) continue;   // irreducible
        const auto z = q.eval_poly(factors[0].first, u);
        if (!q.is_zero_vec(z)) {
            divisor = z;
            break;
        }
    }
    if (divisor.empty())
        throw std::logic_error("split_component: no zero divisor found");

    // minimal left ideal containing the divisor
    auto left_ideal = [&](const std::vector<Res>& x) {
        std::vector<std::vector<Res>> rows;
        for (const auto& b : comp.basis()) rows.push_back(q.mul(b, x));
        return Subspace::span(d, p, std::move(rows));
    };
    Subspace ideal = left_ideal(divisor);
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (const auto& v : ideal.basis()) {
            const Subspace smaller = left_ideal(v);
            if (smaller.dim() > 0 && smaller.dim() < ideal.dim()) {
                ideal = smaller;
                shrunk = true;
                break;
            }
        }
    }

    // generating idempotent of the minimal left ideal
    std::vector<Res> prim;
    for (const auto& v : ideal.basis()) {
        std::vector<std::vector<Res>> lv;
        for (const auto& l : ideal.basis()) lv.push_back(q.mul(l, v));
        if (Subspace::span(d, p, lv).dim() != ideal.dim()) continue;
        MatF mat(d, ideal.dim(), p);
        for (std::size_t c = 0; c < ideal.dim(); ++c)
            for (std::size_t r = 0; r < d; ++r) mat(r, c) = lv[c][r];
        const auto sol = exactla::solve(mat, v);
        if (!sol) continue;
        std::vector<Res> e(d, 0);
        for (std::size_t c = 0; c < ideal.dim(); ++c) {
            const auto scaled_row = q.smul((*sol)[c], ideal.basis()[c]);
            for (std::size_t r = 0; r < d; ++r) e[r] = p.add(e[r], scaled_row[r]);
        }
        if (!q.is_zero_vec(e) && q.mul(e, e) == e) {
            prim = e;
            break;
        }
    }
    if (prim.empty())
        throw std::logic_error("split_component: no generating idempotent found");

    const auto rest = q.sub(unit_e, prim);
    if (q.is_zero_vec(rest)) return {prim};
    std::vector<std::vector<Res>> out{prim};
    for (auto& e : split_component(q, rest)) out.push_back(std::move(e));
    return out;
}

} // namespace

PrimitiveDecomposition primitive_idempotents(const FpAlgebra& q) {
    PrimitiveDecomposition out;
    out.components = split_semisimple(q);
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        const auto& comp = out.components[c];
        auto prims = comp.matrix_size == 1
                         ? std::vector<std::vector<Res>>{comp.idempotent}
                         : split_component(q, comp.idempotent);
        if (prims.size() != comp.matrix_size)
            throw std::logic_error("primitive_idempotents: count != matrix size");
        for (auto& e : prims) {
            out.idempotents.push_back(std::move(e));
            out.component_of.push_back(c);
        }
    }
    return out;
}

} // namespace detail

WedderburnReport wedderburn(const FpAlgebra& a) {
    const RadicalReport rad = radical(a);
    const std::size_t rad_dim = rad.basis.dim();

    std::vector<detail::Component> comps;
    if (rad_dim == 0) {
        comps = detail::split_semisimple(a);
    } else {
        const Quotient q = quotient_by_ideal(a, rad.basis);
        comps = detail::split_semisimple(q.algebra);
    }

    WedderburnReport report;
    for (const auto& c : comps)
        report.components.push_back({c.matrix_size, c.center_deg});
    std::sort(report.components.begin(), report.components.end());
    for (const auto& c : report.components)
        report.total_dim += c.n * c.n * c.f;
    if (report.total_dim != a.dim() - rad_dim)
        throw std::logic_error("wedderburn: dimension bookkeeping failed");
    return report;
}

namespace {

exactla::MatZ commutator_coordinate_matrix(const StructureConstants& sc) {
    exactla::MatZ m(90, 10);
    std::size_t row = 0;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < 10; ++k)
                m(row, k) = sc.p[i][j][k] - sc.p[j][i][k];
            ++row;
        }
    return m;
}

} // namespace

std::size_t commutator_quotient_dim_rational(const StructureConstants& sc) {
    const exactla::MatQ m = exactla::MatQ::from_int(commutator_coordinate_matrix(sc));
    return 10 - exactla::rank_rational(m);
}

std::size_t commutator_quotient_dim_mod_p(const StructureConstants& sc, PrimeModulus p) {
    const MatF m = MatF::from_int(commutator_coordinate_matrix(sc), p);
    return 10 - exactla::rref(m).rank;
}

std::size_t commutator_quotient_dim(const FpAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<std::vector<Res>> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            rows.push_back(a.sub(a.table_entry(i, j), a.table_entry(j, i)));
        }
    return d - Subspace::span(d, a.modulus(), std::move(rows)).dim();
}

} // namespace ccalgebra
