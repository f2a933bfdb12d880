#include "ccalgebra/quiver.hpp"

#include "semisimple.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccalgebra {

namespace {

// iterated p-th powering inside the commutative subalgebra generated by an
// almost-idempotent; converges because x^2 - x lies in the nilpotent kernel
std::vector<Res> lift_idempotent(const FpAlgebra& a, std::vector<Res> x) {
    const auto p = static_cast<std::uint64_t>(a.modulus().value());
    for (std::size_t iter = 0; iter <= a.dim(); ++iter) {
        if (a.mul(x, x) == x) return x;
        x = a.pow(x, p);
    }
    throw LiftingFailure("quiver: idempotent lifting did not stabilize");
}

std::size_t dim_of_span_plus(const FpAlgebra& a,
                             const std::vector<std::vector<Res>>& vectors,
                             const Subspace& base) {
    Subspace s = Subspace::span(a.dim(), a.modulus(), vectors);
    return s.sum(base).dim() - base.dim();
}

} // namespace

QuiverReport quiver(const FpAlgebra& a) {
    const std::size_t d = a.dim();
    const PrimeModulus p = a.modulus();
    const RadicalReport rad = radical(a);
    const Subspace& r1 = rad.basis;

    // radical power subspaces, Rad^0 = A down to the first zero power
    std::vector<Subspace> powers{Subspace::full(d, p)};
    Subspace pw = r1;
    while (pw.dim() > 0) {
        powers.push_back(pw);
        pw = subspace_product(pw, r1, a.product_fn());
    }
    powers.push_back(pw);   // the zero subspace

    // primitive idempotents of the semisimple quotient, then lift
    detail::PrimitiveDecomposition prims;
    std::vector<std::vector<Res>> lifted;
    if (r1.dim() == 0) {
        prims = detail::primitive_idempotents(a);
        lifted = prims.idempotents;
    } else {
        const Quotient q = quotient_by_ideal(a, r1);
        prims = detail::primitive_idempotents(q.algebra);
        std::vector<Res> running_sum = a.zero();
        for (const auto& w : prims.idempotents) {
            const auto one_minus = a.sub(a.unit(), running_sum);
            auto x = a.mul(a.mul(one_minus, q.lift(w)), one_minus);
            x = lift_idempotent(a, x);
            running_sum = a.add(running_sum, x);
            lifted.push_back(std::move(x));
        }
    }

    // sanity: orthogonal idempotents summing to the unit
    std::vector<Res> total = a.zero();
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        if (a.mul(lifted[i], lifted[i]) != lifted[i])
            throw std::logic_error("quiver: lifted element is not idempotent");
        for (std::size_t j = 0; j < lifted.size(); ++j)
            if (i != j && !a.is_zero_vec(a.mul(lifted[i], lifted[j])))
                throw std::logic_error("quiver: lifted idempotents not orthogonal");
        total = a.add(total, lifted[i]);
    }
    if (total != a.unit())
        throw std::logic_error("quiver: lifted idempotents do not sum to 1");

    // canonical vertex order: by (n, f), then by the coordinates of the
    // first lifted idempotent of the component
    const std::size_t nverts = prims.components.size();
    std::vector<std::size_t> first_idem(nverts);
    for (std::size_t i = lifted.size(); i-- > 0;) first_idem[prims.component_of[i]] = i;
    std::vector<std::size_t> order(nverts);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const auto& cx = prims.components[x];
        const auto& cy = prims.components[y];
        if (cx.matrix_size != cy.matrix_size) return cx.matrix_size < cy.matrix_size;
        if (cx.center_deg != cy.center_deg) return cx.center_deg < cy.center_deg;
        return lifted[first_idem[x]] < lifted[first_idem[y]];
    });
    std::vector<std::size_t> vertex_of_component(nverts);
    for (std::size_t v = 0; v < nverts; ++v) vertex_of_component[order[v]] = v;

    QuiverReport report;
    report.vertices = nverts;
    report.vertex_types.resize(nverts);
    for (std::size_t c = 0; c < nverts; ++c)
        report.vertex_types[vertex_of_component[c]] = {prims.components[c].matrix_size,
                                                       prims.components[c].center_deg};
    report.idempotents = lifted;
    for (std::size_t i = 0; i < lifted.size(); ++i)
        report.idempotent_vertex.push_back(vertex_of_component[prims.component_of[i]]);

    std::vector<std::vector<Res>> rep_idem(nverts);
    for (std::size_t c = 0; c < nverts; ++c)
        rep_idem[vertex_of_component[c]] = lifted[first_idem[c]];

    // arrows, Cartan matrix, Loewy layers of the projectives
    report.arrows.assign(nverts, std::vector<std::size_t>(nverts, 0));
    report.cartan.assign(nverts, std::vector<std::size_t>(nverts, 0));
    for (std::size_t i = 0; i < nverts; ++i)
        for (std::size_t j = 0; j < nverts; ++j) {
            std::vector<std::vector<Res>> rad_span, alg_span;
            for (const auto& rb : r1.basis())
                rad_span.push_back(a.mul(a.mul(rep_idem[i], rb), rep_idem[j]));
            for (std::size_t k = 0; k < d; ++k)
                alg_span.push_back(
                    a.mul(a.mul(rep_idem[i], a.basis_element(k)), rep_idem[j]));
            const Subspace& rad2 = powers.size() > 2 ? powers[2] : powers.back();
            report.arrows[i][j] = rad_span.empty()
                                      ? 0
                                      : dim_of_span_plus(a, rad_span, rad2);
            report.cartan[i][j] =
                Subspace::span(d, p, std::move(alg_span)).dim();
        }

    report.loewy_layers.assign(nverts, {});
    report.projective_dims.assign(nverts, 0);
    for (std::size_t i = 0; i < nverts; ++i) {
        for (std::size_t k = 0; k + 1 < powers.size(); ++k) {
            std::vector<std::vector<Res>> span_k;
            for (const auto& b : powers[k].basis())
                span_k.push_back(a.mul(rep_idem[i], b));
            report.loewy_layers[i].push_back(
                span_k.empty() ? 0 : dim_of_span_plus(a, span_k, powers[k + 1]));
        }
        std::vector<std::vector<Res>> proj;
        for (std::size_t k = 0; k < d; ++k)
            proj.push_back(a.mul(rep_idem[i], a.basis_element(k)));
        report.projective_dims[i] = Subspace::span(d, p, std::move(proj)).dim();
    }

    // consistency: layers stack to the projective; weighted Cartan sums
    // recover projective and algebra dimensions
    std::size_t weighted_total = 0;
    for (std::size_t i = 0; i < nverts; ++i) {
        const std::size_t layer_sum =
            std::accumulate(report.loewy_layers[i].begin(), report.loewy_layers[i].end(),
                            std::size_t{0});
        if (layer_sum != report.projective_dims[i])
            throw std::logic_error("quiver: Loewy layers do not stack to the projective");
        std::size_t row = 0;
        for (std::size_t j = 0; j < nverts; ++j)
            row += report.vertex_types[j].n * report.cartan[i][j];
        if (row != report.projective_dims[i])
            throw std::logic_error("quiver: Cartan row inconsistent with projective");
        weighted_total += report.vertex_types[i].n * report.projective_dims[i];
    }
    if (weighted_total != d)
        throw std::logic_error("quiver: projectives do not fill the algebra");

    return report;
}

} // namespace ccalgebra
