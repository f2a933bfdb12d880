#include "ccalgebra/radical.hpp"

#include "exactla/poly.hpp"

#include <cmath>
#include <stdexcept>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace ccalgebra {

using exactla::MatF;
using exactla::nullspace;

namespace {

// Descending chain W_0 = A, W_{i+1} = kernel in W_i of the bilinear form
// (a,b) -> c_{p^i}(L_{ab}), run for every p^i <= dim. After the last layer
// the chain equals the radical (Cohen-Ivanyos-Wales).
Subspace ciw_chain(const FpAlgebra& a) {
    const std::size_t d = a.dim();
    const PrimeModulus p = a.modulus();
    Subspace w = Subspace::full(d, p);

    for (std::uint64_t q = 1; q <= d; q *= static_cast<std::uint64_t>(p.value())) {
        const std::size_t m = w.dim();
        if (m == 0) break;
        MatF gram(m, m, p);
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = 0; t < m; ++t) {
                const auto z = a.mul(w.basis()[s], w.basis()[t]);
                const auto cp = exactla::charpoly(a.left_mul_matrix(z));
                gram(t, s) = cp.coeff(d - static_cast<std::size_t>(q));
            }
        const Subspace kernel = nullspace(gram);
        std::vector<std::vector<Res>> next;
        for (const auto& x : kernel.basis()) {
            std::vector<Res> v(d, 0);
            for (std::size_t s = 0; s < m; ++s)
                for (std::size_t i = 0; i < d; ++i)
                    v[i] = p.add(v[i], p.mul(x[s], w.basis()[s][i]));
            next.push_back(std::move(v));
        }
        w = Subspace::span(d, p, std::move(next));
    }
    return w;
}

} // namespace

RadicalReport radical(const FpAlgebra& a) {
    const Subspace rad = ciw_chain(a);

    // certificate 1: two-sided ideal
    for (const auto& r : rad.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const auto e = a.basis_element(i);
            if (!rad.contains(a.mul(e, r)) || !rad.contains(a.mul(r, e)))
                throw std::logic_error("radical: candidate is not a two-sided ideal");
        }

    // certificate 2: nilpotent, collecting the power filtration
    RadicalReport report{rad, {}, 1};
    Subspace power = rad;
    while (power.dim() > 0) {
        report.power_dims.push_back(power.dim());
        report.loewy_length += 1;
        Subspace next = subspace_product(power, rad, a.product_fn());
        if (next.dim() >= power.dim())
            throw std::logic_error("radical: power chain stalled; candidate not nilpotent");
        power = next;
        if (report.power_dims.size() > a.dim())
            throw std::logic_error("radical: power chain too long");
    }

    // certificate 3: the quotient is semisimple
    if (rad.dim() < a.dim()) {
        const Quotient q = quotient_by_ideal(a, rad);
        if (ciw_chain(q.algebra).dim() != 0)
            throw std::logic_error("radical: quotient has nonzero radical");
    } else {
        throw std::logic_error("radical: radical cannot be the whole unital algebra");
    }
    return report;
}

namespace {

struct OracleContext {
    const FpAlgebra& a;
    std::vector<Res> basis_traces;   // trace of L_{e_k}
    std::uint64_t squarings;         // 2^squarings >= dim
};

// x is in the radical iff the left ideal A x is nilpotent. Two necessary
// conditions act as cheap filters: every x e_k has zero regular trace, and
// every x e_k is itself nilpotent. Survivors get the full subspace check.
bool element_in_radical(const OracleContext& ctx, const std::vector<Res>& x) {
    const FpAlgebra& a = ctx.a;
    const PrimeModulus p = a.modulus();
    const std::size_t d = a.dim();

    for (std::size_t k = 0; k < d; ++k) {
        auto y = a.mul(x, a.basis_element(k));
        Res tr = 0;
        for (std::size_t l = 0; l < d; ++l)
            tr = p.add(tr, p.mul(y[l], ctx.basis_traces[l]));
        if (tr != 0) return false;
        for (std::uint64_t s = 0; s < ctx.squarings; ++s) y = a.mul(y, y);
        if (!a.is_zero_vec(y)) return false;
    }

    // left ideal span{e_k x} and its power chain
    std::vector<std::vector<Res>> gens;
    gens.reserve(d);
    for (std::size_t k = 0; k < d; ++k) gens.push_back(a.mul(a.basis_element(k), x));
    const Subspace ideal = Subspace::span(d, p, std::move(gens));
    if (ideal.dim() == 0) return true;

    Subspace power = ideal;
    while (true) {
        const Subspace next = subspace_product(power, ideal, a.product_fn());
        if (next.dim() == 0) return true;
        if (next.dim() >= power.dim()) return false;
        power = next;
    }
}

OracleContext make_context(const FpAlgebra& a) {
    OracleContext ctx{a, {}, 0};
    for (std::size_t k = 0; k < a.dim(); ++k)
        ctx.basis_traces.push_back(a.left_mul_matrix(a.basis_element(k)).trace());
    std::uint64_t reach = 1;
    while (reach < a.dim()) {
        reach *= 2;
        ctx.squarings += 1;
    }
    return ctx;
}

std::uint64_t guarded_element_count(const FpAlgebra& a) {
    long double total = std::pow(static_cast<long double>(a.modulus().value()),
                                 static_cast<long double>(a.dim()));
    if (total > 1e6L)
        throw std::domain_error("radical_bruteforce: p^dim exceeds the 10^6 guard");
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < a.dim(); ++i)
        n *= static_cast<std::uint64_t>(a.modulus().value());
    return n;
}

std::vector<Res> element_from_index(const FpAlgebra& a, std::uint64_t idx) {
    const auto p = static_cast<std::uint64_t>(a.modulus().value());
    std::vector<Res> x(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        x[i] = idx % p;
        idx /= p;
    }
    return x;
}

Subspace finish(const FpAlgebra& a, std::vector<std::vector<Res>> passing,
                std::uint64_t pass_count) {
    const Subspace rad = Subspace::span(a.dim(), a.modulus(), std::move(passing));
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < rad.dim(); ++i)
        expected *= static_cast<std::uint64_t>(a.modulus().value());
    if (pass_count + 1 != expected)
        throw std::logic_error("radical_bruteforce: passing set is not a subspace");
    return rad;
}

} // namespace

Subspace radical_bruteforce_serial(const FpAlgebra& a) {
    const std::uint64_t count = guarded_element_count(a);
    const OracleContext ctx = make_context(a);
    std::vector<std::vector<Res>> passing;
    std::uint64_t pass_count = 0;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        const auto x = element_from_index(a, idx);
        if (element_in_radical(ctx, x)) {
            passing.push_back(x);
            ++pass_count;
        }
    }
    return finish(a, std::move(passing), pass_count);
}

Subspace radical_bruteforce(const FpAlgebra& a) {
    const std::uint64_t count = guarded_element_count(a);
    const OracleContext ctx = make_context(a);
    std::vector<std::vector<Res>> passing;
    std::uint64_t pass_count = 0;

#if defined(_OPENMP)
    const int threads = omp_get_max_threads();
    std::vector<std::vector<std::vector<Res>>> local(static_cast<std::size_t>(threads));
    std::vector<std::uint64_t> local_count(static_cast<std::size_t>(threads), 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (std::int64_t idx = 1; idx < static_cast<std::int64_t>(count); ++idx) {
        const auto tid = static_cast<std::size_t>(omp_get_thread_num());
        const auto x = element_from_index(a, static_cast<std::uint64_t>(idx));
        if (element_in_radical(ctx, x)) {
            local[tid].push_back(x);
            local_count[tid] += 1;
        }
    }
    for (std::size_t t = 0; t < local.size(); ++t) {
        pass_count += local_count[t];
        for (auto& v : local[t]) passing.push_back(std::move(v));
    }
#else
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        const auto x = element_from_index(a, idx);
        if (element_in_radical(ctx, x)) {
            passing.push_back(x);
            ++pass_count;
        }
    }
#endif
    return finish(a, std::move(passing), pass_count);
}

} // namespace ccalgebra
