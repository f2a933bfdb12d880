#include "ccalgebra/coherent.hpp"

#include <optional>
#include <stdexcept>

namespace ccalgebra {

using exactla::MatZ;

void CoherentConfig::verify() const {
    const std::size_t n = order();
    MatZ sum(n, n);
    for (const auto& s : sigma) {
        if (s.rows() != n || s.cols() != n)
            throw std::logic_error("CoherentConfig: wrong relation matrix shape");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (s(i, j) != 0 && s(i, j) != 1)
                    throw std::logic_error("CoherentConfig: relation matrix not 0-1");
        sum = sum + s;
    }
    if (sum != MatZ::ones(n, n))
        throw std::logic_error("CoherentConfig: relations do not partition X x X");
    if (sigma[0] + sigma[3] != MatZ::identity(n))
        throw std::logic_error("CoherentConfig: diagonal relations do not sum to I");
    for (int i = 0; i < 6; ++i)
        if (sigma[static_cast<std::size_t>(i)].transposed() != sigma[static_cast<std::size_t>(i)])
            throw std::logic_error("CoherentConfig: homogeneous relation not symmetric");
    if (sigma[6].transposed() != sigma[8] || sigma[7].transposed() != sigma[9])
        throw std::logic_error("CoherentConfig: mixed relations not transpose-paired");
}

namespace {

CoherentConfig assemble(const incidence::IncidenceStructure& d,
                        const MatZ& a1, const MatZ& a2) {
    const std::size_t n1 = d.n_points, n2 = d.n_blocks, n = n1 + n2;
    CoherentConfig cc;
    cc.n1 = n1;
    cc.n2 = n2;
    for (auto& s : cc.sigma) s = MatZ(n, n);

    for (std::size_t x = 0; x < n1; ++x) cc.sigma[0](x, x) = 1;
    for (std::size_t y = 0; y < n2; ++y) cc.sigma[3](n1 + y, n1 + y) = 1;
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t y = 0; y < n1; ++y) {
            if (x == y) continue;
            cc.sigma[a1(x, y) ? 1 : 2](x, y) = 1;
        }
    for (std::size_t x = 0; x < n2; ++x)
        for (std::size_t y = 0; y < n2; ++y) {
            if (x == y) continue;
            cc.sigma[a2(x, y) ? 4 : 5](n1 + x, n1 + y) = 1;
        }
    for (std::size_t x = 0; x < n1; ++x)
        for (std::size_t y = 0; y < n2; ++y) {
            const bool flag = d.flags(x, y) != 0;
            cc.sigma[flag ? 6 : 7](x, n1 + y) = 1;
            cc.sigma[flag ? 8 : 9](n1 + y, x) = 1;
        }
    cc.verify();
    return cc;
}

} // namespace

CoherentConfig build_cc(const incidence::IncidenceStructure& d,
                        const incidence::SrdParams& params) {
    return assemble(d, incidence::point_graph(d, params).adjacency,
                    incidence::block_graph(d, params).adjacency);
}

CoherentConfig build_cc_raw(const incidence::IncidenceStructure& d) {
    // adjacency = pairs realizing the maximal observed intersection number
    auto max_meet = [](const MatZ& gram) {
        std::int64_t best = 0;
        for (std::size_t i = 0; i < gram.rows(); ++i)
            for (std::size_t j = i + 1; j < gram.cols(); ++j)
                best = std::max(best, gram(i, j));
        return best;
    };
    const MatZ point_gram = d.flags * d.flags.transposed();
    const MatZ block_gram = d.flags.transposed() * d.flags;
    const std::int64_t a2 = max_meet(point_gram);
    const std::int64_t a1 = max_meet(block_gram);

    MatZ a1m(d.n_points, d.n_points), a2m(d.n_blocks, d.n_blocks);
    for (std::size_t i = 0; i < d.n_points; ++i)
        for (std::size_t j = 0; j < d.n_points; ++j)
            if (i != j && point_gram(i, j) == a2) a1m(i, j) = 1;
    for (std::size_t i = 0; i < d.n_blocks; ++i)
        for (std::size_t j = 0; j < d.n_blocks; ++j)
            if (i != j && block_gram(i, j) == a1) a2m(i, j) = 1;
    return assemble(d, a1m, a2m);
}

StructureConstantsResult structure_constants(const CoherentConfig& cc) {
    cc.verify();
    const std::size_t n = cc.order();

    // one representative entry per relation class
    std::array<std::optional<std::pair<std::size_t, std::size_t>>, 10> reps;
    for (std::size_t k = 0; k < 10; ++k)
        for (std::size_t r = 0; r < n && !reps[k]; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (cc.sigma[k](r, c)) {
                    reps[k] = {r, c};
                    break;
                }

    StructureConstants sc;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            const MatZ prod = cc.sigma[i] * cc.sigma[j];
            for (std::size_t k = 0; k < 10; ++k)
                sc.p[i][j][k] = reps[k] ? prod(reps[k]->first, reps[k]->second) : 0;
            MatZ recon(n, n);
            for (std::size_t k = 0; k < 10; ++k)
                if (sc.p[i][j][k] != 0)
                    recon = recon + cc.sigma[k].scaled(sc.p[i][j][k]);
            if (recon != prod) {
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (recon(r, c) != prod(r, c))
                            return NotCoherent{static_cast<int>(i + 1),
                                               static_cast<int>(j + 1), r, c};
            }
        }
    return sc;
}

} // namespace ccalgebra
