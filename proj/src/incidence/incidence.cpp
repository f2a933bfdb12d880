#include "incidence/incidence.hpp"

#include <optional>
#include <sstream>

namespace incidence {

using exactla::MatZ;

namespace {

std::int64_t point_meet(const IncidenceStructure& d, std::size_t x1, std::size_t x2) {
    std::int64_t c = 0;
    for (std::size_t y = 0; y < d.n_blocks; ++y)
        if (d.flags(x1, y) && d.flags(x2, y)) ++c;
    return c;
}

std::int64_t block_meet(const IncidenceStructure& d, std::size_t y1, std::size_t y2) {
    std::int64_t c = 0;
    for (std::size_t x = 0; x < d.n_points; ++x)
        if (d.flags(x, y1) && d.flags(x, y2)) ++c;
    return c;
}

std::string pair_witness(const char* kind, std::size_t a, std::size_t b) {
    std::ostringstream os;
    os << kind << " (" << a << ", " << b << ")";
    return os.str();
}

// conditions (1)-(5) on d; the caller handles the dual condition (6)
SrdCheckResult check_one_side(const IncidenceStructure& d) {
    // (1) regularity
    std::int64_t s2 = 0;
    for (std::size_t y = 0; y < d.n_blocks; ++y) s2 += d.flags(0, y);
    for (std::size_t x = 1; x < d.n_points; ++x) {
        std::int64_t deg = 0;
        for (std::size_t y = 0; y < d.n_blocks; ++y) deg += d.flags(x, y);
        if (deg != s2)
            return Violation{1, pair_witness("points of unequal degree", 0, x)};
    }
    std::int64_t s1 = 0;
    for (std::size_t x = 0; x < d.n_points; ++x) s1 += d.flags(x, 0);
    for (std::size_t y = 1; y < d.n_blocks; ++y) {
        std::int64_t sz = 0;
        for (std::size_t x = 0; x < d.n_points; ++x) sz += d.flags(x, y);
        if (sz != s1)
            return Violation{1, pair_witness("blocks of unequal size", 0, y)};
    }
    if (s1 < 1 || s2 < 1)
        return Violation{1, "replication numbers must be at least 1"};

    // (2) exactly two block intersection numbers, both realized
    std::optional<std::int64_t> bv1, bv2;
    for (std::size_t y1 = 0; y1 < d.n_blocks; ++y1)
        for (std::size_t y2 = y1 + 1; y2 < d.n_blocks; ++y2) {
            const std::int64_t m = block_meet(d, y1, y2);
            if (!bv1 || m == *bv1) { bv1 = m; continue; }
            if (!bv2 || m == *bv2) { bv2 = m; continue; }
            return Violation{2, pair_witness("third block intersection value at blocks", y1, y2)};
        }
    if (!bv1 || !bv2)
        return Violation{2, "fewer than two block intersection values occur"};
    const std::int64_t a1 = std::max(*bv1, *bv2), b1 = std::min(*bv1, *bv2);

    // (3) exactly two point intersection numbers, both realized
    std::optional<std::int64_t> pv1, pv2;
    for (std::size_t x1 = 0; x1 < d.n_points; ++x1)
        for (std::size_t x2 = x1 + 1; x2 < d.n_points; ++x2) {
            const std::int64_t m = point_meet(d, x1, x2);
            if (!pv1 || m == *pv1) { pv1 = m; continue; }
            if (!pv2 || m == *pv2) { pv2 = m; continue; }
            return Violation{3, pair_witness("third point intersection value at points", x1, x2)};
        }
    if (!pv1 || !pv2)
        return Violation{3, "fewer than two point intersection values occur"};
    const std::int64_t a2 = std::max(*pv1, *pv2), b2 = std::min(*pv1, *pv2);

    // (4) local regularity on the point side: for each flag/antiflag the
    // number of points of Y collinear with x (realizing a2) is constant
    std::optional<std::int64_t> N1, P1;
    for (std::size_t x = 0; x < d.n_points; ++x)
        for (std::size_t y = 0; y < d.n_blocks; ++y) {
            std::int64_t c = 0;
            for (std::size_t xp = 0; xp < d.n_points; ++xp)
                if (xp != x && d.flags(xp, y) && point_meet(d, x, xp) == a2) ++c;
            auto& slot = d.flags(x, y) ? N1 : P1;
            if (!slot) slot = c;
            else if (*slot != c)
                return Violation{4, pair_witness("point/block", x, y)};
        }

    // (5) local regularity on the block side
    std::optional<std::int64_t> N2, P2;
    for (std::size_t x = 0; x < d.n_points; ++x)
        for (std::size_t y = 0; y < d.n_blocks; ++y) {
            std::int64_t c = 0;
            for (std::size_t yp = 0; yp < d.n_blocks; ++yp)
                if (yp != y && d.flags(x, yp) && block_meet(d, y, yp) == a1) ++c;
            auto& slot = d.flags(x, y) ? N2 : P2;
            if (!slot) slot = c;
            else if (*slot != c)
                return Violation{5, pair_witness("point/block", x, y)};
        }

    return SrdParams{s1, s2, a1, b1, a2, b2,
                     N1.value_or(0), P1.value_or(0),
                     N2.value_or(0), P2.value_or(0)};
}

} // namespace

SrdCheckResult check_srd(const IncidenceStructure& d) {
    if (d.n_points < 1 || d.n_blocks < 1)
        return Violation{1, "empty point or block set"};

    SrdCheckResult primal = check_one_side(d);
    if (std::holds_alternative<Violation>(primal)) return primal;
    const SrdParams p = std::get<SrdParams>(primal);

    // (6) the dual structure satisfies (1)-(5) with the parameters swapped
    SrdCheckResult dual = check_one_side(d.dual());
    if (auto* v = std::get_if<Violation>(&dual)) {
        std::ostringstream os;
        os << "dual fails condition " << v->condition << ": " << v->witness;
        return Violation{6, os.str()};
    }
    const SrdParams q = std::get<SrdParams>(dual);
    const bool swapped = q.s1 == p.s2 && q.s2 == p.s1 &&
                         q.a1 == p.a2 && q.b1 == p.b2 &&
                         q.a2 == p.a1 && q.b2 == p.b1 &&
                         q.N1 == p.N2 && q.P1 == p.P2 &&
                         q.N2 == p.N1 && q.P2 == p.P1;
    if (!swapped)
        return Violation{6, "dual parameters do not match the prescribed swap"};
    return p;
}

Graph point_graph(const IncidenceStructure& d, const SrdParams& params) {
    Graph g{MatZ(d.n_points, d.n_points)};
    for (std::size_t x1 = 0; x1 < d.n_points; ++x1)
        for (std::size_t x2 = x1 + 1; x2 < d.n_points; ++x2)
            if (point_meet(d, x1, x2) == params.a2)
                g.adjacency(x1, x2) = g.adjacency(x2, x1) = 1;
    return g;
}

Graph block_graph(const IncidenceStructure& d, const SrdParams& params) {
    Graph g{MatZ(d.n_blocks, d.n_blocks)};
    for (std::size_t y1 = 0; y1 < d.n_blocks; ++y1)
        for (std::size_t y2 = y1 + 1; y2 < d.n_blocks; ++y2)
            if (block_meet(d, y1, y2) == params.a1)
                g.adjacency(y1, y2) = g.adjacency(y2, y1) = 1;
    return g;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph c{MatZ::ones(n, n) - MatZ::identity(n) - g.adjacency};
    return c;
}

SrgCheckResult srg_params_of(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 2) return NotStronglyRegular{"graph too small"};
    const MatZ& a = g.adjacency;

    std::int64_t k = 0;
    for (std::size_t j = 0; j < n; ++j) k += a(0, j);
    for (std::size_t i = 1; i < n; ++i) {
        std::int64_t deg = 0;
        for (std::size_t j = 0; j < n; ++j) deg += a(i, j);
        if (deg != k) return NotStronglyRegular{"graph is not regular"};
    }
    if (k == 0) return NotStronglyRegular{"edgeless graph: lambda is vacuous"};
    if (k == static_cast<std::int64_t>(n) - 1)
        return NotStronglyRegular{"complete graph: mu is vacuous"};

    const MatZ a2 = a * a;   // common-neighbour counts
    std::optional<std::int64_t> lambda, mu;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto& slot = a(i, j) ? lambda : mu;
            if (!slot) slot = a2(i, j);
            else if (*slot != a2(i, j))
                return NotStronglyRegular{a(i, j) ? "lambda not constant" : "mu not constant"};
        }
    return SrgParams{static_cast<std::int64_t>(n), k, lambda.value_or(0), mu.value_or(0)};
}

MatrixIdentityReport verify_matrix_identities(const IncidenceStructure& d,
                                              const SrdParams& p) {
    const MatZ& n = d.flags;
    const MatZ nt = n.transposed();
    const std::size_t n1 = d.n_points, n2 = d.n_blocks;
    const MatZ a1m = point_graph(d, p).adjacency;
    const MatZ a2m = block_graph(d, p).adjacency;
    const MatZ ip = MatZ::identity(n1), ib = MatZ::identity(n2);
    const MatZ jp = MatZ::ones(n1, n1), jb = MatZ::ones(n2, n2);
    const MatZ jpb = MatZ::ones(n1, n2);

    MatrixIdentityReport r;
    // (i) N 1 = s2 1 and N^T 1 = s1 1
    r.holds[0] = (n * MatZ::ones(n2, 1) == MatZ::ones(n1, 1).scaled(p.s2)) &&
                 (nt * MatZ::ones(n1, 1) == MatZ::ones(n2, 1).scaled(p.s1));
    // (ii) N N^T = s2 I + a2 A1 + b2 (J - I - A1)
    r.holds[1] = n * nt == ip.scaled(p.s2) + a1m.scaled(p.a2) + (jp - ip - a1m).scaled(p.b2);
    // (iii) N^T N = s1 I + a1 A2 + b1 (J - I - A2)
    r.holds[2] = nt * n == ib.scaled(p.s1) + a2m.scaled(p.a1) + (jb - ib - a2m).scaled(p.b1);
    // (iv) A1 N = (N1 - P1) N + P1 J
    r.holds[3] = a1m * n == n.scaled(p.N1 - p.P1) + jpb.scaled(p.P1);
    // (v) N A2 = (N2 - P2) N + P2 J
    r.holds[4] = n * a2m == n.scaled(p.N2 - p.P2) + jpb.scaled(p.P2);
    return r;
}

} // namespace incidence
