#include "exactla/matf.hpp"

#include <stdexcept>

namespace exactla {

RrefResult rref(const MatF& m) {
    MatF r = m;
    const PrimeModulus mod = m.modulus();
    const std::size_t nr = r.rows(), nc = r.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t pr = row;
        while (pr < nr && r(pr, col) == 0) ++pr;
        if (pr == nr) continue;
        if (pr != row)
            for (std::size_t j = 0; j < nc; ++j) std::swap(r(pr, j), r(row, j));
        const Res pinv = mod.inv(r(row, col));
        for (std::size_t j = col; j < nc; ++j) r(row, j) = mod.mul(pinv, r(row, j));
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || r(i, col) == 0) continue;
            const Res f = r(i, col);
            for (std::size_t j = col; j < nc; ++j)
                r(i, j) = mod.sub(r(i, j), mod.mul(f, r(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::vector<std::vector<Res>> echelon_rows(std::vector<std::vector<Res>> rows,
                                           PrimeModulus m) {
    // incremental Gauss-Jordan; result is the canonical reduced basis
    std::vector<std::vector<Res>> basis;    // kept sorted by pivot column
    std::vector<std::size_t> pivots;
    for (auto& v : rows) {
        // reduce v by current basis
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Res f = v[pivots[b]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = m.sub(v[j], m.mul(f, basis[b][j]));
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) continue;
        const Res pinv = m.inv(v[p]);
        for (std::size_t j = p; j < v.size(); ++j) v[j] = m.mul(pinv, v[j]);
        // back-reduce existing rows against the new one
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Res f = basis[b][p];
            if (f == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                basis[b][j] = m.sub(basis[b][j], m.mul(f, v[j]));
        }
        std::size_t at = 0;
        while (at < pivots.size() && pivots[at] < p) ++at;
        basis.insert(basis.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, p);
    }
    return basis;
}

std::optional<std::vector<Res>> solve(const MatF& a, std::span<const Res> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const PrimeModulus mod = a.modulus();
    MatF aug(a.rows(), a.cols() + 1, mod);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    std::vector<Res> x(a.cols(), 0);
    for (std::size_t i = 0; i < r.rank; ++i) {
        const std::size_t p = r.pivot_columns[i];
        if (p == a.cols()) return std::nullopt;    // pivot in the rhs column
        x[p] = r.reduced(i, a.cols());
    }
    return x;
}

} // namespace exactla
