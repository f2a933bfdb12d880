#include "exactla/subspace.hpp"

#include <stdexcept>

namespace exactla {

Subspace Subspace::span(std::size_t ambient, PrimeModulus m,
                        std::vector<std::vector<Res>> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient)
            throw std::invalid_argument("Subspace::span: vector length mismatch");
    Subspace s(ambient, m);
    s.basis_ = echelon_rows(std::move(vectors), m);
    for (const auto& row : s.basis_) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        s.pivots_.push_back(p);
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient, PrimeModulus m) {
    std::vector<std::vector<Res>> rows(ambient, std::vector<Res>(ambient, 0));
    for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
    return span(ambient, m, std::move(rows));
}

std::vector<Res> Subspace::reduce(std::span<const Res> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: length mismatch");
    std::vector<Res> w(v.begin(), v.end());
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const Res f = w[pivots_[b]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            w[j] = mod_.sub(w[j], mod_.mul(f, basis_[b][j]));
    }
    return w;
}

bool Subspace::contains(std::span<const Res> v) const {
    for (Res x : reduce(v))
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.basis_)
        if (!contains(row)) return false;
    return true;
}

std::vector<Res> Subspace::coordinates(std::span<const Res> v) const {
    // echelon basis: coordinate b is just the pivot entry of v
    std::vector<Res> c(basis_.size(), 0);
    for (std::size_t b = 0; b < basis_.size(); ++b) c[b] = v[pivots_[b]];
    if (!contains(v))
        throw std::invalid_argument("Subspace::coordinates: vector not in subspace");
    return c;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<std::vector<Res>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, mod_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_, mod_);
    // kernel of [U^T | -W^T] pairs off equal combinations from both sides
    MatF m(ambient_, dim() + other.dim(), mod_);
    for (std::size_t c = 0; c < dim(); ++c)
        for (std::size_t r = 0; r < ambient_; ++r) m(r, c) = basis_[c][r];
    for (std::size_t c = 0; c < other.dim(); ++c)
        for (std::size_t r = 0; r < ambient_; ++r)
            m(r, dim() + c) = mod_.neg(other.basis_[c][r]);
    const Subspace ker = nullspace(m);
    std::vector<std::vector<Res>> rows;
    for (const auto& ab : ker.basis()) {
        std::vector<Res> v(ambient_, 0);
        for (std::size_t c = 0; c < dim(); ++c)
            for (std::size_t r = 0; r < ambient_; ++r)
                v[r] = mod_.add(v[r], mod_.mul(ab[c], basis_[c][r]));
        rows.push_back(std::move(v));
    }
    return span(ambient_, mod_, std::move(rows));
}

Subspace subspace_product(const Subspace& s, const Subspace& t, const BilinearProduct& mul) {
    if (s.ambient() != t.ambient())
        throw std::invalid_argument("subspace_product: ambient mismatch");
    std::vector<std::vector<Res>> rows;
    rows.reserve(s.dim() * t.dim());
    for (const auto& a : s.basis())
        for (const auto& b : t.basis())
            rows.push_back(mul(a, b));
    return Subspace::span(s.ambient(), s.modulus(), std::move(rows));
}

Subspace nullspace(const MatF& m) {
    const PrimeModulus mod = m.modulus();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_columns) is_pivot[p] = true;

    std::vector<std::vector<Res>> rows;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Res> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = mod.neg(r.reduced(i, free));
        rows.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), mod, std::move(rows));
}

} // namespace exactla
