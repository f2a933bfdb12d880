#include "ccalgebra/algebra.hpp"

#include <sstream>
#include <stdexcept>
#include <variant>

namespace ccalgebra {

FpAlgebra::FpAlgebra(PrimeModulus mod, std::vector<std::string> labels,
                     std::vector<Res> table, std::vector<Res> unit,
                     std::vector<MatF> representation)
    : mod_(mod),
      dim_(labels.size()),
      labels_(std::move(labels)),
      table_(std::move(table)),
      unit_(std::move(unit)),
      rep_(std::move(representation)) {
    if (dim_ == 0) throw std::invalid_argument("FpAlgebra: dimension must be positive");
    if (table_.size() != dim_ * dim_ * dim_ || unit_.size() != dim_)
        throw std::invalid_argument("FpAlgebra: table/unit size mismatch");
    for (auto& x : table_) x %= static_cast<Res>(mod_.value());
    for (auto& x : unit_) x %= static_cast<Res>(mod_.value());
    verify();
}

void FpAlgebra::verify() const {
    // unit law on basis elements
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto e = basis_element(i);
        if (mul(unit_, e) != e || mul(e, unit_) != e)
            throw std::logic_error("FpAlgebra: unit law fails on basis element " +
                                   labels_[i]);
    }
    // associativity on all basis triples
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const std::span<const Res> eij = table_entry(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                const std::vector<Res> lhs = mul(eij, basis_element(k));
                const std::vector<Res> rhs = mul(basis_element(i), table_entry(j, k));
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "FpAlgebra: associativity fails at (" << labels_[i] << ", "
                       << labels_[j] << ", " << labels_[k] << ")";
                    throw std::logic_error(os.str());
                }
            }
        }
}

std::vector<Res> FpAlgebra::basis_element(std::size_t i) const {
    std::vector<Res> v(dim_, 0);
    v[i] = 1;
    return v;
}

std::vector<Res> FpAlgebra::mul(std::span<const Res> a, std::span<const Res> b) const {
    std::vector<Res> r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            const Res c = mod_.mul(a[i], b[j]);
            const Res* t = table_.data() + (i * dim_ + j) * dim_;
            for (std::size_t k = 0; k < dim_; ++k)
                r[k] = mod_.add(r[k], mod_.mul(c, t[k]));
        }
    }
    return r;
}

std::vector<Res> FpAlgebra::add(std::span<const Res> a, std::span<const Res> b) const {
    std::vector<Res> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = mod_.add(a[i], b[i]);
    return r;
}

std::vector<Res> FpAlgebra::sub(std::span<const Res> a, std::span<const Res> b) const {
    std::vector<Res> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = mod_.sub(a[i], b[i]);
    return r;
}

std::vector<Res> FpAlgebra::smul(Res c, std::span<const Res> a) const {
    std::vector<Res> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i) r[i] = mod_.mul(c, a[i]);
    return r;
}

std::vector<Res> FpAlgebra::pow(std::span<const Res> a, std::uint64_t e) const {
    std::vector<Res> result = unit_;
    std::vector<Res> base(a.begin(), a.end());
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

MatF FpAlgebra::left_mul_matrix(std::span<const Res> a) const {
    MatF m(dim_, dim_, mod_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const auto col = mul(a, basis_element(j));
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

MatF FpAlgebra::right_mul_matrix(std::span<const Res> a) const {
    MatF m(dim_, dim_, mod_);
    for (std::size_t j = 0; j < dim_; ++j) {
        const auto col = mul(basis_element(j), a);
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
}

exactla::PolyF FpAlgebra::element_minpoly(std::span<const Res> a) const {
    // the regular representation is faithful and unital, so the matrix
    // minimal polynomial is the element's
    return exactla::minpoly(left_mul_matrix(a));
}

std::vector<Res> FpAlgebra::eval_poly(const exactla::PolyF& f, std::span<const Res> a) const {
    std::vector<Res> acc = zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = mul(acc, a);
        acc = add(acc, smul(f.coeff(i), unit_));
    }
    return acc;
}

bool FpAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const auto ij = table_entry(i, j);
            const auto ji = table_entry(j, i);
            if (!std::equal(ij.begin(), ij.end(), ji.begin())) return false;
        }
    return true;
}

bool FpAlgebra::is_zero_vec(std::span<const Res> a) const {
    for (Res x : a)
        if (x != 0) return false;
    return true;
}

exactla::BilinearProduct FpAlgebra::product_fn() const {
    return [this](std::span<const Res> a, std::span<const Res> b) { return mul(a, b); };
}

FpAlgebra fp_algebra_from_sc(const StructureConstants& sc, PrimeModulus p) {
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back("sigma" + std::to_string(i));
    std::vector<Res> table(10 * 10 * 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            for (std::size_t k = 0; k < 10; ++k)
                table[(i * 10 + j) * 10 + k] = p.reduce(sc.p[i][j][k]);
    std::vector<Res> unit(10, 0);
    unit[0] = unit[3] = 1;
    return FpAlgebra(p, std::move(labels), std::move(table), std::move(unit));
}

FpAlgebra fp_algebra_from_cc(const CoherentConfig& cc, PrimeModulus p) {
    auto scr = structure_constants(cc);
    if (std::holds_alternative<NotCoherent>(scr)) {
        const auto& nc = std::get<NotCoherent>(scr);
        std::ostringstream os;
        os << "fp_algebra_from_cc: product sigma_" << nc.i << " sigma_" << nc.j
           << " leaves the span at entry (" << nc.row << ", " << nc.col << ")";
        throw std::invalid_argument(os.str());
    }
    FpAlgebra base = fp_algebra_from_sc(std::get<StructureConstants>(scr), p);
    std::vector<MatF> rep;
    rep.reserve(10);
    for (const auto& s : cc.sigma) rep.push_back(MatF::from_int(s, p));
    return base.with_representation(std::move(rep));
}

FpAlgebra rank3_algebra(const incidence::Graph& g, PrimeModulus p) {
    using exactla::MatZ;
    const std::size_t n = g.order();
    const std::array<MatZ, 3> basis = {MatZ::identity(n), g.adjacency,
                                       MatZ::ones(n, n) - MatZ::identity(n) - g.adjacency};

    // class representatives: diagonal, first edge, first non-edge
    std::array<std::pair<std::size_t, std::size_t>, 3> reps;
    reps[0] = {0, 0};
    bool got_edge = false, got_non = false;
    for (std::size_t i = 0; i < n && !(got_edge && got_non); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (g.adjacency(i, j) && !got_edge) {
                reps[1] = {i, j};
                got_edge = true;
            } else if (!g.adjacency(i, j) && !got_non) {
                reps[2] = {i, j};
                got_non = true;
            }
        }
    if (!got_edge || !got_non)
        throw std::invalid_argument("rank3_algebra: graph is complete or edgeless");

    std::vector<Res> table(27);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const MatZ prod = basis[i] * basis[j];
            MatZ recon(n, n);
            for (std::size_t k = 0; k < 3; ++k) {
                const std::int64_t c = prod(reps[k].first, reps[k].second);
                table[(i * 3 + j) * 3 + k] = p.reduce(c);
                recon = recon + basis[k].scaled(c);
            }
            if (recon != prod)
                throw std::invalid_argument(
                    "rank3_algebra: graph is not strongly regular");
        }

    std::vector<MatF> rep;
    for (const auto& b : basis) rep.push_back(MatF::from_int(b, p));
    return FpAlgebra(p, {"I", "A", "Abar"}, std::move(table), {1, 0, 0}, std::move(rep));
}

FpAlgebra subalgebra(const FpAlgebra& a, const Subspace& s, std::vector<Res> unit) {
    const std::size_t m = s.dim();
    if (m == 0) throw std::invalid_argument("subalgebra: zero subspace");
    if (!s.contains(unit)) throw std::invalid_argument("subalgebra: unit not in subspace");

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("b" + std::to_string(i + 1));
    std::vector<Res> table(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto prod = a.mul(s.basis()[i], s.basis()[j]);
            if (!s.contains(prod))
                throw std::invalid_argument("subalgebra: subspace not multiplicatively closed");
            const auto coords = s.coordinates(prod);
            for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = coords[k];
        }
    return FpAlgebra(a.modulus(), std::move(labels), std::move(table),
                     s.coordinates(unit));
}

FpAlgebra corner_algebra(const FpAlgebra& design_algebra, Fiber fiber) {
    if (design_algebra.dim() != 10)
        throw std::invalid_argument("corner_algebra: expects the 10-dimensional design algebra");
    const std::size_t base = fiber == Fiber::point ? 0 : 3;
    std::vector<std::vector<Res>> gens;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Res> v(10, 0);
        v[base + i] = 1;
        gens.push_back(std::move(v));
    }
    Subspace s = Subspace::span(10, design_algebra.modulus(), std::move(gens));
    std::vector<Res> unit(10, 0);
    unit[base] = 1;
    return subalgebra(design_algebra, s, std::move(unit));
}

std::vector<Res> corner_embed(std::span<const Res> v, Fiber fiber) {
    if (v.size() != 3) throw std::invalid_argument("corner_embed: expects dim-3 coordinates");
    std::vector<Res> out(10, 0);
    const std::size_t base = fiber == Fiber::point ? 0 : 3;
    for (std::size_t i = 0; i < 3; ++i) out[base + i] = v[i];
    return out;
}

std::vector<Res> special_element_u(const FpAlgebra& design_algebra) {
    if (design_algebra.dim() != 10)
        throw std::invalid_argument("special_element_u: expects the design algebra");
    return design_algebra.mul(design_algebra.basis_element(1),   // sigma_2
                              design_algebra.basis_element(6));  // sigma_7
}

Quotient quotient_by_ideal(const FpAlgebra& a, const Subspace& ideal) {
    const std::size_t d = a.dim();
    const PrimeModulus p = a.modulus();
    if (ideal.ambient() != d)
        throw std::invalid_argument("quotient_by_ideal: ambient mismatch");
    const std::size_t m = d - ideal.dim();
    if (m == 0) throw std::invalid_argument("quotient_by_ideal: ideal is the whole algebra");

    std::vector<bool> is_pivot(d, false);
    for (auto pc : ideal.pivots()) is_pivot[pc] = true;
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < d; ++i)
        if (!is_pivot[i]) complement.push_back(i);

    MatF projection(m, d, p);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Res> e(d, 0);
        e[j] = 1;
        const auto red = ideal.reduce(e);
        for (std::size_t i = 0; i < m; ++i) projection(i, j) = red[complement[i]];
    }
    MatF section(d, m, p);
    for (std::size_t i = 0; i < m; ++i) section(complement[i], i) = 1;

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) labels.push_back("q" + std::to_string(i + 1));
    std::vector<Res> table(m * m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<Res> ei(d, 0), ej(d, 0);
            ei[complement[i]] = 1;
            ej[complement[j]] = 1;
            const auto prod = projection.apply(a.mul(ei, ej));
            for (std::size_t k = 0; k < m; ++k) table[(i * m + j) * m + k] = prod[k];
        }
    FpAlgebra q(p, std::move(labels), std::move(table), projection.apply(a.unit()));
    return Quotient{std::move(q), std::move(projection), std::move(section)};
}

} // namespace ccalgebra
