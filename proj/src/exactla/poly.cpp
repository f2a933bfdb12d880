#include "exactla/poly.hpp"

#include "exactla/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactla {

PolyF PolyF::operator+(const PolyF& o) const {
    std::vector<Res> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod_.add(coeff(i), o.coeff(i));
    return PolyF(mod_, std::move(c));
}

PolyF PolyF::operator-(const PolyF& o) const {
    std::vector<Res> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = mod_.sub(coeff(i), o.coeff(i));
    return PolyF(mod_, std::move(c));
}

PolyF PolyF::operator*(const PolyF& o) const {
    if (is_zero() || o.is_zero()) return zero(mod_);
    std::vector<Res> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] = mod_.add(c[i + j], mod_.mul(c_[i], o.c_[j]));
    }
    return PolyF(mod_, std::move(c));
}

PolyF PolyF::scaled(Res c) const {
    std::vector<Res> v = c_;
    for (auto& x : v) x = mod_.mul(c, x);
    return PolyF(mod_, std::move(v));
}

PolyF PolyF::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_.inv(leading()));
}

PolyF PolyF::derivative() const {
    if (c_.size() <= 1) return zero(mod_);
    std::vector<Res> c(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = mod_.mul(mod_.reduce(static_cast<std::int64_t>(i)), c_[i]);
    return PolyF(mod_, std::move(c));
}

std::pair<PolyF, PolyF> PolyF::divmod(const PolyF& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("PolyF: division by zero polynomial");
    PolyF rem = *this;
    std::vector<Res> q;
    const int dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(rem.degree() - dd + 1, 0);
    const Res linv = mod_.inv(divisor.leading());
    while (!rem.is_zero() && rem.degree() >= dd) {
        const int shift = rem.degree() - dd;
        const Res f = mod_.mul(rem.leading(), linv);
        q[shift] = f;
        std::vector<Res> rc = rem.c_;
        for (int i = 0; i <= dd; ++i)
            rc[i + shift] = mod_.sub(rc[i + shift], mod_.mul(f, divisor.c_[i]));
        rem = PolyF(mod_, std::move(rc));
    }
    return {PolyF(mod_, std::move(q)), rem};
}

Res PolyF::eval(Res x) const {
    Res acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = mod_.add(mod_.mul(acc, x), c_[i]);
    return acc;
}

MatF PolyF::eval(const MatF& m) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("PolyF::eval: matrix not square");
    MatF acc(m.rows(), m.cols(), m.modulus());
    const MatF id = MatF::identity(m.rows(), m.modulus());
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * m + id.scaled(c_[i]);
    return acc;
}

PolyF gcd(const PolyF& a, const PolyF& b) {
    PolyF x = a, y = b;
    while (!y.is_zero()) {
        PolyF r = x % y;
        x = y;
        y = r;
    }
    return x.monic();
}

PolyF lcm(const PolyF& a, const PolyF& b) {
    if (a.is_zero() || b.is_zero()) return PolyF::zero(a.modulus());
    return ((a * b) / gcd(a, b)).monic();
}

PolyF powmod(const PolyF& a, std::uint64_t e, const PolyF& f) {
    PolyF r = PolyF::one(a.modulus()) % f;
    PolyF base = a % f;
    while (e) {
        if (e & 1) r = (r * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return r;
}

namespace {

// coefficients c_{ip} of f(x) = g(x^p) pulled back to g; over the prime
// field the Frobenius is the identity on coefficients
PolyF pth_root(const PolyF& f) {
    const auto p = static_cast<std::size_t>(f.modulus().value());
    std::vector<Res> c(f.degree() / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i * p);
    return PolyF(f.modulus(), std::move(c));
}

void squarefree_parts(const PolyF& f, std::size_t outer_mult,
                      std::vector<std::pair<PolyF, std::size_t>>& out) {
    const auto p = static_cast<std::size_t>(f.modulus().value());
    PolyF df = f.derivative();
    if (df.is_zero()) {
        squarefree_parts(pth_root(f), outer_mult * p, out);
        return;
    }
    PolyF c = gcd(f, df);
    PolyF w = f / c;
    std::size_t i = 1;
    while (w.degree() > 0) {
        PolyF y = gcd(w, c);
        PolyF part = w / y;
        if (part.degree() > 0) out.emplace_back(part.monic(), outer_mult * i);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree_parts(pth_root(c), outer_mult * p, out);
}

// Berlekamp splitting of a squarefree monic polynomial
std::vector<PolyF> berlekamp_split(const PolyF& f) {
    const PrimeModulus mod = f.modulus();
    const auto n = static_cast<std::size_t>(f.degree());
    if (n <= 1) return {f};

    // Frobenius matrix: column i = coefficients of x^{ip} mod f
    const PolyF xp = powmod(PolyF::x(mod), static_cast<std::uint64_t>(mod.value()), f);
    MatF frob(n, n, mod);
    PolyF h = PolyF::one(mod);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) frob(j, i) = h.coeff(j);
        h = (h * xp) % f;
    }
    const Subspace kernel = nullspace(frob - MatF::identity(n, mod));
    const std::size_t r = kernel.dim();   // number of irreducible factors
    if (r == 1) return {f};

    std::vector<PolyF> factors{f};
    for (const auto& kv : kernel.basis()) {
        if (factors.size() == r) break;
        PolyF b(mod, kv);
        if (b.degree() < 1) continue;
        std::vector<PolyF> next;
        for (const auto& u : factors) {
            if (u.degree() <= 1) {
                next.push_back(u);
                continue;
            }
            std::vector<PolyF> parts;
            PolyF rest = u;
            for (std::int64_t c = 0; c < mod.value() && rest.degree() > 0; ++c) {
                PolyF g = gcd(rest, b - PolyF(mod, {static_cast<Res>(c)}));
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    parts.push_back(g);
                    rest = rest / g;
                }
            }
            if (rest.degree() > 0) parts.push_back(rest);
            for (auto& x : parts) next.push_back(x.monic());
        }
        factors = std::move(next);
    }
    return factors;
}

} // namespace

std::vector<std::pair<PolyF, std::size_t>> factor(const PolyF& f) {
    if (f.degree() < 1) throw std::invalid_argument("factor: polynomial must be nonconstant");
    std::vector<std::pair<PolyF, std::size_t>> parts;
    squarefree_parts(f.monic(), 1, parts);
    std::vector<std::pair<PolyF, std::size_t>> out;
    for (const auto& [part, mult] : parts)
        for (const auto& irr : berlekamp_split(part))
            out.emplace_back(irr, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    return out;
}

PolyF charpoly(const MatF& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
    const PrimeModulus mod = m.modulus();
    const std::size_t n = m.rows();

    // Samuelson-Berkowitz: extend principal minors one row/column at a time.
    // c holds coefficients in order [x^k, x^{k-1}, ..., x^0].
    std::vector<Res> c{1 % static_cast<Res>(mod.value())};
    for (std::size_t k = 0; k < n; ++k) {
        // Toeplitz column for the (k+1)-st leading principal submatrix
        std::vector<Res> t(k + 2, 0);
        t[0] = 1 % static_cast<Res>(mod.value());
        t[1] = mod.neg(m(k, k));
        if (k > 0) {
            std::vector<Res> v(k);   // iterated A_k^j * (column k)
            for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
            for (std::size_t i = 2; i < k + 2; ++i) {
                Res dot = 0;
                for (std::size_t j = 0; j < k; ++j)
                    dot = mod.add(dot, mod.mul(m(k, j), v[j]));
                t[i] = mod.neg(dot);
                if (i + 1 < k + 2) {
                    std::vector<Res> nv(k, 0);
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = 0; b < k; ++b)
                            nv[a] = mod.add(nv[a], mod.mul(m(a, b), v[b]));
                    v = std::move(nv);
                }
            }
        }
        std::vector<Res> nc(k + 2, 0);
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < t.size(); ++j)
                if (i - j < c.size())
                    nc[i] = mod.add(nc[i], mod.mul(t[j], c[i - j]));
        c = std::move(nc);
    }
    std::reverse(c.begin(), c.end());   // store as coefficient of x^i at index i
    return PolyF(mod, std::move(c));
}

PolyF minpoly(const MatF& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minpoly: matrix not square");
    const PrimeModulus mod = m.modulus();
    const std::size_t n = m.rows();
    PolyF result = PolyF::one(mod);

    for (std::size_t start = 0; start < n; ++start) {
        if (result.degree() == static_cast<int>(n)) break;
        // Krylov chain from e_start with polynomial bookkeeping
        std::vector<std::vector<Res>> rows;      // reduced chain vectors
        std::vector<std::size_t> pivots;
        std::vector<std::vector<Res>> combos;    // polynomial coefficients per row
        std::vector<Res> v(n, 0);
        v[start] = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<Res> w = v;
            std::vector<Res> combo(k + 1, 0);
            combo[k] = 1;
            for (std::size_t b = 0; b < rows.size(); ++b) {
                const Res f = w[pivots[b]];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    w[j] = mod.sub(w[j], mod.mul(f, rows[b][j]));
                for (std::size_t j = 0; j < combos[b].size(); ++j)
                    combo[j] = mod.sub(combo[j], mod.mul(f, combos[b][j]));
            }
            std::size_t p = 0;
            while (p < n && w[p] == 0) ++p;
            if (p == n) {
                result = lcm(result, PolyF(mod, std::move(combo)));
                break;
            }
            const Res pinv = mod.inv(w[p]);
            for (auto& x : w) x = mod.mul(pinv, x);
            for (auto& x : combo) x = mod.mul(pinv, x);
            rows.push_back(std::move(w));
            pivots.push_back(p);
            combos.push_back(std::move(combo));
            v = m.apply(v);
        }
    }
    return result.monic();
}

} // namespace exactla
