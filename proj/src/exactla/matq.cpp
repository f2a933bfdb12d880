#include "exactla/matq.hpp"

#include <utility>

namespace exactla {

MatQ MatQ::operator+(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatQ: shape mismatch");
    MatQ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatQ: shape mismatch");
    MatQ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

MatQ MatQ::operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatQ: shape mismatch in product");
    MatQ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpq_class& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

MatQ MatQ::scaled(const mpq_class& c) const {
    MatQ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
    return r;
}

std::size_t rank_rational(const MatQ& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    // clear denominators row by row, then fraction-free Bareiss
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) {
            mpq_class scaled = m(i, j) * mpq_class(l);
            a[i][j] = scaled.get_num();   // denominator is now 1
        }
    }

    std::size_t rank = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pr = rank;
        while (pr < nr && a[pr][col] == 0) ++pr;
        if (pr == nr) continue;
        if (pr != rank) std::swap(a[pr], a[rank]);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t j = col + 1; j < nc; ++j) {
                mpz_class num = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    std::vector<mpq_class> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    }
    return PolyQ(std::move(c));
}

MatQ PolyQ::eval(const MatQ& m) const {
    if (m.rows() != m.cols()) throw std::invalid_argument("PolyQ::eval: matrix not square");
    MatQ acc(m.rows(), m.cols());
    const MatQ id = MatQ::identity(m.rows());
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * m + id.scaled(c_[i]);
    return acc;
}

PolyQ minpoly(const MatQ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("minpoly: matrix not square");
    const std::size_t n = m.rows();

    // lcm accumulation over Krylov chains, as in the GF(p) version
    auto poly_divmod = [](const PolyQ& a, const PolyQ& b) {
        std::vector<mpq_class> rem = a.coeffs();
        std::vector<mpq_class> q;
        const int db = b.degree();
        if (static_cast<int>(rem.size()) - 1 >= db) q.assign(rem.size() - db, 0);
        while (static_cast<int>(rem.size()) - 1 >= db) {
            mpq_class f = rem.back() / b.coeff(static_cast<std::size_t>(db));
            const std::size_t shift = rem.size() - 1 - static_cast<std::size_t>(db);
            q[shift] = f;
            for (int i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(i) + shift] -= f * b.coeff(static_cast<std::size_t>(i));
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            if (rem.empty()) break;
        }
        return std::pair{PolyQ(std::move(q)), PolyQ(std::move(rem))};
    };
    auto poly_gcd = [&](PolyQ a, PolyQ b) {
        while (!b.is_zero()) {
            PolyQ r = poly_divmod(a, b).second;
            a = b;
            b = r;
        }
        if (!a.is_zero()) {
            mpq_class lead = a.coeff(static_cast<std::size_t>(a.degree()));
            std::vector<mpq_class> c = a.coeffs();
            for (auto& x : c) x /= lead;
            a = PolyQ(std::move(c));
        }
        return a;
    };
    auto poly_lcm = [&](const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return PolyQ();
        PolyQ g = poly_gcd(a, b);
        PolyQ l = poly_divmod(a * b, g).first;
        mpq_class lead = l.coeff(static_cast<std::size_t>(l.degree()));
        std::vector<mpq_class> c = l.coeffs();
        for (auto& x : c) x /= lead;
        return PolyQ(std::move(c));
    };

    PolyQ result(std::vector<mpq_class>{1});
    for (std::size_t start = 0; start < n; ++start) {
        if (result.degree() == static_cast<int>(n)) break;
        std::vector<std::vector<mpq_class>> rows;
        std::vector<std::size_t> pivots;
        std::vector<std::vector<mpq_class>> combos;
        std::vector<mpq_class> v(n);
        v[start] = 1;
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<mpq_class> w = v;
            std::vector<mpq_class> combo(k + 1);
            combo[k] = 1;
            for (std::size_t b = 0; b < rows.size(); ++b) {
                const mpq_class f = w[pivots[b]];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j) w[j] -= f * rows[b][j];
                for (std::size_t j = 0; j < combos[b].size(); ++j) combo[j] -= f * combos[b][j];
            }
            std::size_t p = 0;
            while (p < n && w[p] == 0) ++p;
            if (p == n) {
                result = poly_lcm(result, PolyQ(std::move(combo)));
                break;
            }
            const mpq_class pinv = 1 / w[p];
            for (auto& x : w) x *= pinv;
            for (auto& x : combo) x *= pinv;
            rows.push_back(std::move(w));
            pivots.push_back(p);
            combos.push_back(std::move(combo));
            // v <- M v
            std::vector<mpq_class> nv(n);
            for (std::size_t i = 0; i < n; ++i) {
                mpq_class acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
                nv[i] = acc;
            }
            v = std::move(nv);
        }
    }
    return result;
}

} // namespace exactla
