#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "exactla/fp.hpp"
#include "exactla/matf.hpp"
#include "exactla/matq.hpp"
#include "exactla/matz.hpp"
#include "exactla/poly.hpp"
#include "exactla/subspace.hpp"

#include <algorithm>
#include <random>

using namespace exactla;

namespace {

// Doily point-graph adjacency, built here independently of the incidence
// module: vertices are the 2-subsets of {0..5}, edges join disjoint pairs.
MatZ doily_adjacency() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) pairs.emplace_back(a, b);
    MatZ adj(15, 15);
    for (std::size_t i = 0; i < 15; ++i)
        for (std::size_t j = 0; j < 15; ++j) {
            if (i == j) continue;
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) adj(i, j) = 1;
        }
    return adj;
}

MatF random_matf(std::mt19937& rng, std::size_t rows, std::size_t cols, PrimeModulus m) {
    std::uniform_int_distribution<std::int64_t> dist(0, m.value() - 1);
    MatF r(rows, cols, m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            r(i, j) = static_cast<Res>(dist(rng));
    return r;
}

} // namespace

TEST_CASE("prime modulus validation and arithmetic") {
    CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(91), std::invalid_argument); // 7*13
    PrimeModulus p(101);
    CHECK(p.reduce(-1) == 100);
    CHECK(p.mul(p.inv(37), 37) == 1);
    CHECK(p.pow(3, 100) == 1); // Fermat
}

TEST_CASE("rref: identity, zero, doily mod 2") {
    PrimeModulus p2(2);
    CHECK(rref(MatF::identity(15, p2)).rank == 15);

    MatF zero(7, 5, p2);
    CHECK(rref(zero).rank == 0);

    MatF a = MatF::from_int(doily_adjacency(), p2);
    CHECK(rref(a).rank == 14);
}

TEST_CASE("rref idempotence and rank-nullity on random matrices") {
    std::mt19937 rng(20240811);
    for (std::int64_t pv : {2, 3, 5, 7}) {
        PrimeModulus p(pv);
        for (int trial = 0; trial < 25; ++trial) {
            MatF m = random_matf(rng, 1 + trial % 9, 1 + (trial * 7) % 11, p);
            RrefResult r = rref(m);
            RrefResult rr = rref(r.reduced);
            CHECK(rr.reduced == r.reduced);
            CHECK(r.rank + nullspace(m).dim() == m.cols());
        }
    }
}

TEST_CASE("nullspace: all-ones, doily mod 2, invertible") {
    for (std::int64_t pv : {2, 3, 7}) {
        PrimeModulus p(pv);
        MatF j = MatF::from_int(MatZ::ones(15, 15), p);
        CHECK(nullspace(j).dim() == 14);
    }
    PrimeModulus p2(2);
    MatF a = MatF::from_int(doily_adjacency(), p2);
    Subspace ker = nullspace(a);
    CHECK(ker.dim() == 1);
    std::vector<Res> ones(15, 1);
    CHECK(ker.contains(ones));

    CHECK(nullspace(MatF::identity(6, p2)).dim() == 0);
}

TEST_CASE("minpoly over GF(p): identity and annihilation property") {
    PrimeModulus p5(5);
    CHECK(minpoly(MatF::identity(4, p5)) == PolyF(p5, {4, 1})); // x - 1

    std::mt19937 rng(7);
    for (std::int64_t pv : {2, 3, 5}) {
        PrimeModulus p(pv);
        for (int trial = 0; trial < 10; ++trial) {
            MatF m = random_matf(rng, 6, 6, p);
            PolyF mp = minpoly(m);
            CHECK(mp.eval(m).is_zero());
            CHECK(mp.leading() == 1);
        }
    }
}

TEST_CASE("minpoly over Q: J and the doily adjacency") {
    MatQ j = MatQ::from_int(MatZ::ones(15, 15));
    PolyQ mj = minpoly(j);
    // x^2 - 15x
    CHECK(mj.degree() == 2);
    CHECK(mj.coeff(0) == 0);
    CHECK(mj.coeff(1) == -15);
    CHECK(mj.coeff(2) == 1);

    MatQ a = MatQ::from_int(doily_adjacency());
    PolyQ ma = minpoly(a);
    // (x-6)(x-1)(x+3) = x^3 - 4x^2 - 15x + 18; oracle: substitute back
    PolyQ expect({18, -15, -4, 1});
    CHECK(ma == expect);
    CHECK(expect.eval(a).is_zero());
}

TEST_CASE("charpoly (Berkowitz) against known spectra") {
    PrimeModulus p7(7);
    // identity: (x-1)^n
    PolyF cp = charpoly(MatF::identity(3, p7));
    PolyF lin = PolyF::linear(p7, 1);
    CHECK(cp == lin * lin * lin);

    // doily adjacency: (x-6)(x-1)^9(x+3)^5 mod p
    for (std::int64_t pv : {2, 3, 5, 7, 101}) {
        PrimeModulus p(pv);
        MatF a = MatF::from_int(doily_adjacency(), p);
        PolyF expect = PolyF::one(p);
        expect = expect * PolyF::linear(p, p.reduce(6));
        for (int i = 0; i < 9; ++i) expect = expect * PolyF::linear(p, p.reduce(1));
        for (int i = 0; i < 5; ++i) expect = expect * PolyF::linear(p, p.reduce(-3));
        CHECK(charpoly(a) == expect);
    }
}

TEST_CASE("polynomial factorization over GF(p)") {
    PrimeModulus p2(2);
    // x^2 + x + 1 irreducible over GF(2)
    PolyF irr(p2, {1, 1, 1});
    auto f1 = factor(irr);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].first == irr);
    CHECK(f1[0].second == 1);

    // (x^2+x+1)^2 * x * (x+1)^3
    PolyF f = irr * irr * PolyF::x(p2);
    PolyF xp1(p2, {1, 1});
    f = f * xp1 * xp1 * xp1;
    auto parts = factor(f);
    REQUIRE(parts.size() == 3);
    PolyF rebuilt = PolyF::one(p2);
    for (const auto& [g, m] : parts)
        for (std::size_t i = 0; i < m; ++i) rebuilt = rebuilt * g;
    CHECK(rebuilt == f.monic());

    // distinct irreducible quadratics over GF(3): x^2+1 and x^2+x+2
    PrimeModulus p3(3);
    PolyF g1(p3, {1, 0, 1});
    PolyF g2(p3, {2, 1, 1});
    auto parts3 = factor(g1 * g2);
    REQUIRE(parts3.size() == 2);
    CHECK(parts3[0].second == 1);
    CHECK(parts3[1].second == 1);
    CHECK(((parts3[0].first == g1 && parts3[1].first == g2) ||
           (parts3[0].first == g2 && parts3[1].first == g1)));
}

TEST_CASE("subspace canonical form and membership") {
    PrimeModulus p3(3);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dist(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Res>> vecs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Res> v(6);
            for (auto& x : v) x = static_cast<Res>(dist(rng));
            vecs.push_back(v);
        }
        Subspace s = Subspace::span(6, p3, vecs);
        std::shuffle(vecs.begin(), vecs.end(), rng);
        // also throw in a linear combination
        std::vector<Res> combo(6, 0);
        for (std::size_t j = 0; j < 6; ++j)
            combo[j] = p3.add(vecs[0][j], p3.mul(2, vecs[1][j]));
        vecs.push_back(combo);
        Subspace t = Subspace::span(6, p3, vecs);
        CHECK(s == t);
        for (const auto& v : vecs) CHECK(s.contains(v));
    }
}

TEST_CASE("subspace_product: zero factor gives zero") {
    PrimeModulus p2(2);
    Subspace zero(4, p2);
    Subspace full = Subspace::full(4, p2);
    auto mul = [&](std::span<const Res> a, std::span<const Res> b) {
        std::vector<Res> r(4, 0);
        for (std::size_t i = 0; i < 4; ++i) r[i] = p2.mul(a[i], b[i]);
        return r;
    };
    CHECK(subspace_product(zero, full, mul).dim() == 0);
    CHECK(subspace_product(full, zero, mul).dim() == 0);
}

TEST_CASE("rank_rational: identity, all-ones, frozen example, oracle comparison") {
    CHECK(rank_rational(MatQ::identity(9)) == 9);
    CHECK(rank_rational(MatQ::from_int(MatZ::ones(8, 11))) == 1);

    // rank-2 by construction
    MatQ m(3, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        m(0, j) = static_cast<long>(j + 1);
        m(1, j) = static_cast<long>(2 * (j + 1));
        m(2, j) = static_cast<long>(j * j);
    }
    CHECK(rank_rational(m) == 2);

    // oracle: plain rational Gaussian elimination, written here
    auto rank_gauss = [](MatQ a) {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
            std::size_t pr = rank;
            while (pr < a.rows() && a(pr, col) == 0) ++pr;
            if (pr == a.rows()) continue;
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(rank, j));
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (i == rank || a(i, col) == 0) continue;
                mpq_class f = a(i, col) / a(rank, col);
                for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
            }
            ++rank;
        }
        return rank;
    };
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dist(-5, 5);
    for (int trial = 0; trial < 15; ++trial) {
        MatQ a(5, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                a(i, j) = mpq_class(dist(rng), 1 + (trial % 3));
        CHECK(rank_rational(a) == rank_gauss(a));
    }
}

TEST_CASE("solve: consistent and inconsistent systems") {
    PrimeModulus p5(5);
    std::mt19937 rng(17);
    MatF a = random_matf(rng, 4, 4, p5);
    std::vector<Res> x0{1, 2, 3, 4};
    auto b = a.apply(x0);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);

    MatF sing(2, 2, p5); // zero matrix
    std::vector<Res> rhs{1, 0};
    CHECK(!solve(sing, rhs).has_value());
}
