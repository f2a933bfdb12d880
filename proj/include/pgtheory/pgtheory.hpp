#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pgtheory {

/// Parameters of a partial geometry pg(s,t,alpha). Requiring
/// alpha <= min(s,t) keeps the point graph a genuine rank-3 graph
/// (alpha = s+1 would collapse the second nontrivial eigenspace).
struct PgParams {
    std::int64_t s = 0, t = 0, alpha = 0;

    bool structurally_valid() const {
        return s >= 1 && t >= 1 && alpha >= 1 && alpha <= s && alpha <= t;
    }
};

/// Derived arithmetic data of the point graph: counts, srg parameters,
/// eigenvalues k > r > sprime and multiplicities 1, f, g.
struct PgSpectrum {
    std::int64_t v = 0, b = 0;
    std::int64_t k = 0, lambda = 0, mu = 0;
    std::int64_t r = 0, sprime = 0;
    std::int64_t f = 0, g = 0;

    bool operator==(const PgSpectrum&) const = default;
};

/// Named non-integrality: the parameter set is infeasible because the given
/// derived quantity is not an integer.
struct NonIntegral {
    std::string field;
};

using SpectrumResult = std::variant<PgSpectrum, NonIntegral>;

SpectrumResult pg_spectrum(const PgParams& params);

/// Frame number of the rank-3 point scheme: v^2 (s+t+1-alpha)^2.
/// Throws std::domain_error on infeasible parameters.
std::int64_t frame_as(const PgParams& params);

/// Frame number from spectral data, v^3 k (v-1-k) / (f g), as an exact
/// rational. Throws std::domain_error when f*g = 0.
mpq_class frame_from_spectrum(std::int64_t v, std::int64_t k,
                              std::int64_t f, std::int64_t g);

/// Ascending prime divisors of v * (s+t+1-alpha): exactly the
/// characteristics where the adjacency algebra is not semisimple.
std::vector<std::int64_t> bad_primes(const PgParams& params);

/// Arithmetic case of a prime for pg(s,t,alpha), by divisibility of v and
/// of s+t+1-alpha.
enum class PrimeCase { SS, V, R, VR };

const char* to_string(PrimeCase c);

PrimeCase classify_prime(const PgParams& params, std::int64_t p);

/// Radical of the rank-3 adjacency algebra over GF(p), described
/// symbolically: dimension 0..2 and which of the two generators occur
/// (the all-ones matrix J, the quadratic B = (A-kI)(A-rI)).
struct SymbolicRadical {
    int dim = 0;
    bool has_all_ones_j = false;
    bool has_quadratic_b = false;

    bool operator==(const SymbolicRadical&) const = default;
};

SymbolicRadical symbolic_radical(const PgParams& params, std::int64_t p);

/// Generic p-rank of the point-graph adjacency matrix. Outside the
/// exceptional primes the rank is v, v-1, v-f or v-g according to which
/// eigenvalue vanishes mod p; when two eigenvalues collide mod p the
/// generic argument does not apply and the result is flagged exceptional
/// (TypeB when additionally no eigenvalue vanishes).
struct PrankResult {
    enum class Kind { Full, DropOne, DropF, DropG, ExceptionalCollision, ExceptionalTypeB };
    Kind kind = Kind::Full;
    std::optional<std::int64_t> rank;   // set for the four generic kinds

    bool operator==(const PrankResult&) const = default;
};

const char* to_string(PrankResult::Kind k);

PrankResult generic_prank(const PgParams& params, std::int64_t p);

} // namespace pgtheory
