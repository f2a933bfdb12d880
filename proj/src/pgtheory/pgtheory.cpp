#include "pgtheory/pgtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgtheory {

namespace {

std::int64_t require_valid_v(const PgParams& p) {
    if (!p.structurally_valid())
        throw std::domain_error("pg parameters out of range");
    const std::int64_t num = (p.s + 1) * (p.s * p.t + p.alpha);
    if (num % p.alpha != 0)
        throw std::domain_error("pg parameters infeasible: v is not an integer");
    return num / p.alpha;
}

} // namespace

SpectrumResult pg_spectrum(const PgParams& p) {
    if (!p.structurally_valid())
        throw std::domain_error("pg parameters out of range");
    const std::int64_t s = p.s, t = p.t, alpha = p.alpha;

    PgSpectrum sp;
    const std::int64_t vnum = (s + 1) * (s * t + alpha);
    if (vnum % alpha != 0) return NonIntegral{"v"};
    sp.v = vnum / alpha;
    const std::int64_t bnum = (t + 1) * (s * t + alpha);
    if (bnum % alpha != 0) return NonIntegral{"b"};
    sp.b = bnum / alpha;

    sp.k = s * (t + 1);
    sp.lambda = (s - 1) + t * (alpha - 1);
    sp.mu = alpha * (t + 1);
    sp.r = s - alpha;
    sp.sprime = -(t + 1);

    const std::int64_t denom = alpha * (s + t + 1 - alpha);
    const std::int64_t fnum = s * t * (s * t + s + t + 1);
    if (fnum % denom != 0) return NonIntegral{"f"};
    sp.f = fnum / denom;
    const std::int64_t gnum = s * (s * t + alpha) * (s + 1 - alpha);
    if (gnum % denom != 0) return NonIntegral{"g"};
    sp.g = gnum / denom;

    if (sp.f < 1 || sp.g < 1) return NonIntegral{sp.f < 1 ? "f" : "g"};
    if (1 + sp.f + sp.g != sp.v ||
        sp.k + sp.f * sp.r + sp.g * sp.sprime != 0)
        throw std::logic_error("pg_spectrum: trace identities failed");
    return sp;
}

std::int64_t frame_as(const PgParams& p) {
    const std::int64_t v = require_valid_v(p);
    const std::int64_t w = p.s + p.t + 1 - p.alpha;
    return v * v * w * w;
}

mpq_class frame_from_spectrum(std::int64_t v, std::int64_t k,
                              std::int64_t f, std::int64_t g) {
    if (f == 0 || g == 0)
        throw std::domain_error("frame_from_spectrum: degenerate multiplicities");
    mpq_class num(v);
    num *= v;
    num *= v;
    num *= k;
    num *= (v - 1 - k);
    mpq_class result = num / mpq_class(f * g);
    result.canonicalize();
    return result;
}

std::vector<std::int64_t> bad_primes(const PgParams& p) {
    std::int64_t n = require_valid_v(p) * (p.s + p.t + 1 - p.alpha);
    std::vector<std::int64_t> primes;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        primes.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) primes.push_back(n);
    std::sort(primes.begin(), primes.end());
    return primes;
}

const char* to_string(PrimeCase c) {
    switch (c) {
        case PrimeCase::SS: return "SS";
        case PrimeCase::V: return "V";
        case PrimeCase::R: return "R";
        case PrimeCase::VR: return "VR";
    }
    return "?";
}

PrimeCase classify_prime(const PgParams& p, std::int64_t prime) {
    const std::int64_t v = require_valid_v(p);
    const bool div_v = v % prime == 0;
    const bool div_w = (p.s + p.t + 1 - p.alpha) % prime == 0;
    if (div_v && div_w) return PrimeCase::VR;
    if (div_v) return PrimeCase::V;
    if (div_w) return PrimeCase::R;
    return PrimeCase::SS;
}

SymbolicRadical symbolic_radical(const PgParams& p, std::int64_t prime) {
    switch (classify_prime(p, prime)) {
        case PrimeCase::SS: return {0, false, false};
        case PrimeCase::V: return {1, true, false};
        case PrimeCase::R: return {1, false, true};
        case PrimeCase::VR: return {2, true, true};
    }
    return {};
}

const char* to_string(PrankResult::Kind k) {
    switch (k) {
        case PrankResult::Kind::Full: return "full";
        case PrankResult::Kind::DropOne: return "drop_one";
        case PrankResult::Kind::DropF: return "drop_f";
        case PrankResult::Kind::DropG: return "drop_g";
        case PrankResult::Kind::ExceptionalCollision: return "exceptional_collision";
        case PrankResult::Kind::ExceptionalTypeB: return "exceptional_type_b";
    }
    return "?";
}

PrankResult generic_prank(const PgParams& p, std::int64_t prime) {
    const auto spr = pg_spectrum(p);
    if (std::holds_alternative<NonIntegral>(spr))
        throw std::domain_error("pg parameters infeasible: " +
                                std::get<NonIntegral>(spr).field + " is not an integer");
    const PgSpectrum sp = std::get<PgSpectrum>(spr);

    auto divides = [prime](std::int64_t x) { return x % prime == 0; };
    const bool collision =
        divides(sp.k - sp.r) || divides(sp.k - sp.sprime) || divides(sp.r - sp.sprime);
    const bool k0 = divides(sp.k), r0 = divides(sp.r), s0 = divides(sp.sprime);

    if (collision) {
        if (!k0 && !r0 && !s0) return {PrankResult::Kind::ExceptionalTypeB, std::nullopt};
        return {PrankResult::Kind::ExceptionalCollision, std::nullopt};
    }
    // eigenvalues pairwise distinct mod p, so at most one vanishes
    if (k0) return {PrankResult::Kind::DropOne, sp.v - 1};
    if (r0) return {PrankResult::Kind::DropF, sp.v - sp.f};
    if (s0) return {PrankResult::Kind::DropG, sp.v - sp.g};
    return {PrankResult::Kind::Full, sp.v};
}

} // namespace pgtheory
