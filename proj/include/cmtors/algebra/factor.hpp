#pragma once

#include <cstdint>
#include <map>

#include <gmpxx.h>

namespace cmtors {

struct Factorization {
    int sign = 1;
    std::map<mpz_class, unsigned> factors;

    mpz_class value() const;
    bool operator==(const Factorization&) const = default;
};

struct FactorOptions {
    std::uint32_t trial_bound = 1'000'000;
    unsigned rho_attempts = 24;
    std::uint64_t rho_iterations = 1u << 22;
};

// Deterministic for n < 2^64 (Miller-Rabin with the first twelve prime bases);
// above that GMP's BPSW-based test is used.
bool is_prime(const mpz_class& n);

// Throws FactorizationFailure when a composite cofactor survives trial division
// and the rho budget.
Factorization factorize(const mpz_class& n, const FactorOptions& opts = {});

} // namespace cmtors
