#pragma once

#include <optional>

#include <gmpxx.h>

#include "cmtors/algebra/factor.hpp"

namespace cmtors {

// Canonical integer representative of a class in Q*/(Q*)^n.
struct PowerFreeRep {
    unsigned n = 2;
    mpz_class rep = 1;

    bool operator==(const PowerFreeRep&) const = default;
};

// Clears the denominator with den^n, then reduces every prime exponent into
// [0, n). The sign survives for even n; for odd n it is absorbed (-1 = (-1)^n)
// and the representative is positive.
PowerFreeRep power_free_rep(const mpq_class& q, unsigned n, const FactorOptions& opts = {});

// Squarefree integer in the class of q modulo rational squares.
mpz_class squarefree_part(const mpq_class& q, const FactorOptions& opts = {});

bool is_squarefree(const mpz_class& n);

// r with r^n = q, when one exists in Q.
std::optional<mpq_class> rational_nth_root(const mpq_class& q, unsigned n);

std::optional<mpq_class> rational_sqrt(const mpq_class& q);

} // namespace cmtors
