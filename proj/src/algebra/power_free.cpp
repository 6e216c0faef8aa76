#include "cmtors/algebra/power_free.hpp"

#include <stdexcept>

namespace cmtors {

namespace {

std::optional<mpz_class> integer_nth_root(const mpz_class& v, unsigned n)
{
    if (v < 0 && n % 2 == 0)
        return std::nullopt;
    mpz_class a = abs(v), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0)
        return std::nullopt;
    if (v < 0)
        r = -r;
    return r;
}

} // namespace

PowerFreeRep power_free_rep(const mpq_class& q, unsigned n, const FactorOptions& opts)
{
    if (q == 0)
        throw std::invalid_argument("power_free_rep: zero has no class");
    if (n < 2)
        throw std::invalid_argument("power_free_rep: modulus must be at least 2");

    Factorization num = factorize(q.get_num(), opts);
    Factorization den = factorize(q.get_den(), opts);
    // q * den^n has exponents e_num(p) + (n - 1) e_den(p) = e_num(p) - e_den(p) mod n.
    std::map<mpz_class, long> exps;
    for (const auto& [p, e] : num.factors)
        exps[p] += long(e);
    for (const auto& [p, e] : den.factors)
        exps[p] -= long(e);

    mpz_class rep = 1, pe;
    for (const auto& [p, e] : exps) {
        long r = ((e % long(n)) + long(n)) % long(n);
        if (r == 0)
            continue;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
        rep *= pe;
    }
    if (n % 2 == 0 && q < 0)
        rep = -rep;
    return {n, rep};
}

mpz_class squarefree_part(const mpq_class& q, const FactorOptions& opts)
{
    return power_free_rep(q, 2, opts).rep;
}

bool is_squarefree(const mpz_class& n)
{
    if (n == 0)
        return false;
    return squarefree_part(mpq_class(n)) == n;
}

std::optional<mpq_class> rational_nth_root(const mpq_class& q, unsigned n)
{
    if (n < 1)
        throw std::invalid_argument("rational_nth_root: n must be positive");
    if (q == 0)
        return mpq_class(0);
    auto num = integer_nth_root(q.get_num(), n);
    if (!num)
        return std::nullopt;
    auto den = integer_nth_root(q.get_den(), n);
    if (!den)
        return std::nullopt;
    mpq_class r(*num, *den);
    r.canonicalize();
    return r;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q)
{
    auto r = rational_nth_root(q, 2);
    if (r && *r < 0)
        *r = -*r;
    return r;
}

} // namespace cmtors
