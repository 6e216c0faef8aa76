#include "cmtors/algebra/factor.hpp"

#include <stdexcept>
#include <vector>

#include "cmtors/errors.hpp"

namespace cmtors {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (u64 j = u64(i) * i; j <= limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

u64 powmod(u64 b, u64 e, u64 m)
{
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin_u64(u64 n)
{
    if (n < 2)
        return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

bool fits_u64(const mpz_class& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const mpz_class& n)
{
    u64 lo = 0;
    mpz_export(&lo, nullptr, -1, sizeof lo, 0, 0, n.get_mpz_t());
    return lo;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
mpz_class rho_split(const mpz_class& n, unsigned long c, u64 max_iter)
{
    mpz_class y = 2, x, q = 1, g = 1, ys, t;
    const u64 m = 128;
    u64 r = 1, iter = 0;
    auto step = [&](mpz_class& v) {
        v = v * v + c;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i)
            step(y);
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                step(y);
                t = x - y;
                q = q * abs(t);
                mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
            iter += lim;
            if (iter > max_iter)
                return 0;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the saved state.
        do {
            step(ys);
            t = x - ys;
            t = abs(t);
            mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n)
        return 0;
    return g;
}

void split_large(const mpz_class& n, std::map<mpz_class, unsigned>& out, const FactorOptions& opts)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        std::map<mpz_class, unsigned> sub;
        split_large(root, sub, opts);
        for (auto& [p, e] : sub)
            out[p] += 2 * e;
        return;
    }
    for (unsigned attempt = 0; attempt < opts.rho_attempts; ++attempt) {
        mpz_class f = rho_split(n, 1 + 2 * attempt, opts.rho_iterations);
        if (f != 0) {
            split_large(f, out, opts);
            split_large(mpz_class(n / f), out, opts);
            return;
        }
    }
    throw FactorizationFailure("could not split composite cofactor " + n.get_str());
}

} // namespace

mpz_class Factorization::value() const
{
    mpz_class v = sign;
    mpz_class pe;
    for (const auto& [p, e] : factors) {
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

bool is_prime(const mpz_class& n)
{
    if (n < 2)
        return false;
    if (fits_u64(n))
        return miller_rabin_u64(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

Factorization factorize(const mpz_class& n, const FactorOptions& opts)
{
    if (n == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    Factorization result;
    result.sign = sgn(n) < 0 ? -1 : 1;
    mpz_class m = abs(n);

    const auto& primes = small_primes();
    std::size_t checked = 0;
    for (std::uint32_t p : primes) {
        if (p > opts.trial_bound)
            break;
        if (mpz_cmp_ui(m.get_mpz_t(), u64(p) * p) < 0)
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            result.factors[mpz_class(p)] = e;
        }
        // Stop early once the cofactor is certified prime.
        if (++checked % 2048 == 0 && is_prime(m))
            break;
    }
    if (m == 1)
        return result;
    split_large(m, result.factors, opts);
    return result;
}

} // namespace cmtors
