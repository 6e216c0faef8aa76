#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "cmtors/poly/roots.hpp"

namespace cmtors {

namespace {

using u64 = std::uint64_t;

bool is_small_prime(unsigned v)
{
    if (v < 2)
        return false;
    for (unsigned d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

mpz_class eval(const std::vector<mpz_class>& h, const mpz_class& y)
{
    mpz_class acc = 0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        acc *= y;
        acc += *it;
    }
    return acc;
}

mpz_class eval_mod(const std::vector<mpz_class>& h, const mpz_class& y, const mpz_class& m)
{
    mpz_class acc = 0;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        acc = acc * y + *it;
        mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m.get_mpz_t());
    }
    return acc;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& h)
{
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < h.size(); ++i)
        d.push_back(h[i] * static_cast<unsigned long>(i));
    return d;
}

// Bound on |root| for a monic integer polynomial: 2 max |h_{n-i}|^(1/i), rounded up.
mpz_class root_bound(const std::vector<mpz_class>& h)
{
    const std::size_t n = h.size() - 1;
    mpz_class best = 1, r, a;
    for (std::size_t i = 1; i <= n; ++i) {
        a = abs(h[n - i]);
        if (a == 0)
            continue;
        mpz_root(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(i));
        r += 1;
        if (r > best)
            best = r;
    }
    return 2 * best + 1;
}

struct ModularRoots {
    unsigned prime = 0;
    std::vector<u64> roots;
};

// A prime at which every root of h is simple, with those roots. Returns prime 0
// when none was found below the search limit.
ModularRoots simple_roots_mod_prime(const std::vector<mpz_class>& h)
{
    const auto dh = derivative(h);
    for (unsigned ell = 11; ell < 4000; ell += 2) {
        if (!is_small_prime(ell))
            continue;
        std::vector<u64> hm(h.size()), dm(dh.size());
        for (std::size_t i = 0; i < h.size(); ++i)
            hm[i] = mpz_fdiv_ui(h[i].get_mpz_t(), ell);
        for (std::size_t i = 0; i < dh.size(); ++i)
            dm[i] = mpz_fdiv_ui(dh[i].get_mpz_t(), ell);
        ModularRoots out{ell, {}};
        bool ok = true;
        for (u64 r = 0; r < ell && ok; ++r) {
            u64 acc = 0;
            for (auto it = hm.rbegin(); it != hm.rend(); ++it)
                acc = (acc * r + *it) % ell;
            if (acc != 0)
                continue;
            u64 dacc = 0;
            for (auto it = dm.rbegin(); it != dm.rend(); ++it)
                dacc = (dacc * r + *it) % ell;
            if (dacc == 0)
                ok = false;
            else
                out.roots.push_back(r);
        }
        if (ok)
            return out;
    }
    return {};
}

// Integer roots of a monic integer polynomial of degree >= 2, or nullopt when no
// prime with only simple roots was found (h not squarefree).
std::optional<std::vector<mpz_class>> integer_roots_monic(const std::vector<mpz_class>& h)
{
    ModularRoots mr = simple_roots_mod_prime(h);
    if (mr.prime == 0)
        return std::nullopt;
    std::vector<mpz_class> out;
    if (mr.roots.empty())
        return out;

    const mpz_class bound = root_bound(h);
    const mpz_class target = 2 * bound + 1;
    const auto dh = derivative(h);
    for (u64 r0 : mr.roots) {
        mpz_class m = mr.prime, r = static_cast<unsigned long>(r0), inv, fv, dv;
        while (m <= target) {
            m *= m;
            fv = eval_mod(h, r, m);
            dv = eval_mod(dh, r, m);
            if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0)
                throw std::logic_error("rational_roots: derivative not invertible during lifting");
            r = r - fv * inv;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
        }
        mpz_class y = r;
        if (2 * y > m)
            y -= m;
        if (abs(y) <= bound && eval(h, y) == 0)
            out.push_back(y);
    }
    return out;
}

void roots_of_integer_poly(std::vector<mpz_class> g, std::vector<mpq_class>& roots, bool allow_kernel)
{
    std::size_t low = 0;
    while (low < g.size() && g[low] == 0)
        ++low;
    if (low > 0) {
        roots.emplace_back(0);
        g.erase(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(low));
    }
    const std::size_t n = g.size() - 1;
    if (n == 0)
        return;
    if (n == 1) {
        mpq_class r(-g[0], g[1]);
        r.canonicalize();
        roots.push_back(r);
        return;
    }
    // h(y) = L^(n-1) g(y / L): monic, integer, roots L * (roots of g).
    const mpz_class lead = g[n];
    std::vector<mpz_class> h(n + 1);
    mpz_class pw = 1;
    for (std::size_t i = n; i-- > 0;) {
        h[i] = g[i] * pw;
        pw *= lead;
    }
    h[n] = 1;
    auto ys = integer_roots_monic(h);
    if (!ys) {
        if (!allow_kernel)
            throw std::logic_error("rational_roots: no prime with simple roots for a squarefree input");
        PolyQ kernel = squarefree_kernel(from_integer_coeffs(g));
        roots_of_integer_poly(primitive_integer_coeffs(kernel), roots, false);
        return;
    }
    for (const auto& y : *ys) {
        mpq_class r(y, lead);
        r.canonicalize();
        roots.push_back(r);
    }
}

} // namespace

std::vector<mpq_class> rational_roots(const PolyQ& p)
{
    if (p.is_zero())
        throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<mpq_class> roots;
    roots_of_integer_poly(primitive_integer_coeffs(p), roots, true);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<mpq_class> verified;
    for (const auto& r : roots) {
        if (p(r) != 0)
            throw std::logic_error("rational_roots: candidate " + r.get_str() + " failed exact evaluation");
        verified.push_back(r);
    }
    return verified;
}

} // namespace cmtors
