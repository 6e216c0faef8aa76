#include <algorithm>
#include <set>
#include <stdexcept>

#include "cmtors/algebra/factor.hpp"
#include "cmtors/algebra/power_free.hpp"
#include "cmtors/errors.hpp"
#include "cmtors/poly/roots.hpp"
#include "complex_roots.hpp"

namespace cmtors {

namespace {

constexpr int kMaxDegree = 64;

bool divides(const PolyQ& num, const PolyQ& den)
{
    return divmod(num, den).second.is_zero();
}

mpz_class round_nearest(const mpf_class& v)
{
    mpf_class t = v + 0.5;
    mpf_class f = floor(t);
    return mpz_class(f);
}

std::vector<mpz_class> divisors(const mpz_class& n)
{
    Factorization f = factorize(abs(n));
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = divs.size();
        mpz_class pw = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pw *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

void add_unique(std::vector<PolyQ>& out, const PolyQ& q)
{
    if (std::find(out.begin(), out.end(), q) == out.end())
        out.push_back(q);
}

// Quadratic factors from certified root approximations. nullopt when the
// precision budget is exhausted before the certificate holds.
std::optional<std::vector<PolyQ>> quadratic_factors_numeric(const std::vector<mpz_class>& g)
{
    const PolyQ gq = from_integer_coeffs(g);
    const mpz_class& lead = g.back();
    std::size_t max_bits = 0;
    for (const auto& v : g)
        max_bits = std::max(max_bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    unsigned long prec = 128 + 3 * max_bits + 8 * g.size();

    for (int attempt = 0; attempt < 5; ++attempt, prec *= 2) {
        auto roots = detail::isolate_complex_roots(g, prec);
        if (!roots)
            continue;
        const std::size_t n = roots->size();
        const mpf_class L(lead, prec);
        mpf_class quarter(0.25, prec);
        bool certified = true;
        std::vector<PolyQ> found;
        for (std::size_t i = 0; i < n && certified; ++i) {
            const auto& zi = (*roots)[i];
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto& zj = (*roots)[j];
                mpf_class s_re(0, prec), s_im(0, prec), p_re(0, prec), p_im(0, prec);
                s_re = L * (zi.re + zj.re);
                s_im = L * (zi.im + zj.im);
                p_re = L * (zi.re * zj.re - zi.im * zj.im);
                p_im = L * (zi.re * zj.im + zi.im * zj.re);
                mpf_class ai(0, prec), aj(0, prec);
                ai = sqrt(zi.re * zi.re + zi.im * zi.im);
                aj = sqrt(zj.re * zj.re + zj.im * zj.im);
                mpf_class err_s(0, prec), err_p(0, prec);
                err_s = abs(L) * (zi.radius + zj.radius);
                err_p = abs(L) * (ai * zj.radius + (aj + zj.radius) * zi.radius);
                if (err_s >= quarter || err_p >= quarter) {
                    certified = false;
                    break;
                }
                // True trace and norm of a rational factor are real.
                if (abs(s_im) > 0.5 || abs(p_im) > 0.5)
                    continue;
                mpz_class S = round_nearest(s_re), P = round_nearest(p_re);
                PolyQ cand = from_integer_coeffs({P, -S, lead});
                if (cand.degree() != 2)
                    continue;
                cand = cand.monic();
                if (divides(gq, cand))
                    add_unique(found, cand);
            }
        }
        if (certified)
            return found;
    }
    return std::nullopt;
}

// Every primitive integer factor c x^2 + b x + e of g has c | lead, e | g(0) and
// q(1) = c + b + e | g(1); g has no rational roots here so g(0), g(1) != 0.
std::vector<PolyQ> quadratic_factors_exhaustive(const std::vector<mpz_class>& g)
{
    const PolyQ gq = from_integer_coeffs(g);
    mpz_class g1 = 0;
    for (const auto& v : g)
        g1 += v;
    std::vector<PolyQ> found;
    auto lead_divs = divisors(g.back());
    auto const_divs = divisors(g.front());
    auto one_divs = divisors(g1);
    for (const auto& c : lead_divs) {
        for (const auto& e0 : const_divs) {
            for (int es : {1, -1}) {
                mpz_class e = es * e0;
                for (const auto& t0 : one_divs) {
                    for (int ts : {1, -1}) {
                        mpz_class b = ts * t0 - c - e;
                        PolyQ cand = from_integer_coeffs({e, b, c});
                        if (!rational_roots(cand).empty())
                            continue;
                        cand = cand.monic();
                        if (divides(gq, cand))
                            add_unique(found, cand);
                    }
                }
            }
        }
    }
    return found;
}

} // namespace

std::vector<SmallFactor> small_irreducible_factors(const PolyQ& p)
{
    if (p.is_zero())
        throw std::invalid_argument("small_irreducible_factors: zero polynomial");
    if (p.degree() > kMaxDegree)
        throw std::invalid_argument("small_irreducible_factors: degree above 64");

    std::vector<SmallFactor> out;
    PolyQ rem = p.monic();
    for (const auto& r : rational_roots(p)) {
        PolyQ lin({-r, 1});
        unsigned mult = 0;
        while (rem.degree() >= 1) {
            auto [q, rr] = divmod(rem, lin);
            if (!rr.is_zero())
                break;
            rem = std::move(q);
            ++mult;
        }
        out.push_back({lin, mult});
    }
    if (rem.degree() < 2 || rem.degree() == 3)
        return out;  // constant, linear, or an irreducible cubic

    std::vector<PolyQ> quads;
    if (rem.degree() == 2) {
        quads.push_back(rem.monic());
    } else {
        PolyQ kernel = squarefree_kernel(rem);
        auto g = primitive_integer_coeffs(kernel);
        if (kernel.degree() == 2) {
            quads.push_back(kernel);
        } else if (kernel.degree() >= 4) {
            auto numeric = quadratic_factors_numeric(g);
            quads = numeric ? *numeric : quadratic_factors_exhaustive(g);
        }
    }
    std::sort(quads.begin(), quads.end(), [](const PolyQ& a, const PolyQ& b) {
        if (a.coeff(1) != b.coeff(1))
            return a.coeff(1) < b.coeff(1);
        return a.coeff(0) < b.coeff(0);
    });
    for (const auto& q : quads) {
        unsigned mult = 0;
        while (rem.degree() >= 2) {
            auto [qq, rr] = divmod(rem, q);
            if (!rr.is_zero())
                break;
            rem = std::move(qq);
            ++mult;
        }
        if (mult == 0)
            throw std::logic_error("small_irreducible_factors: verified factor failed to divide");
        out.push_back({q, mult});
    }
    return out;
}

mpz_class discriminant_class(const PolyQ& quadratic)
{
    if (quadratic.degree() != 2)
        throw std::invalid_argument("discriminant_class: expected a quadratic");
    mpq_class disc = quadratic.coeff(1) * quadratic.coeff(1) - 4 * quadratic.coeff(0) * quadratic.coeff(2);
    if (disc == 0)
        throw std::invalid_argument("discriminant_class: repeated root");
    return squarefree_part(disc);
}

std::pair<QuadElem, QuadElem> quadratic_roots(const PolyQ& q)
{
    PolyQ m = q.monic();
    mpz_class d = discriminant_class(m);
    if (d == 1)
        throw std::invalid_argument("quadratic_roots: quadratic splits over Q");
    mpq_class disc = m.coeff(1) * m.coeff(1) - 4 * m.coeff(0);
    auto s = rational_sqrt(disc / mpq_class(d));
    if (!s)
        throw std::logic_error("quadratic_roots: discriminant class mismatch");
    QuadField field(d);
    mpq_class a = -m.coeff(1) / 2, b = *s / 2;
    return {QuadElem(a, b, field), QuadElem(a, -b, field)};
}

std::vector<QuadElem> roots_in_quadratic_field(const PolyQ& p, const QuadField& field)
{
    std::vector<QuadElem> out;
    for (const auto& f : small_irreducible_factors(p)) {
        if (f.factor.degree() != 2 || discriminant_class(f.factor) != field.d())
            continue;
        auto [r1, r2] = quadratic_roots(f.factor);
        out.push_back(r1);
        out.push_back(r2);
    }
    return out;
}

} // namespace cmtors
