#include "complex_roots.hpp"

#include <cmath>

namespace cmtors::detail {

namespace {

struct Cx {
    mpf_class re, im;
};

class Arith {
public:
    explicit Arith(unsigned long prec) : prec_(prec) {}

    mpf_class num(long v = 0) const { return mpf_class(v, prec_); }
    mpf_class num(const mpz_class& v) const { return mpf_class(v, prec_); }
    Cx zero() const { return {num(), num()}; }

    Cx add(const Cx& a, const Cx& b) const { return {mk(a.re + b.re), mk(a.im + b.im)}; }
    Cx sub(const Cx& a, const Cx& b) const { return {mk(a.re - b.re), mk(a.im - b.im)}; }
    Cx mul(const Cx& a, const Cx& b) const
    {
        return {mk(a.re * b.re - a.im * b.im), mk(a.re * b.im + a.im * b.re)};
    }
    mpf_class norm2(const Cx& a) const { return mk(a.re * a.re + a.im * a.im); }
    mpf_class abs(const Cx& a) const { return mk(sqrt(norm2(a))); }
    bool is_zero(const Cx& a) const { return a.re == 0 && a.im == 0; }
    Cx div(const Cx& a, const Cx& b) const
    {
        mpf_class n = norm2(b);
        return {mk((a.re * b.re + a.im * b.im) / n), mk((a.im * b.re - a.re * b.im) / n)};
    }
    Cx inv(const Cx& b) const
    {
        mpf_class n = norm2(b);
        return {mk(b.re / n), mk(-b.im / n)};
    }

    // 2^e at working precision
    mpf_class pow2(long e) const
    {
        mpf_class r = num(1);
        if (e >= 0)
            mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<unsigned long>(e));
        else
            mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<unsigned long>(-e));
        return r;
    }

    unsigned long prec() const { return prec_; }

private:
    template <class E>
    mpf_class mk(const E& e) const
    {
        mpf_class r(0, prec_);
        r = e;
        return r;
    }

    unsigned long prec_;
};

struct Eval {
    Cx p, dp;
};

Eval horner(const Arith& ar, const std::vector<mpf_class>& c, const Cx& z)
{
    Cx p = ar.zero(), dp = ar.zero();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = ar.add(ar.mul(dp, z), p);
        p = ar.mul(p, z);
        p.re = p.re + *it;
    }
    return {p, dp};
}

// Upper bound on log2 of the root moduli (Fujiwara), from coefficient bit sizes.
long log2_root_bound(const std::vector<mpz_class>& c)
{
    const std::size_t n = c.size() - 1;
    const double lead_bits = static_cast<double>(mpz_sizeinbase(c[n].get_mpz_t(), 2)) - 1.0;
    double best = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        if (c[n - i] == 0)
            continue;
        double bits = static_cast<double>(mpz_sizeinbase(c[n - i].get_mpz_t(), 2));
        best = std::max(best, (bits - lead_bits) / static_cast<double>(i));
    }
    return static_cast<long>(std::ceil(best)) + 2;
}

} // namespace

std::optional<std::vector<ComplexApprox>> isolate_complex_roots(const std::vector<mpz_class>& coeffs,
                                                                 unsigned long prec)
{
    const std::size_t n = coeffs.size() - 1;
    Arith ar(prec);
    std::vector<mpf_class> c;
    std::vector<mpf_class> cabs;
    for (const auto& v : coeffs) {
        c.push_back(ar.num(v));
        cabs.push_back(ar.num(mpz_class(abs(v))));
    }

    // Starting points on a circle of radius at the root bound, off the axes.
    const mpf_class radius = ar.pow2(log2_root_bound(coeffs) - 1);
    std::vector<Cx> z(n);
    const double two_pi = 6.283185307179586;
    for (std::size_t k = 0; k < n; ++k) {
        double ang = two_pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
        z[k] = {ar.num(), ar.num()};
        z[k].re = radius * mpf_class(std::cos(ang), prec);
        z[k].im = radius * mpf_class(std::sin(ang), prec);
    }

    const mpf_class tol2 = ar.pow2(-2 * static_cast<long>(prec * 3 / 4));
    const mpf_class one = ar.num(1);
    const std::size_t max_iter = 400 + 20 * n;
    unsigned settled = 0;
    for (std::size_t iter = 0; iter < max_iter && settled < 3; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            Eval e = horner(ar, c, z[i]);
            if (ar.is_zero(e.p))
                continue;
            if (ar.is_zero(e.dp)) {
                z[i].re = z[i].re + ar.pow2(-static_cast<long>(prec / 4)) * (one + ar.abs(z[i]));
                converged = false;
                continue;
            }
            Cx w = ar.div(e.p, e.dp);
            Cx s = ar.zero();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                Cx diff = ar.sub(z[i], z[j]);
                if (ar.is_zero(diff))
                    continue;
                s = ar.add(s, ar.inv(diff));
            }
            Cx denom = ar.sub(Cx{ar.num(1), ar.num()}, ar.mul(w, s));
            Cx delta = ar.is_zero(denom) ? w : ar.div(w, denom);
            z[i] = ar.sub(z[i], delta);
            mpf_class scale = ar.norm2(z[i]);
            if (scale < one)
                scale = one;
            if (ar.norm2(delta) > tol2 * scale)
                converged = false;
        }
        settled = converged ? settled + 1 : 0;
    }
    if (settled < 3)
        return std::nullopt;

    // Inclusion radii: each disc |w - z| <= n |p(z)| / |p'(z)| contains a root.
    // Floating error in evaluating p and p' is bounded by slack * sum |c_k| |z|^k.
    const mpf_class slack = ar.num(static_cast<long>(8 * (n + 1))) * ar.pow2(-static_cast<long>(prec));
    std::vector<ComplexApprox> out;
    for (std::size_t i = 0; i < n; ++i) {
        Eval e = horner(ar, c, z[i]);
        mpf_class az = ar.abs(z[i]);
        mpf_class s0 = ar.num(), s1 = ar.num();
        for (auto it = cabs.rbegin(); it != cabs.rend(); ++it) {
            s1 = s1 * az + s0;
            s0 = s0 * az + *it;
        }
        mpf_class perr = slack * s0, derr = slack * s1;
        mpf_class dmag = ar.abs(e.dp) - derr;
        if (dmag <= 0)
            return std::nullopt;
        mpf_class r(0, prec);
        r = ar.num(static_cast<long>(n)) * (ar.abs(e.p) + perr) / dmag;
        out.push_back({z[i].re, z[i].im, r});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Cx diff = ar.sub(z[i], z[j]);
            if (ar.abs(diff) <= out[i].radius + out[j].radius)
                return std::nullopt;
        }
    }
    return out;
}

} // namespace cmtors::detail
