#include "cmtors/poly/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "cmtors/errors.hpp"

namespace cmtors {

PolyQ::PolyQ(std::vector<mpq_class> coeffs) : c_(std::move(coeffs))
{
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

PolyQ::PolyQ(std::initializer_list<mpq_class> coeffs) : PolyQ(std::vector<mpq_class>(coeffs)) {}

PolyQ PolyQ::constant(const mpq_class& c)
{
    return PolyQ({c});
}

PolyQ PolyQ::x()
{
    return PolyQ({0, 1});
}

PolyQ PolyQ::monomial(const mpq_class& c, unsigned degree)
{
    std::vector<mpq_class> v(degree + 1, mpq_class(0));
    v[degree] = c;
    return PolyQ(std::move(v));
}

void PolyQ::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

mpq_class PolyQ::coeff(unsigned i) const
{
    return i < c_.size() ? c_[i] : mpq_class(0);
}

const mpq_class& PolyQ::lead() const
{
    if (c_.empty())
        throw std::domain_error("PolyQ: zero polynomial has no leading coefficient");
    return c_.back();
}

mpq_class PolyQ::operator()(const mpq_class& v) const
{
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

QuadElem PolyQ::operator()(const QuadElem& v) const
{
    QuadElem acc(0, 0, v.field());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

PolyQ PolyQ::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<mpq_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return PolyQ(std::move(d));
}

PolyQ PolyQ::monic() const
{
    if (is_zero())
        return {};
    PolyQ r = *this;
    mpq_class l = lead();
    for (auto& c : r.c_)
        c /= l;
    return r;
}

PolyQ PolyQ::scale_argument(const mpq_class& s) const
{
    PolyQ r = *this;
    mpq_class pw = 1;
    for (auto& c : r.c_) {
        c *= pw;
        pw *= s;
    }
    r.trim();
    return r;
}

PolyQ PolyQ::operator-() const
{
    PolyQ r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    mpq_class t;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            r[i + j] += t;
        }
    }
    PolyQ out;
    out.c_ = std::move(r);
    out.trim();
    return out;
}

PolyQ& PolyQ::operator*=(const PolyQ& o)
{
    *this = *this * o;
    return *this;
}

PolyQ& PolyQ::operator*=(const mpq_class& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

std::string PolyQ::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = c_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        mpq_class mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        bool unit = mag == 1 && i > 0;
        if (!unit)
            os << mag.get_str();
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyQ& p)
{
    return os << p.to_string();
}

PolyQ pow(const PolyQ& p, unsigned e)
{
    PolyQ r = PolyQ::constant(1), b = p;
    while (e) {
        if (e & 1)
            r *= b;
        e >>= 1;
        if (e)
            b *= b;
    }
    return r;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& num, const PolyQ& den)
{
    if (den.is_zero())
        throw std::domain_error("divmod: division by the zero polynomial");
    if (num.degree() < den.degree())
        return {PolyQ(), num};
    std::vector<mpq_class> rem = num.coeffs();
    const auto& dc = den.coeffs();
    const std::size_t dd = dc.size() - 1;
    std::vector<mpq_class> q(rem.size() - dd, mpq_class(0));
    mpq_class inv_lead = 1 / dc.back();
    mpq_class t;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpq_class f = rem[k + dd] * inv_lead;
        if (f == 0)
            continue;
        q[k] = f;
        for (std::size_t j = 0; j <= dd; ++j) {
            mpq_mul(t.get_mpq_t(), f.get_mpq_t(), dc[j].get_mpq_t());
            rem[k + j] -= t;
        }
    }
    rem.resize(dd);
    return {PolyQ(std::move(q)), PolyQ(std::move(rem))};
}

PolyQ poly_exact_div(const PolyQ& num, const PolyQ& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw InexactDivision("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
    return q;
}

PolyQ gcd(PolyQ a, PolyQ b)
{
    while (!b.is_zero()) {
        PolyQ r = divmod(a, b).second;
        // Keep coefficient growth in check.
        if (!r.is_zero())
            r = from_integer_coeffs(primitive_integer_coeffs(r));
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyQ squarefree_kernel(const PolyQ& p)
{
    if (p.degree() <= 0)
        return p.monic();
    PolyQ g = gcd(p, p.derivative());
    return poly_exact_div(p, g).monic();
}

std::vector<mpz_class> primitive_integer_coeffs(const PolyQ& p)
{
    const auto& c = p.coeffs();
    mpz_class den = 1;
    for (const auto& q : c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> out(c.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = c[i].get_num() * (den / c[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content == 0)
        return out;
    if (!out.empty() && out.back() < 0)
        content = -content;
    for (auto& v : out)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

PolyQ from_integer_coeffs(const std::vector<mpz_class>& c)
{
    std::vector<mpq_class> q;
    q.reserve(c.size());
    for (const auto& v : c)
        q.emplace_back(v);
    return PolyQ(std::move(q));
}

} // namespace cmtors
