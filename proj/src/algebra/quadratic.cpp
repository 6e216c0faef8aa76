#include "cmtors/algebra/quadratic.hpp"

#include <sstream>
#include <stdexcept>

#include "cmtors/algebra/power_free.hpp"

namespace cmtors {

QuadField::QuadField(const mpz_class& d) : d_(d)
{
    if (d == 0 || d == 1)
        throw std::invalid_argument("QuadField: radicand must not be 0 or 1");
    if (!is_squarefree(d))
        throw std::invalid_argument("QuadField: radicand " + d.get_str() + " is not squarefree");
}

QuadElem::QuadElem(const mpq_class& a, const mpq_class& b, const QuadField& field)
    : a_(a), b_(b), d_(field.d())
{
}

QuadField QuadElem::field() const
{
    return QuadField(d_, QuadField::Unchecked{});
}

void QuadElem::check_same_field(const QuadElem& o) const
{
    if (d_ != o.d_)
        throw std::invalid_argument("QuadElem: operands live in different quadratic fields");
}

QuadElem QuadElem::conj() const
{
    QuadElem r = *this;
    r.b_ = -r.b_;
    return r;
}

mpq_class QuadElem::norm() const
{
    return a_ * a_ - mpq_class(d_) * b_ * b_;
}

mpq_class QuadElem::trace() const
{
    return 2 * a_;
}

QuadElem QuadElem::inverse() const
{
    mpq_class n = norm();
    if (n == 0)
        throw std::domain_error("QuadElem: inverse of zero");
    QuadElem r = conj();
    r.a_ /= n;
    r.b_ /= n;
    return r;
}

QuadElem QuadElem::operator-() const
{
    QuadElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o)
{
    check_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o)
{
    check_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o)
{
    check_same_field(o);
    mpq_class a = a_ * o.a_ + mpq_class(d_) * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o)
{
    return *this *= o.inverse();
}

QuadElem& QuadElem::operator+=(const mpq_class& q)
{
    a_ += q;
    return *this;
}

QuadElem& QuadElem::operator-=(const mpq_class& q)
{
    a_ -= q;
    return *this;
}

QuadElem& QuadElem::operator*=(const mpq_class& q)
{
    a_ *= q;
    b_ *= q;
    return *this;
}

QuadElem& QuadElem::operator/=(const mpq_class& q)
{
    if (q == 0)
        throw std::domain_error("QuadElem: division by zero");
    a_ /= q;
    b_ /= q;
    return *this;
}

bool QuadElem::operator==(const QuadElem& o) const
{
    return d_ == o.d_ && a_ == o.a_ && b_ == o.b_;
}

std::string QuadElem::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadElem& z)
{
    os << z.a().get_str();
    if (z.b() != 0) {
        os << (z.b() < 0 ? " - " : " + ") << mpq_class(abs(z.b())).get_str()
           << "*sqrt(" << z.d().get_str() << ")";
    }
    return os;
}

namespace {

QuadElem normalize_sign(QuadElem g)
{
    if (g.b() < 0 || (g.b() == 0 && g.a() < 0))
        return -g;
    return g;
}

} // namespace

std::optional<QuadElem> quad_square_root(const QuadElem& z)
{
    const QuadField field = z.field();
    if (z.is_zero())
        return z;
    if (z.is_rational()) {
        // gamma = u rational, or gamma = v sqrt(d) with d v^2 = a.
        if (auto u = rational_sqrt(z.a()))
            return QuadElem(*u, 0, field);
        if (auto v = rational_sqrt(z.a() / mpq_class(z.d())))
            return QuadElem(0, *v, field);
        return std::nullopt;
    }
    auto m = rational_sqrt(z.norm());
    if (!m)
        return std::nullopt;
    for (int sign : {1, -1}) {
        mpq_class u2 = (z.a() + sign * *m) / 2;
        if (u2 == 0)
            continue;
        auto u = rational_sqrt(u2);
        if (!u)
            continue;
        QuadElem g(*u, z.b() / (2 * *u), field);
        if (g * g == z)
            return normalize_sign(g);
    }
    return std::nullopt;
}

std::optional<QuadElem> quad_square_root(const mpq_class& z, const QuadField& field)
{
    return quad_square_root(QuadElem(z, 0, field));
}

RationalSquareClass rational_square_class(const mpq_class& z)
{
    if (z == 0)
        throw std::invalid_argument("rational_square_class: zero has no square class");
    mpz_class d = squarefree_part(z);
    auto g = rational_sqrt(z / mpq_class(d));
    if (!g)
        throw std::logic_error("rational_square_class: cofactor is not a square");
    return {d, *g};
}

std::optional<SquareClass> rational_square_class(const QuadElem& z)
{
    if (z.is_zero())
        throw std::invalid_argument("rational_square_class: zero has no square class");
    const QuadField field = z.field();
    if (z.is_rational()) {
        auto rc = rational_square_class(z.a());
        return SquareClass{rc.d, QuadElem(rc.gamma, 0, field)};
    }
    // z = d' gamma^2 forces norm(z) = (d' norm(gamma))^2.
    auto m = rational_sqrt(z.norm());
    if (!m)
        return std::nullopt;
    std::optional<SquareClass> best;
    for (int sign : {1, -1}) {
        mpq_class half = (z.a() + sign * *m) / 2;
        if (half == 0)
            continue;
        mpz_class cand = squarefree_part(half);
        auto g = quad_square_root(z / mpq_class(cand));
        if (!g)
            continue;
        bool better = !best || abs(cand) < abs(best->d) || (abs(cand) == abs(best->d) && cand > best->d);
        if (better)
            best = SquareClass{cand, *g};
    }
    return best;
}

} // namespace cmtors
