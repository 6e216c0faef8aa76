#include "cmtors/curve/curve.hpp"

#include <sstream>
#include <stdexcept>

#include "cmtors/errors.hpp"

namespace cmtors {

CurveQ::CurveQ(const mpq_class& A, const mpq_class& B) : A_(A), B_(B)
{
    if (4 * A_ * A_ * A_ + 27 * B_ * B_ == 0)
        throw SingularCurve("y^2 = x^3 + (" + A_.get_str() + ")x + (" + B_.get_str() + ") is singular");
}

PolyQ CurveQ::rhs() const
{
    return PolyQ({B_, A_, 0, 1});
}

mpq_class CurveQ::rhs(const mpq_class& x) const
{
    return (x * x + A_) * x + B_;
}

std::string CurveQ::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CurveQ& e)
{
    return os << "y^2 = " << e.rhs().to_string();
}

namespace {

struct LongInvariants {
    mpq_class b2, b4, b6, b8, c4, c6, disc;
};

LongInvariants invariants(const LongModel& m)
{
    LongInvariants v;
    v.b2 = m.a1 * m.a1 + 4 * m.a2;
    v.b4 = 2 * m.a4 + m.a1 * m.a3;
    v.b6 = m.a3 * m.a3 + 4 * m.a6;
    v.b8 = m.a1 * m.a1 * m.a6 + 4 * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 + m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
    v.c4 = v.b2 * v.b2 - 24 * v.b4;
    v.c6 = -v.b2 * v.b2 * v.b2 + 36 * v.b2 * v.b4 - 216 * v.b6;
    v.disc = -v.b2 * v.b2 * v.b8 - 8 * v.b4 * v.b4 * v.b4 - 27 * v.b6 * v.b6 + 9 * v.b2 * v.b4 * v.b6;
    return v;
}

} // namespace

mpq_class long_discriminant(const LongModel& m)
{
    return invariants(m).disc;
}

ShortModel short_from_long(const LongModel& m)
{
    LongInvariants v = invariants(m);
    if (v.disc == 0)
        throw SingularCurve("long Weierstrass model has zero discriminant");
    CurveQ curve(-27 * v.c4, -54 * v.c6);
    // X = 36 x + 3 b2, Y = 108 (2 y + a1 x + a3)
    CoordinateChange ch;
    ch.u = mpq_class(1, 6);
    ch.r = -v.b2 / 12;
    ch.s = -m.a1 / 2;
    ch.t = -(m.a1 * ch.r + m.a3) / 2;
    return {curve, ch};
}

std::pair<mpq_class, mpq_class> to_long_coordinates(const CoordinateChange& c, const mpq_class& x,
                                                    const mpq_class& y)
{
    mpq_class u2 = c.u * c.u;
    mpq_class xl = u2 * x + c.r;
    mpq_class yl = u2 * c.u * y + c.s * u2 * x + c.t;
    return {xl, yl};
}

DiscriminantJ discriminant_j(const CurveQ& e)
{
    mpq_class disc = -16 * (4 * e.A() * e.A() * e.A() + 27 * e.B() * e.B());
    mpq_class a4 = 4 * e.A();
    mpq_class j = -1728 * a4 * a4 * a4 / disc;
    return {disc, j};
}

CurveQ twist(const CurveQ& e, const mpq_class& d)
{
    if (d == 0)
        throw std::invalid_argument("twist: parameter must be nonzero");
    if (e.B() == 0)
        return CurveQ(d * e.A(), 0);
    if (e.A() == 0)
        return CurveQ(0, d * e.B());
    return CurveQ(d * d * e.A(), d * d * d * e.B());
}

CurveQ quadratic_twist_model(const CurveQ& e, const mpq_class& d)
{
    if (d == 0)
        throw std::invalid_argument("quadratic_twist_model: parameter must be nonzero");
    return CurveQ(d * d * e.A(), d * d * d * e.B());
}

} // namespace cmtors
