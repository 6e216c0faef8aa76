#pragma once

#include <ostream>
#include <string>

#include <gmpxx.h>

#include "cmtors/poly/poly.hpp"

namespace cmtors {

// y^2 = x^3 + A x + B over Q with 4A^3 + 27B^2 != 0.
class CurveQ {
public:
    // Throws SingularCurve.
    CurveQ(const mpq_class& A, const mpq_class& B);

    const mpq_class& A() const { return A_; }
    const mpq_class& B() const { return B_; }

    // f(x) = x^3 + A x + B
    PolyQ rhs() const;
    mpq_class rhs(const mpq_class& x) const;

    bool operator==(const CurveQ&) const = default;
    std::string to_string() const;

private:
    mpq_class A_, B_;
};

std::ostream& operator<<(std::ostream& os, const CurveQ& e);

struct LongModel {
    mpq_class a1, a2, a3, a4, a6;
};

// x_long = u^2 x + r, y_long = u^3 y + s u^2 x + t for (x, y) on the short model.
struct CoordinateChange {
    mpq_class u, r, s, t;
};

struct ShortModel {
    CurveQ curve;
    CoordinateChange change;
};

mpq_class long_discriminant(const LongModel& m);

// (A, B) = (-27 c4, -54 c6). Throws SingularCurve.
ShortModel short_from_long(const LongModel& m);

// Image on the long model of a point on the short model.
std::pair<mpq_class, mpq_class> to_long_coordinates(const CoordinateChange& c, const mpq_class& x,
                                                    const mpq_class& y);

struct DiscriminantJ {
    mpq_class discriminant;
    mpq_class j;
};

// Delta = -16 (4A^3 + 27B^2), j = -1728 (4A)^3 / Delta
DiscriminantJ discriminant_j(const CurveQ& e);

// The d-twist within the curve's shape family: (d^2 A, d^3 B) in general,
// (d A, 0) when j = 1728 and (0, d B) when j = 0.
CurveQ twist(const CurveQ& e, const mpq_class& d);

// E^[d]: y^2 = x^3 + A d^2 x + B d^3, isomorphic to E over Q(sqrt d) via
// (x, y) -> (d x, d^(3/2) y).
CurveQ quadratic_twist_model(const CurveQ& e, const mpq_class& d);

} // namespace cmtors
