#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cmtors/curve/curve.hpp"
#include "cmtors/poly/poly.hpp"

namespace cmtors {

struct DivisionPoly {
    unsigned n = 2;
    PolyQ poly;
};

// Division polynomials of one curve, computed on demand and memoized.
//
// classical(n) is the x-polynomial P_n with psi_n = P_n for odd n and
// psi_n = y P_n for even n (so P_2 = 2). x_part(n) has as roots exactly the
// x-coordinates of E[n] \ {O}: P_n for odd n, f P_n / 2 for even n.
// primitive(n) divides x_part(n) by primitive(m) for every divisor 1 < m < n;
// its roots are the x-coordinates of the points of exact order n.
class DivisionPolynomials {
public:
    explicit DivisionPolynomials(const CurveQ& e);

    const CurveQ& curve() const { return curve_; }
    const PolyQ& classical(unsigned n);
    PolyQ x_part(unsigned n);
    const PolyQ& primitive(unsigned n);

private:
    CurveQ curve_;
    PolyQ f_, f2_;
    std::vector<std::optional<PolyQ>> classical_;
    std::map<unsigned, PolyQ> primitive_;
};

// Primitive n-division polynomial for 2 <= n <= 16. Psi_2 = x^3 + A x + B and
// Psi_4 carries leading coefficient 2.
DivisionPoly primitive_division_poly(const CurveQ& e, unsigned n);

} // namespace cmtors
