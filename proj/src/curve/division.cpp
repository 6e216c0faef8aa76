#include "cmtors/curve/division.hpp"

#include <stdexcept>

namespace cmtors {

DivisionPolynomials::DivisionPolynomials(const CurveQ& e) : curve_(e), f_(e.rhs()), f2_(f_ * f_) {}

const PolyQ& DivisionPolynomials::classical(unsigned n)
{
    if (n >= classical_.size())
        classical_.resize(n + 1);
    if (classical_[n])
        return *classical_[n];

    const mpq_class& A = curve_.A();
    const mpq_class& B = curve_.B();
    PolyQ p;
    switch (n) {
    case 0:
        break;
    case 1:
        p = PolyQ::constant(1);
        break;
    case 2:
        p = PolyQ::constant(2);
        break;
    case 3:
        p = PolyQ({-A * A, 12 * B, 6 * A, 0, 3});
        break;
    case 4:
        p = PolyQ({-8 * B * B - A * A * A, -4 * A * B, -5 * A * A, 20 * B, 5 * A, 0, 1}) * mpq_class(4);
        break;
    default: {
        const unsigned m = n / 2;
        if (n % 2 == 1) {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3, with y^4 = f^2
            // attached to whichever product carries the even indices.
            PolyQ t1 = PolyQ(classical(m + 2)) * pow(classical(m), 3);
            PolyQ t2 = PolyQ(classical(m - 1)) * pow(classical(m + 1), 3);
            if (m % 2 == 0)
                t1 *= f2_;
            else
                t2 *= f2_;
            p = t1 - t2;
        } else {
            // psi_{2m} = psi_m / (2y) (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2)
            PolyQ a = PolyQ(classical(m + 2)) * pow(classical(m - 1), 2);
            PolyQ b = PolyQ(classical(m - 2)) * pow(classical(m + 1), 2);
            p = PolyQ(classical(m)) * (a - b) * mpq_class(1, 2);
        }
    }
    }
    // The recursive calls above may have resized the cache.
    if (n >= classical_.size())
        classical_.resize(n + 1);
    classical_[n] = std::move(p);
    return *classical_[n];
}

PolyQ DivisionPolynomials::x_part(unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("x_part: n must be at least 2");
    PolyQ p = classical(n);
    if (n % 2 == 0)
        p = p * f_ * mpq_class(1, 2);
    return p;
}

const PolyQ& DivisionPolynomials::primitive(unsigned n)
{
    if (n < 2)
        throw std::invalid_argument("primitive: n must be at least 2");
    if (auto it = primitive_.find(n); it != primitive_.end())
        return it->second;
    PolyQ p = x_part(n);
    for (unsigned m = 2; m < n; ++m) {
        if (n % m == 0)
            p = poly_exact_div(p, primitive(m));
    }
    return primitive_.emplace(n, std::move(p)).first->second;
}

DivisionPoly primitive_division_poly(const CurveQ& e, unsigned n)
{
    if (n < 2 || n > 16)
        throw std::invalid_argument("primitive_division_poly: n must lie in 2..16");
    DivisionPolynomials dp(e);
    return {n, dp.primitive(n)};
}

} // namespace cmtors
