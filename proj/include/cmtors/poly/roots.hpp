#pragma once

#include <utility>
#include <vector>

#include "cmtors/algebra/quadratic.hpp"
#include "cmtors/poly/poly.hpp"

namespace cmtors {

// All rational roots, ascending, each verified by exact evaluation.
//
// Candidates come from the rational-root theorem applied to the monic
// transform L^(n-1) p(y / L) (L the leading coefficient of the primitive
// integer scaling): every rational root becomes an integer root y bounded by a
// Fujiwara bound. Those integer roots are found modulo a prime at which all
// roots are simple, Hensel-lifted past twice the bound and checked exactly.
// This avoids factoring the constant term, which for division polynomials of
// large twists runs to hundreds of digits.
std::vector<mpq_class> rational_roots(const PolyQ& p);

struct SmallFactor {
    PolyQ factor;  // monic, irreducible over Q, degree 1 or 2
    unsigned multiplicity = 1;

    bool operator==(const SmallFactor&) const = default;
};

// Every monic irreducible factor of degree <= 2 over Q, with multiplicity.
// Linear factors come first (ascending root), then quadratics.
//
// Quadratic factors are proposed from pairs of numerically isolated complex
// roots and emitted only after exact division succeeds. Each approximation
// carries a certified inclusion radius; precision is raised until the radii
// are disjoint and small enough that a true factor's integer trace/norm
// (scaled by the leading coefficient) cannot be rounded wrongly. If that does
// not happen within the precision budget an exhaustive divisor search takes
// over. Requires degree(p) <= 64.
std::vector<SmallFactor> small_irreducible_factors(const PolyQ& p);

// Roots of the monic irreducible quadratic q: the squarefree part of its
// discriminant and the pair (-b/2 + s sqrt(d), -b/2 - s sqrt(d)), s > 0.
std::pair<QuadElem, QuadElem> quadratic_roots(const PolyQ& q);

mpz_class discriminant_class(const PolyQ& quadratic);

// Roots of p lying in Q(sqrt d) \ Q. Rational roots are reported by
// rational_roots.
std::vector<QuadElem> roots_in_quadratic_field(const PolyQ& p, const QuadField& field);

} // namespace cmtors
