#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace cmtors::detail {

struct ComplexApprox {
    mpf_class re, im;
    mpf_class radius;  // a true root lies within this distance
};

// Simultaneous approximations of all complex roots of a squarefree integer
// polynomial (Aberth-Ehrlich iteration at `prec` bits). On success the
// inclusion discs n |p(z)| / |p'(z)| (widened by a floating-point error bound)
// are pairwise disjoint, so each disc holds exactly one root. Returns nullopt
// when the iteration does not settle or the discs overlap.
std::optional<std::vector<ComplexApprox>> isolate_complex_roots(const std::vector<mpz_class>& coeffs,
                                                                 unsigned long prec);

} // namespace cmtors::detail
