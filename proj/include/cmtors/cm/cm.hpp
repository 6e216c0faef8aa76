#pragma once

#include <array>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "cmtors/algebra/factor.hpp"
#include "cmtors/curve/curve.hpp"

namespace cmtors {

// One of the thirteen Q-isomorphism classes of CM curves over Q, with its
// reference model E_cm : y^2 = x^3 + A_cm x + B_cm.
struct CmClass {
    int cm = 0;         // D f^2
    int D = 0;          // absolute value of the fundamental discriminant
    int f = 1;          // conductor
    mpq_class j;
    mpz_class A, B;
    unsigned nE = 2;    // 6 for j = 0, 4 for j = 1728, otherwise 2
};

struct CMInvariants {
    int cm = 0;
    mpz_class k = 1;    // canonical nE-power-free representative

    bool operator==(const CMInvariants&) const = default;
};

// Table order: 3, 12, 27, 4, 16, 7, 28, 8, 11, 19, 43, 67, 163.
const std::array<CmClass, 13>& cm_classes();

// Throws std::invalid_argument for an unknown cm.
const CmClass& cm_class(int cm);

bool is_cm_value(int cm);

std::optional<CmClass> detect_cm(const mpq_class& j);

// Absent for non-CM curves. Throws FactorizationFailure.
std::optional<CMInvariants> cm_invariants(const CurveQ& e, const FactorOptions& opts = {});

CurveQ reference_curve(int cm);

// E_cm^k, the k-twist of the reference model.
CurveQ curve_from_invariants(const CMInvariants& inv);

} // namespace cmtors
