#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "cmtors/classifier/classifier.hpp"
#include "cmtors/curve/curve.hpp"
#include "cmtors/curve/division.hpp"
#include "cmtors/curve/point.hpp"

namespace cmtors {

// Number of points of exact order n found over the ambient field, n in {2, 3, 4, 5, 7}.
struct TorsionCounts {
    std::map<unsigned, unsigned> count;

    unsigned operator[](unsigned n) const
    {
        auto it = count.find(n);
        return it == count.end() ? 0 : it->second;
    }
    bool operator==(const TorsionCounts&) const = default;
};

// The group in Phi^cm(2) with these counts. Throws GroupOutsidePhi2.
TorsionGroup group_from_counts(const TorsionCounts& c);

// Table-free torsion computations for one CM curve, sharing division
// polynomials and counts between queries. Not thread-safe; use one instance per
// thread.
class CurveOracle {
public:
    // Throws NotCM.
    explicit CurveOracle(const CurveQ& e);

    const CurveQ& curve() const { return curve_; }
    const CMInvariants& invariants() const { return inv_; }

    // Rational points of exact order n, n in {2, 3, 4, 5, 7}.
    const std::vector<PointQ>& rational_points(unsigned n);
    TorsionCounts counts_over_Q();
    TorsionGroup torsion_over_Q();

    // Points over Q(sqrt d) of exact order n found by searching the roots of
    // Psi_n in Q(sqrt d) directly (rational and quadratic x).
    std::vector<PointK> points_over(const QuadField& k, unsigned n);

    // Counts over Q(sqrt d): 2- and 4-torsion by direct root search, odd orders
    // through E(Q(sqrt d))[n] = E(Q)[n] + E^[d](Q)[n].
    TorsionCounts counts_over(const mpz_class& d);
    TorsionGroup torsion_over(const mpz_class& d);

    // Every quadratic field over which the torsion strictly grows.
    GrowthReport growth();

    // Candidate fields before confirmation, ascending in field order.
    std::vector<mpz_class> growth_candidates();

private:
    CurveQ curve_;
    CMInvariants inv_;
    DivisionPolynomials dp_;
    const std::vector<mpq_class>& roots(unsigned n);

    std::map<unsigned, std::vector<mpq_class>> roots_;
    std::map<unsigned, std::vector<PointQ>> rational_;
};

// Throws NotCM.
TorsionGroup torsion_over_Q_direct(const CurveQ& e);
// Throws NotCM, GroupOutsidePhi2; d squarefree, not 0 or 1.
TorsionGroup torsion_over_quadratic_direct(const CurveQ& e, const mpz_class& d);
GrowthReport enumerate_growth_fields(const CurveQ& e);

} // namespace cmtors
