#include "cmtors/cm/cm.hpp"

#include <stdexcept>

#include "cmtors/algebra/power_free.hpp"

namespace cmtors {

namespace {

mpz_class pw(long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

std::array<CmClass, 13> build_table()
{
    auto row = [](int cm, int D, int f, mpz_class j, const char* A, const char* B) {
        CmClass c;
        c.cm = cm;
        c.D = D;
        c.f = f;
        c.j = mpq_class(j);
        c.A = mpz_class(A);
        c.B = mpz_class(B);
        c.nE = j == 0 ? 6u : (j == 1728 ? 4u : 2u);
        return c;
    };
    return {{
        row(3, 3, 1, 0, "0", "1"),
        row(12, 3, 2, pw(2, 4) * pw(3, 3) * pw(5, 3), "-15", "22"),
        row(27, 3, 3, -pw(2, 15) * 3 * pw(5, 3), "-480", "4048"),
        row(4, 4, 1, pw(2, 6) * pw(3, 3), "1", "0"),
        row(16, 4, 2, pw(2, 3) * pw(3, 3) * pw(11, 3), "-11", "14"),
        row(7, 7, 1, -pw(3, 3) * pw(5, 3), "-2835", "-71442"),
        row(28, 7, 2, pw(3, 3) * pw(5, 3) * pw(17, 3), "-595", "5586"),
        row(8, 8, 1, pw(2, 6) * pw(5, 3), "-4320", "96768"),
        row(11, 11, 1, -pw(2, 15), "-9504", "365904"),
        row(19, 19, 1, -pw(2, 15) * pw(3, 3), "-608", "5776"),
        row(43, 43, 1, -pw(2, 18) * pw(3, 3) * pw(5, 3), "-13760", "621264"),
        row(67, 67, 1, -pw(2, 15) * pw(3, 3) * pw(5, 3) * pw(11, 3), "-117920", "15585808"),
        row(163, 163, 1, -pw(2, 18) * pw(3, 3) * pw(5, 3) * pw(23, 3) * pw(29, 3), "-34790720", "78984748304"),
    }};
}

} // namespace

const std::array<CmClass, 13>& cm_classes()
{
    static const std::array<CmClass, 13> table = build_table();
    return table;
}

const CmClass& cm_class(int cm)
{
    for (const auto& c : cm_classes())
        if (c.cm == cm)
            return c;
    throw std::invalid_argument("unknown cm value " + std::to_string(cm));
}

bool is_cm_value(int cm)
{
    for (const auto& c : cm_classes())
        if (c.cm == cm)
            return true;
    return false;
}

std::optional<CmClass> detect_cm(const mpq_class& j)
{
    for (const auto& c : cm_classes())
        if (c.j == j)
            return c;
    return std::nullopt;
}

std::optional<CMInvariants> cm_invariants(const CurveQ& e, const FactorOptions& opts)
{
    auto cls = detect_cm(discriminant_j(e).j);
    if (!cls)
        return std::nullopt;
    CMInvariants inv;
    inv.cm = cls->cm;
    if (cls->nE == 6) {
        inv.k = power_free_rep(e.B(), 6, opts).rep;
    } else if (cls->nE == 4) {
        inv.k = power_free_rep(e.A(), 4, opts).rep;
    } else {
        mpq_class ratio = (e.B() / mpq_class(cls->B)) / (e.A() / mpq_class(cls->A));
        inv.k = power_free_rep(ratio, 2, opts).rep;
        // (A, B) = (t^2 A_cm, t^3 B_cm) with t = ratio
        if (e.A() != ratio * ratio * mpq_class(cls->A) || e.B() != ratio * ratio * ratio * mpq_class(cls->B))
            throw std::logic_error("cm_invariants: curve is not a twist of its reference model");
    }
    return inv;
}

CurveQ reference_curve(int cm)
{
    const CmClass& c = cm_class(cm);
    return CurveQ(mpq_class(c.A), mpq_class(c.B));
}

CurveQ curve_from_invariants(const CMInvariants& inv)
{
    return twist(reference_curve(inv.cm), mpq_class(inv.k));
}

} // namespace cmtors
