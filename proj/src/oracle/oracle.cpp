#include "cmtors/oracle/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cmtors/algebra/power_free.hpp"
#include "cmtors/algebra/quadratic.hpp"
#include "cmtors/errors.hpp"
#include "cmtors/poly/roots.hpp"

namespace cmtors {

namespace {

constexpr unsigned kOddOrders[] = {3, 5, 7};

// Rational points of exact order n on e whose x-coordinates are among `xs`.
std::vector<PointQ> points_at(const CurveQ& e, const std::vector<mpq_class>& xs, unsigned n)
{
    std::vector<PointQ> out;
    for (const auto& x : xs) {
        mpq_class f = e.rhs(x);
        if (f == 0) {
            out.emplace_back(x, 0);
            continue;
        }
        if (auto y = rational_sqrt(f)) {
            out.emplace_back(x, *y);
            out.emplace_back(x, -*y);
        }
    }
    for (const auto& p : out)
        if (point_order(e, p, 32) != n)
            throw std::logic_error("oracle: point " + p.x().get_str() + " does not have order " + std::to_string(n));
    return out;
}

std::vector<PointQ> rational_points_of(const CurveQ& e, DivisionPolynomials& dp, unsigned n)
{
    return points_at(e, rational_roots(dp.primitive(n)), n);
}

bool in_phi2(const TorsionGroup& g)
{
    static const std::set<TorsionGroup> phi2{
        TorsionGroup(1, 1), TorsionGroup(1, 2), TorsionGroup(1, 3), TorsionGroup(1, 4),
        TorsionGroup(1, 6), TorsionGroup(2, 2), TorsionGroup(2, 4), TorsionGroup(2, 6),
        TorsionGroup(3, 3)};
    return phi2.count(g) > 0;
}

bool in_phi1(const TorsionGroup& g)
{
    return in_phi2(g) && g != TorsionGroup(2, 4) && g != TorsionGroup(2, 6) && g != TorsionGroup(3, 3);
}

std::string describe(const TorsionCounts& c)
{
    std::string s;
    for (const auto& [n, v] : c.count)
        s += (s.empty() ? "" : ", ") + std::to_string(n) + ":" + std::to_string(v);
    return "{" + s + "}";
}

} // namespace

TorsionGroup group_from_counts(const TorsionCounts& c)
{
    auto outside = [&]() { return GroupOutsidePhi2("torsion counts " + describe(c) + " fit no group in Phi^cm(2)"); };
    if (c[5] != 0 || c[7] != 0)
        throw outside();
    unsigned m2 = 1, n2 = 1;
    if (c[2] == 0 && c[4] == 0) {
    } else if (c[2] == 1 && c[4] == 0) {
        n2 = 2;
    } else if (c[2] == 1 && c[4] == 2) {
        n2 = 4;
    } else if (c[2] == 3 && c[4] == 0) {
        m2 = n2 = 2;
    } else if (c[2] == 3 && c[4] == 4) {
        m2 = 2;
        n2 = 4;
    } else {
        throw outside();
    }
    unsigned m3 = 1, n3 = 1;
    if (c[3] == 2) {
        n3 = 3;
    } else if (c[3] == 8) {
        m3 = n3 = 3;
    } else if (c[3] != 0) {
        throw outside();
    }
    TorsionGroup g(m2 * m3, n2 * n3);
    if (!in_phi2(g))
        throw outside();
    return g;
}

CurveOracle::CurveOracle(const CurveQ& e) : curve_(e), dp_(e)
{
    auto inv = cm_invariants(e);
    if (!inv)
        throw NotCM("curve " + e.to_string() + " has no complex multiplication");
    inv_ = *inv;
}

const std::vector<mpq_class>& CurveOracle::roots(unsigned n)
{
    auto it = roots_.find(n);
    if (it == roots_.end())
        it = roots_.emplace(n, rational_roots(dp_.primitive(n))).first;
    return it->second;
}

const std::vector<PointQ>& CurveOracle::rational_points(unsigned n)
{
    auto it = rational_.find(n);
    if (it == rational_.end())
        it = rational_.emplace(n, points_at(curve_, roots(n), n)).first;
    return it->second;
}

TorsionCounts CurveOracle::counts_over_Q()
{
    TorsionCounts c;
    for (unsigned n : {2u, 3u, 4u, 5u, 7u})
        c.count[n] = static_cast<unsigned>(rational_points(n).size());
    return c;
}

TorsionGroup CurveOracle::torsion_over_Q()
{
    TorsionCounts c;
    for (unsigned n : {2u, 3u, 4u})
        c.count[n] = static_cast<unsigned>(rational_points(n).size());
    TorsionGroup g = group_from_counts(c);
    if (!in_phi1(g))
        throw GroupOutsidePhi2("rational torsion " + g.to_string() + " is not in Phi^cm(1)");
    return g;
}

std::vector<PointK> CurveOracle::points_over(const QuadField& k, unsigned n)
{
    std::vector<QuadElem> xs;
    for (const auto& r : roots(n))
        xs.emplace_back(r, k);
    for (auto& z : roots_in_quadratic_field(dp_.primitive(n), k))
        xs.push_back(std::move(z));
    std::vector<PointK> out;
    for (const auto& x : xs) {
        QuadElem f = (x * x + curve_.A()) * x + curve_.B();
        if (f.is_zero()) {
            out.emplace_back(x, QuadElem(0, k));
            continue;
        }
        if (auto y = quad_square_root(f)) {
            out.emplace_back(x, *y);
            out.emplace_back(x, -*y);
        }
    }
    for (const auto& p : out)
        if (point_order(curve_, p, 32) != n)
            throw std::logic_error("oracle: quadratic point of wrong order for n = " + std::to_string(n));
    return out;
}

TorsionCounts CurveOracle::counts_over(const mpz_class& d)
{
    QuadField k(d);
    TorsionCounts c;
    c.count[2] = static_cast<unsigned>(points_over(k, 2).size());
    c.count[4] = static_cast<unsigned>(points_over(k, 4).size());

    const CurveQ tw = quadratic_twist_model(curve_, mpq_class(d));
    DivisionPolynomials tdp(tw);
    const mpq_class dq(d), d2 = dq * dq;
    for (unsigned n : kOddOrders) {
        const auto& own = rational_points(n);
        auto twisted = rational_points_of(tw, tdp, n);
        c.count[n] = static_cast<unsigned>((1 + own.size()) * (1 + twisted.size()) - 1);
        if (twisted.empty())
            continue;
        // (X, Y) on E^[d] is (X / d, Y sqrt(d) / d^2) on E over Q(sqrt d).
        std::vector<PointK> left{PointK()}, right{PointK()};
        for (const auto& p : own)
            left.emplace_back(QuadElem(p.x(), k), QuadElem(p.y(), k));
        for (const auto& p : twisted)
            right.emplace_back(QuadElem(p.x() / dq, k), QuadElem(0, p.y() / d2, k));
        for (const auto& p : left) {
            for (const auto& q : right) {
                if (p.is_infinity() && q.is_infinity())
                    continue;
                PointK s = add(curve_, p, q);
                if (!on_curve(curve_, s) || point_order(curve_, s, 32) != n)
                    throw std::logic_error("oracle: odd-order decomposition produced a point of wrong order");
            }
        }
    }
    return c;
}

TorsionGroup CurveOracle::torsion_over(const mpz_class& d)
{
    return group_from_counts(counts_over(d));
}

std::vector<mpz_class> CurveOracle::growth_candidates()
{
    std::set<mpz_class> ds;
    for (unsigned n : {3u, 4u, 5u, 7u}) {
        for (const auto& a : roots(n)) {
            mpq_class f = curve_.rhs(a);
            if (f == 0)
                continue;
            mpz_class d = squarefree_part(f);
            if (d != 1)
                ds.insert(d);
        }
    }
    for (unsigned n : {2u, 3u, 4u}) {
        for (const auto& s : small_irreducible_factors(dp_.primitive(n)))
            if (s.factor.degree() == 2)
                ds.insert(discriminant_class(s.factor));
    }
    std::vector<mpz_class> out(ds.begin(), ds.end());
    std::sort(out.begin(), out.end(), field_order);
    return out;
}

GrowthReport CurveOracle::growth()
{
    GrowthReport rep{inv_, torsion_over_Q(), {}};
    for (const auto& d : growth_candidates()) {
        TorsionGroup g = torsion_over(d);
        if (!g.contains(rep.base))
            throw std::logic_error("oracle: torsion over Q(sqrt " + d.get_str() + ") misses the rational torsion");
        if (g != rep.base)
            rep.entries.push_back({d, g});
    }
    return rep;
}

TorsionGroup torsion_over_Q_direct(const CurveQ& e)
{
    return CurveOracle(e).torsion_over_Q();
}

TorsionGroup torsion_over_quadratic_direct(const CurveQ& e, const mpz_class& d)
{
    return CurveOracle(e).torsion_over(d);
}

GrowthReport enumerate_growth_fields(const CurveQ& e)
{
    return CurveOracle(e).growth();
}

} // namespace cmtors
