#include <doctest.h>

#include <vector>

#include "cmtors/algebra/power_free.hpp"
#include "cmtors/curve/curve.hpp"
#include "cmtors/curve/division.hpp"
#include "cmtors/curve/point.hpp"
#include "cmtors/errors.hpp"
#include "cmtors/poly/roots.hpp"
#include "../support/gen.hpp"

using namespace cmtors;
using cmtors::testing::Gen;

namespace {

PolyQ P(std::initializer_list<long> c)
{
    std::vector<mpq_class> v;
    for (long x : c)
        v.emplace_back(x);
    return PolyQ(v);
}

// Independent affine group law on y^2 = x^3 + A x + B, used only to freeze
// expected orders.
struct Naive {
    mpq_class A, B;
    bool inf = false;
    mpq_class x, y;
};

Naive naive_add(const Naive& p, const Naive& q)
{
    if (p.inf)
        return q;
    if (q.inf)
        return p;
    if (p.x == q.x && p.y == -q.y)
        return {p.A, p.B, true, 0, 0};
    mpq_class l = p.x == q.x ? mpq_class((3 * p.x * p.x + p.A) / (2 * p.y)) : mpq_class((q.y - p.y) / (q.x - p.x));
    mpq_class x3 = l * l - p.x - q.x;
    return {p.A, p.B, false, x3, l * (p.x - x3) - p.y};
}

int naive_order(const Naive& p, int bound)
{
    Naive acc = p;
    for (int n = 1; n <= bound; ++n) {
        if (acc.inf)
            return n;
        acc = naive_add(acc, p);
    }
    return 0;
}

} // namespace

TEST_CASE("singular curves are rejected")
{
    CHECK_THROWS_AS(CurveQ(0, 0), SingularCurve);
    CHECK_THROWS_AS(CurveQ(-3, 2), SingularCurve);
    CHECK_NOTHROW(CurveQ(-3, 3));
}

TEST_CASE("short_from_long")
{
    auto a = short_from_long({0, 0, 0, 0, 1});
    CHECK(a.curve.A() == 0);
    CHECK(a.curve.B() > 0);
    CHECK(power_free_rep(a.curve.B(), 6).rep == 1);

    auto b = short_from_long({0, 0, 1, 0, 0});
    CHECK(b.curve.A() == 0);
    CHECK(b.curve.B() == 11664);

    auto c = short_from_long({0, 0, 0, 1, 0});
    CHECK(c.curve.B() == 0);
    CHECK(power_free_rep(c.curve.A(), 4).rep == 1);

    CHECK_THROWS_AS(short_from_long({0, 0, 0, 0, 0}), SingularCurve);
}

TEST_CASE("short_from_long carries points to points")
{
    // y^2 + x y + y = x^3 - x^2 with the point (0, 0)
    LongModel m{1, -1, 1, 0, 0};
    auto s = short_from_long(m);
    Gen g(21);
    // Points of the short model map onto the long model.
    for (int i = 0; i < 50; ++i) {
        mpq_class x = g.rational(200, 30);
        mpq_class f = s.curve.rhs(x);
        auto y = rational_sqrt(f);
        if (!y)
            continue;
        auto [xl, yl] = to_long_coordinates(s.change, x, *y);
        CHECK(yl * yl + m.a1 * xl * yl + m.a3 * yl == xl * xl * xl + m.a2 * xl * xl + m.a4 * xl + m.a6);
    }
    // and the image of (0, 0) on the long model sits on the short model
    mpq_class u = s.change.u;
    mpq_class x = (0 - s.change.r) / (u * u);
    mpq_class y = (0 - s.change.s * u * u * x - s.change.t) / (u * u * u);
    CHECK(y * y == s.curve.rhs(x));
    auto back = to_long_coordinates(s.change, x, y);
    CHECK(back.first == 0);
    CHECK(back.second == 0);
}

TEST_CASE("discriminant and j")
{
    auto e4 = discriminant_j(CurveQ(1, 0));
    CHECK(e4.discriminant == -64);
    CHECK(e4.j == 1728);
    auto e3 = discriminant_j(CurveQ(0, 1));
    CHECK(e3.discriminant == -432);
    CHECK(e3.j == 0);
    CHECK(squarefree_part(discriminant_j(CurveQ(-2835, -71442)).discriminant) == -7);
}

TEST_CASE("twists")
{
    CHECK(twist(CurveQ(0, 1), 2) == CurveQ(0, 2));
    CHECK(twist(CurveQ(1, 0), -1) == CurveQ(-1, 0));
    CHECK(twist(CurveQ(-11, 14), 2) == CurveQ(-44, 112));
    CHECK(quadratic_twist_model(CurveQ(0, 1), -3) == CurveQ(0, -27));
    CHECK(quadratic_twist_model(CurveQ(1, 0), -1) == CurveQ(1, 0));
    CHECK(quadratic_twist_model(CurveQ(-2835, -71442), -7) == CurveQ(-138915, 24504606));
    CHECK_THROWS(twist(CurveQ(0, 1), 0));
}

TEST_CASE("twist functoriality")
{
    Gen g(22);
    for (int i = 0; i < 300; ++i) {
        mpq_class A = g.rational(50, 6), B = g.rational(50, 6);
        if (4 * A * A * A + 27 * B * B == 0)
            continue;
        CurveQ e(A, B);
        mpq_class d = g.nonzero(-60, 60);
        CHECK(discriminant_j(twist(e, d)).j == discriminant_j(e).j);
        CHECK(discriminant_j(quadratic_twist_model(e, d)).j == discriminant_j(e).j);
        CurveQ twice = quadratic_twist_model(quadratic_twist_model(e, d), d);
        // (d^4 A, d^6 B): isomorphic to E over Q via u = d
        CHECK(twice.A() == d * d * d * d * A);
        CHECK(twice.B() == d * d * d * d * d * d * B);
    }
}

TEST_CASE("division polynomial goldens")
{
    for (long k : {1L, -3L, 16L, -432L, 7L}) {
        CurveQ e3(0, k);
        CHECK(primitive_division_poly(e3, 3).poly == P({0, 12 * k, 0, 0, 3}));
        CurveQ e4(k, 0);
        CHECK(primitive_division_poly(e4, 3).poly == P({-k * k, 0, 6 * k, 0, 3}));
        CHECK(primitive_division_poly(e4, 4).poly == P({-k, 0, 1}) * P({k * k, 0, 6 * k, 0, 1}) * mpq_class(2));
    }
    CurveQ e7(-2835, -71442);
    CHECK(primitive_division_poly(e7, 4).poly ==
          P({-5103, -126, 1}) * P({567, 0, 1}) * P({6237, 126, 1}) * mpq_class(2));
    CurveQ e16(-11, 14);
    CHECK(primitive_division_poly(e16, 4).poly == P({-1, 1}) * P({-3, 1}) * P({-79, 100, -42, 4, 1}) * mpq_class(2));
    CHECK(primitive_division_poly(e16, 2).poly == e16.rhs());
    CHECK_THROWS(primitive_division_poly(e16, 1));
    CHECK_THROWS(primitive_division_poly(e16, 17));
}

TEST_CASE("division polynomial degrees")
{
    CurveQ e(-15, 22);
    DivisionPolynomials dp(e);
    const int expected[] = {0, 0, 3, 4, 6, 12, 12, 24, 24, 36, 36, 60, 48, 84, 72, 96, 96};
    for (unsigned n = 2; n <= 16; ++n) {
        CHECK(dp.primitive(n).degree() == expected[n]);
        if (n % 2 == 1)
            CHECK(dp.classical(n).degree() == static_cast<int>((n * n - 1) / 2));
    }
}

TEST_CASE("classical division polynomials give x of multiples")
{
    // y^2 = x^3 + 17 with the non-torsion point (-2, 3)
    CurveQ e(0, 17);
    DivisionPolynomials dp(e);
    PointQ p(-2, 3);
    const mpq_class x = -2, f = e.rhs(x);
    for (unsigned n = 2; n <= 12; ++n) {
        PointQ q = multiply(e, p, n);
        REQUIRE_FALSE(q.is_infinity());
        mpq_class pn = dp.classical(n)(x), pp = dp.classical(n + 1)(x), pm = dp.classical(n - 1)(x);
        mpq_class xn = n % 2 == 1 ? mpq_class(x - f * pp * pm / (pn * pn)) : mpq_class(x - pp * pm / (f * pn * pn));
        CHECK(q.x() == xn);
    }
}

TEST_CASE("point orders")
{
    CurveQ e3(0, 1);
    CHECK(point_order(e3, PointQ(-1, 0), 8) == 2u);
    CHECK(point_order(e3, PointQ(2, 3), 8) == 6u);
    CHECK(point_order(e3, PointQ(0, 1), 8) == 3u);
    CHECK(naive_order({0, 1, false, 2, 3}, 8) == 6);
    CHECK(point_order(e3, PointQ(), 8) == 1u);
    CHECK_FALSE(point_order(CurveQ(0, 17), PointQ(-2, 3), 32).has_value());
    CHECK(on_curve(e3, PointQ(2, 3)));
    CHECK_FALSE(on_curve(e3, PointQ(2, 2)));
}

TEST_CASE("point orders over a quadratic field")
{
    // (i - 1 is sqrt of i^3 - i): (i, i - 1) has order 4 on y^2 = x^3 - x
    QuadField qi(-1);
    CurveQ e(-1, 0);
    PointK p(QuadElem(0, 1, qi), QuadElem(-1, 1, qi));
    CHECK(on_curve(e, p));
    CHECK(point_order(e, p, 32) == 4u);
    CHECK(dbl(e, p).y().is_zero());
}

TEST_CASE("group law axioms")
{
    CurveQ e(0, 17);
    std::vector<PointQ> gens{PointQ(-2, 3), PointQ(-1, 4), PointQ(2, 5)};
    Gen g(23);
    std::vector<PointQ> pool;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            PointQ p = add(e, multiply(e, a < 0 ? negate(gens[0]) : gens[0], static_cast<unsigned long>(std::abs(a))),
                           multiply(e, b < 0 ? negate(gens[1]) : gens[1], static_cast<unsigned long>(std::abs(b))));
            pool.push_back(p);
        }
    pool.push_back(gens[2]);
    for (const auto& p : pool) {
        CHECK(on_curve(e, p));
        CHECK(add(e, p, negate(p)).is_infinity());
    }
    for (int i = 0; i < 1000; ++i) {
        const PointQ& p = g.pick(pool);
        const PointQ& q = g.pick(pool);
        const PointQ& r = g.pick(pool);
        CHECK(add(e, add(e, p, q), r) == add(e, p, add(e, q, r)));
        CHECK(add(e, p, q) == add(e, q, p));
    }
}

TEST_CASE("twist map carries points onto the twist")
{
    Gen g(24);
    std::vector<CurveQ> curves{CurveQ(0, 1), CurveQ(1, 0), CurveQ(-15, 22), CurveQ(-2835, -71442), CurveQ(-11, 14)};
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        const CurveQ& e = g.pick(curves);
        mpq_class alpha = g.rational(60, 6);
        mpq_class fa = e.rhs(alpha);
        if (fa == 0)
            continue;
        auto sc = rational_square_class(fa);
        if (sc.d == 1)
            continue;
        // (alpha, gamma sqrt d) on E over Q(sqrt d)
        QuadField k(sc.d);
        PointK p(QuadElem(alpha, k), QuadElem(0, sc.gamma, k));
        REQUIRE(on_curve(e, p));
        CurveQ t = quadratic_twist_model(e, mpq_class(sc.d));
        const mpq_class d(sc.d);
        CHECK(on_curve(t, PointQ(d * alpha, d * d * sc.gamma)));
        ++checked;
    }
    CHECK(checked > 500);
}

TEST_CASE("rational roots of division polynomials give points of exact order")
{
    Gen g(25);
    std::vector<CurveQ> base{CurveQ(0, 1), CurveQ(1, 0), CurveQ(-15, 22), CurveQ(-480, 4048), CurveQ(-11, 14),
                             CurveQ(-2835, -71442), CurveQ(-4320, 96768)};
    int found = 0;
    for (int i = 0; i < 60; ++i) {
        CurveQ e = twist(g.pick(base), g.nonzero(-6, 6));
        DivisionPolynomials dp(e);
        for (unsigned n = 2; n <= 7; ++n) {
            for (const auto& a : rational_roots(dp.primitive(n))) {
                auto b = rational_sqrt(e.rhs(a));
                if (!b)
                    continue;
                CHECK(point_order(e, PointQ(a, *b), 32) == n);
                ++found;
            }
        }
    }
    CHECK(found > 20);
}
