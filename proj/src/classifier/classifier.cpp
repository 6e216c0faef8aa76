#include "cmtors/classifier/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "cmtors/algebra/factor.hpp"
#include "cmtors/algebra/power_free.hpp"

namespace cmtors {

bool field_order(const mpz_class& a, const mpz_class& b)
{
    int c = cmp(abs(a), abs(b));
    if (c != 0)
        return c < 0;
    return a > b;
}

KClassProfile k_class_profile(int cm, const mpz_class& k)
{
    const CmClass& cls = cm_class(cm);
    const unsigned nE = cls.nE;
    if (k == 0)
        throw std::invalid_argument("k_class_profile: k must be nonzero");
    if (power_free_rep(k, nE).rep != k)
        throw std::invalid_argument("k_class_profile: k is not canonical for cm " + std::to_string(cm));

    KClassProfile p;
    p.is_one = k == 1;
    if (nE == 2)
        return p;

    Factorization f = factorize(k);
    bool all_even = true, all_triple = true;
    mpz_class half = 1, third = f.sign;
    for (const auto& [prime, e] : f.factors) {
        all_even = all_even && e % 2 == 0;
        all_triple = all_triple && e % 3 == 0;
        if (e % 2 == 0)
            for (unsigned i = 0; i < e / 2; ++i)
                half *= prime;
        if (e % 3 == 0)
            for (unsigned i = 0; i < e / 3; ++i)
                third *= prime;
    }
    if (all_even) {
        if (f.sign > 0)
            p.sqrt_class = half;
        else
            p.neg_sqrt_class = half;
    }
    if (nE == 6) {
        if (all_triple)
            p.cube_class = third;
        mpz_class half_k = power_free_rep(mpq_class(k, 2), 6).rep;
        if (auto r = rational_nth_root(mpq_class(half_k), 3))
            p.two_cube = r->get_num();
    }
    return p;
}

namespace {

const TorsionGroup C1 = TorsionGroup::cyclic(1);
const TorsionGroup C2 = TorsionGroup::cyclic(2);
const TorsionGroup C3 = TorsionGroup::cyclic(3);
const TorsionGroup C4 = TorsionGroup::cyclic(4);
const TorsionGroup C6 = TorsionGroup::cyclic(6);
const TorsionGroup C2xC2(2, 2);
const TorsionGroup C2xC4(2, 4);
const TorsionGroup C2xC6(2, 6);
const TorsionGroup C3xC3(3, 3);

KCondition any() { return {KShape::Any, {}}; }
KCondition one_of(std::vector<long> v) { return {KShape::OneOf, std::move(v)}; }
KCondition shape(KShape s) { return {s, {}}; }

FieldExpr fixed(long d) { return {d, FieldVar::One}; }
FieldExpr of_k(long c) { return {c, FieldVar::K}; }
FieldExpr of_r(long c) { return {c, FieldVar::R}; }

std::vector<GrowthRow> build_growth()
{
    std::vector<GrowthRow> t;
    // j = 0, y^2 = x^3 + k
    t.push_back({3, one_of({1}), "1", C6, {{fixed(-3), C2xC6}}});
    t.push_back({3, one_of({16, -432}), "16, −432", C3, {{fixed(-3), C3xC3}}});
    t.push_back({3, shape(KShape::Square), "r² (r ≠ 1, 4)", C3, {}});
    t.push_back({3, one_of({-27}), "−27", C2, {{fixed(-3), C2xC6}}});
    t.push_back({3, shape(KShape::Cube), "r³ (r ≠ 1, −3)", C2, {{fixed(-3), C2xC2}, {of_r(1), C6}}});
    t.push_back({3, shape(KShape::TwoCube), "2r³ (r ≠ 2, −6)", C1, {{of_r(2), C3}, {of_r(-6), C3}}});
    t.push_back({3, any(), "other", C1, {{of_k(1), C3}}});

    t.push_back({12, one_of({1}), "1", C6, {{fixed(3), C2xC6}}});
    t.push_back({12, one_of({3}), "3", C2, {{fixed(3), C2xC6}}});
    t.push_back({12, any(), "other", C2, {{fixed(3), C2xC2}, {of_k(1), C6}}});

    t.push_back({27, one_of({1}), "1", C3, {}});
    t.push_back({27, any(), "other", C1, {{of_k(1), C3}}});

    // j = 1728, y^2 = x^3 + k x
    t.push_back({4, one_of({-1}), "−1", C2xC2, {{fixed(-1), C2xC4}, {fixed(2), C2xC4}}});
    t.push_back({4, one_of({-4}), "−4", C2xC2, {{fixed(2), C2xC4}}});
    t.push_back({4, shape(KShape::NegSquare), "−r² (r ≠ 1, 2)", C2xC2, {}});
    t.push_back({4, one_of({4}), "4", C4, {{fixed(-1), C2xC4}}});
    t.push_back({4, shape(KShape::Square), "r² (r ≠ 2)", C2, {{fixed(-1), C2xC2}, {of_r(2), C4}, {of_r(-2), C4}}});
    t.push_back({4, any(), "other", C2, {{of_k(-1), C2xC2}}});

    t.push_back({16, one_of({1, 2}), "1, 2", C4, {{fixed(2), C2xC4}}});
    t.push_back({16, any(), "other", C2, {{fixed(2), C2xC2}, {of_k(1), C4}, {of_k(2), C4}}});

    t.push_back({7, any(), "any", C2, {{fixed(-7), C2xC2}}});
    t.push_back({28, any(), "any", C2, {{fixed(7), C2xC2}}});
    t.push_back({8, any(), "any", C2, {{fixed(2), C2xC2}}});
    for (int cm : {11, 19, 43, 67, 163})
        t.push_back({cm, any(), "any", C1, {}});
    return t;
}

std::vector<TorsionRow> build_torsion()
{
    std::vector<TorsionRow> t;
    t.push_back({3, one_of({1}), "1", C6});
    t.push_back({3, one_of({-432}), "−432", C3});
    t.push_back({3, shape(KShape::Square), "r² (r ≠ 1)", C3});
    t.push_back({3, shape(KShape::Cube), "r³ (r ≠ 1)", C2});
    t.push_back({3, any(), "other", C1});
    t.push_back({12, one_of({1}), "1", C6});
    t.push_back({12, any(), "other", C2});
    t.push_back({27, one_of({1}), "1", C3});
    t.push_back({27, any(), "other", C1});
    t.push_back({4, one_of({4}), "4", C4});
    t.push_back({4, shape(KShape::NegSquare), "−r²", C2xC2});
    t.push_back({4, any(), "other", C2});
    t.push_back({16, one_of({1, 2}), "1, 2", C4});
    t.push_back({16, any(), "other", C2});
    for (int cm : {7, 28, 8})
        t.push_back({cm, any(), "any", C2});
    for (int cm : {11, 19, 43, 67, 163})
        t.push_back({cm, any(), "any", C1});
    return t;
}

// The r bound by a matching condition (1 when the condition binds none).
std::optional<mpz_class> match(const KCondition& c, const mpz_class& k, const KClassProfile& p)
{
    switch (c.shape) {
    case KShape::Any:
        return mpz_class(1);
    case KShape::OneOf:
        for (long v : c.values)
            if (k == v)
                return mpz_class(1);
        return std::nullopt;
    case KShape::Square:
        return p.sqrt_class;
    case KShape::NegSquare:
        return p.neg_sqrt_class;
    case KShape::Cube:
        return p.cube_class;
    case KShape::TwoCube:
        return p.two_cube;
    }
    return std::nullopt;
}

template <class Row>
std::pair<const Row*, mpz_class> find_row(const std::vector<Row>& table, const CMInvariants& inv)
{
    KClassProfile p = k_class_profile(inv.cm, inv.k);
    for (const auto& row : table) {
        if (row.cm != inv.cm)
            continue;
        if (auto r = match(row.cond, inv.k, p))
            return {&row, *r};
    }
    throw std::logic_error("no table row for cm " + std::to_string(inv.cm));
}

} // namespace

const std::vector<GrowthRow>& growth_table()
{
    static const std::vector<GrowthRow> t = build_growth();
    return t;
}

const std::vector<TorsionRow>& torsion_table()
{
    static const std::vector<TorsionRow> t = build_torsion();
    return t;
}

std::string render_field(const FieldExpr& f)
{
    std::string s = "√";
    if (f.coeff < 0)
        s += "−";
    long a = f.coeff < 0 ? -f.coeff : f.coeff;
    if (a != 1 || f.var == FieldVar::One)
        s += std::to_string(a);
    if (f.var == FieldVar::K)
        s += "k";
    else if (f.var == FieldVar::R)
        s += "r";
    return s;
}

std::string render_row(const GrowthRow& row)
{
    std::string s = row.base.pretty() + " → ";
    if (row.growth.empty())
        return s + "no growth";
    for (std::size_t i = 0; i < row.growth.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += row.growth[i].group.pretty() + " over " + render_field(row.growth[i].field);
    }
    return s;
}

TorsionGroup torsion_over_Q(const CMInvariants& inv)
{
    return find_row(torsion_table(), inv).first->group;
}

GrowthReport growth_quadratic(const CMInvariants& inv)
{
    auto [row, r] = find_row(growth_table(), inv);
    GrowthReport rep{inv, row->base, {}};
    for (const auto& fg : row->growth) {
        mpz_class v = fg.field.var == FieldVar::K ? inv.k : fg.field.var == FieldVar::R ? r : mpz_class(1);
        mpz_class d = squarefree_part(mpq_class(v * fg.field.coeff));
        if (d == 1)
            throw std::logic_error("growth_quadratic: row produced the trivial field");
        for (const auto& e : rep.entries)
            if (e.d == d)
                throw std::logic_error("growth_quadratic: row produced a repeated field");
        rep.entries.push_back({d, fg.group});
    }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const GrowthEntry& a, const GrowthEntry& b) { return field_order(a.d, b.d); });
    return rep;
}

Configuration configuration_of(const GrowthReport& report)
{
    Configuration c{report.base, {}};
    for (const auto& e : report.entries)
        c.grown.push_back(e.group);
    std::sort(c.grown.begin(), c.grown.end());
    return c;
}

Configuration configuration_list(const CMInvariants& inv)
{
    return configuration_of(growth_quadratic(inv));
}

std::string render_configuration(const Configuration& c)
{
    std::string s = "{" + c.base.pretty();
    for (std::size_t i = 0; i < c.grown.size(); ++i)
        s += (i == 0 ? "; " : ", ") + c.grown[i].pretty();
    return s + "}";
}

} // namespace cmtors
