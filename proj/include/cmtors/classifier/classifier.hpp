#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmtors/classifier/group.hpp"
#include "cmtors/cm/cm.hpp"

namespace cmtors {

struct GrowthEntry {
    mpz_class d;  // squarefree, not 0 or 1
    TorsionGroup group;

    bool operator==(const GrowthEntry&) const = default;
};

struct GrowthReport {
    CMInvariants invariants;
    TorsionGroup base;
    std::vector<GrowthEntry> entries;  // sorted by |d|, positive first

    bool operator==(const GrowthReport&) const = default;
};

// Orders field labels by |d|, then positive before negative.
bool field_order(const mpz_class& a, const mpz_class& b);

// Which of the growth-table shapes the canonical twist class k takes. The r values
// are canonical: k = r^2 with r > 0, k = -r^2 with r > 0, k = r^3 and
// k = 2 r^3 modulo nE-th powers.
struct KClassProfile {
    bool is_one = false;
    std::optional<mpz_class> sqrt_class;
    std::optional<mpz_class> neg_sqrt_class;
    std::optional<mpz_class> cube_class;
    std::optional<mpz_class> two_cube;
};

KClassProfile k_class_profile(int cm, const mpz_class& k);

// ---- symbolic tables -----------------------------------------------------

enum class KShape { Any, OneOf, Square, NegSquare, Cube, TwoCube };

struct KCondition {
    KShape shape = KShape::Any;
    std::vector<long> values;  // for OneOf
};

enum class FieldVar { One, K, R };

// Q(sqrt(coeff * var))
struct FieldExpr {
    long coeff = 1;
    FieldVar var = FieldVar::One;
};

struct FieldGroup {
    FieldExpr field;
    TorsionGroup group;
};

struct GrowthRow {
    int cm = 0;
    KCondition cond;
    std::string k_label;
    TorsionGroup base;
    std::vector<FieldGroup> growth;
};

struct TorsionRow {
    int cm = 0;
    KCondition cond;
    std::string k_label;
    TorsionGroup group;
};

// Rows in precedence order; within a cm the first matching row applies.
const std::vector<GrowthRow>& growth_table();
const std::vector<TorsionRow>& torsion_table();

// "√2", "√−k", "√2r"
std::string render_field(const FieldExpr& f);
// "C₂ → C₂×C₂ over √2"
std::string render_row(const GrowthRow& row);

// ---- evaluation ----------------------------------------------------------

TorsionGroup torsion_over_Q(const CMInvariants& inv);
GrowthReport growth_quadratic(const CMInvariants& inv);

// The torsion configuration: base group and the multiset of grown groups.
struct Configuration {
    TorsionGroup base;
    std::vector<TorsionGroup> grown;  // ascending

    auto operator<=>(const Configuration&) const = default;
};

Configuration configuration_list(const CMInvariants& inv);
Configuration configuration_of(const GrowthReport& report);

// "{C₂; C₂×C₂, C₄, C₄}"
std::string render_configuration(const Configuration& c);

} // namespace cmtors
