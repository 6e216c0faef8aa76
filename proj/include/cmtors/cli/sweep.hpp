#pragma once

#include <map>
#include <set>
#include <vector>

#include "cmtors/classifier/classifier.hpp"

namespace cmtors {

// Canonical nE-power-free twist classes k with 0 < |k| <= bound, ascending.
std::vector<mpz_class> canonical_ks(int cm, long bound);

// For cm with nE = 2 the same list as canonical_ks (squarefree k).
std::vector<CMInvariants> sweep_invariants(const std::vector<int>& cms, long bound);

struct SweepResult {
    CMInvariants inv;
    TorsionGroup table_q, oracle_q;
    GrowthReport table, oracle;

    bool torsion_agrees() const { return table_q == oracle_q; }
    bool growth_agrees() const { return table == oracle; }
    bool agrees() const { return torsion_agrees() && growth_agrees(); }
};

// Runs both engines on every curve E_cm^k, on up to `jobs` threads.
std::vector<SweepResult> run_sweep(const std::vector<CMInvariants>& invs, unsigned jobs);

struct Census {
    std::size_t curves = 0;
    std::size_t mismatches = 0;
    std::set<TorsionGroup> base_groups, grown_groups;
    // base group -> configuration -> number of curves
    std::map<TorsionGroup, std::map<std::vector<TorsionGroup>, std::size_t>> configurations;
    std::size_t max_entries = 0;
    std::vector<CMInvariants> at_max;  // curves attaining max_entries
};

// Census of the oracle's reports (the classifier's if use_oracle is false).
Census take_census(const std::vector<SweepResult>& results, bool use_oracle = true);

} // namespace cmtors
