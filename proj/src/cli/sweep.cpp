#include "cmtors/cli/sweep.hpp"

#include "cmtors/algebra/power_free.hpp"
#include "cmtors/cli/parallel.hpp"
#include "cmtors/oracle/oracle.hpp"

namespace cmtors {

std::vector<mpz_class> canonical_ks(int cm, long bound)
{
    const unsigned nE = cm_class(cm).nE;
    std::vector<mpz_class> out;
    for (long k = -bound; k <= bound; ++k)
        if (k != 0 && power_free_rep(k, nE).rep == k)
            out.emplace_back(k);
    return out;
}

std::vector<CMInvariants> sweep_invariants(const std::vector<int>& cms, long bound)
{
    std::vector<CMInvariants> out;
    for (int cm : cms)
        for (const auto& k : canonical_ks(cm, bound))
            out.push_back({cm, k});
    return out;
}

std::vector<SweepResult> run_sweep(const std::vector<CMInvariants>& invs, unsigned jobs)
{
    return parallel_map(invs, jobs, [](const CMInvariants& inv) {
        CurveOracle o(curve_from_invariants(inv));
        SweepResult r;
        r.inv = inv;
        r.table_q = torsion_over_Q(inv);
        r.table = growth_quadratic(inv);
        r.oracle_q = o.torsion_over_Q();
        r.oracle = o.growth();
        return r;
    });
}

Census take_census(const std::vector<SweepResult>& results, bool use_oracle)
{
    Census c;
    for (const auto& r : results) {
        ++c.curves;
        if (!r.agrees())
            ++c.mismatches;
        const GrowthReport& rep = use_oracle ? r.oracle : r.table;
        c.base_groups.insert(rep.base);
        for (const auto& e : rep.entries)
            c.grown_groups.insert(e.group);
        Configuration conf = configuration_of(rep);
        ++c.configurations[conf.base][conf.grown];
        if (rep.entries.size() > c.max_entries) {
            c.max_entries = rep.entries.size();
            c.at_max.clear();
        }
        if (rep.entries.size() == c.max_entries)
            c.at_max.push_back(r.inv);
    }
    return c;
}

} // namespace cmtors
