#include "cmtors/cli/commands.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "cmtors/algebra/power_free.hpp"
#include "cmtors/cli/parallel.hpp"
#include "cmtors/cli/sweep.hpp"
#include "cmtors/errors.hpp"
#include "cmtors/oracle/oracle.hpp"

namespace cmtors {

namespace {

struct Job {
    std::size_t line = 0;
    std::optional<std::string> label;
    CurveQ curve{0, 1};
};

bool blank(const std::string& s)
{
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

ReportRecord run_one(const Job& job, const RunOptions& opts, Engine engine)
{
    ReportRecord r;
    r.label = job.label;
    r.engine = engine == Engine::Oracle ? "oracle" : "classifier";
    auto inv = cm_invariants(job.curve);
    if (!inv)
        return r;
    if (engine == Engine::Classifier) {
        r.report = growth_quadratic(*inv);
        if (opts.d) {
            GrowthEntry f{*opts.d, r.report->base};
            for (const auto& e : r.report->entries)
                if (e.d == *opts.d)
                    f.group = e.group;
            r.field = f;
        }
    } else {
        CurveOracle o(job.curve);
        if (opts.d) {
            r.report = GrowthReport{*inv, o.torsion_over_Q(), {}};
            r.field = GrowthEntry{*opts.d, o.torsion_over(*opts.d)};
        } else {
            r.report = o.growth();
        }
    }
    r.full_growth = !opts.d.has_value();
    return r;
}

} // namespace

int cmd_classify(std::istream& in, std::ostream& out, std::ostream& err, const RunOptions& opts, Engine engine)
{
    if (opts.d && (*opts.d == 0 || *opts.d == 1 || !is_squarefree(*opts.d))) {
        err << "error: --d must be a squarefree integer other than 0 and 1\n";
        return kExitParse;
    }
    std::vector<Job> jobs;
    std::string line;
    for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
        if (blank(line))
            continue;
        try {
            CurveRecord rec = parse_curve_record(line, line_no);
            jobs.push_back({line_no, rec.label, short_curve(rec)});
        } catch (const ParseError& e) {
            err << "parse error: " << e.what() << "\n";
            return kExitParse;
        } catch (const SingularCurve& e) {
            err << "line " << line_no << ": " << e.what() << "\n";
            return kExitSingular;
        }
    }

    std::vector<ReportRecord> reports;
    try {
        reports = parallel_map(jobs, opts.jobs, [&](const Job& j) { return run_one(j, opts, engine); });
    } catch (const FactorizationFailure& e) {
        err << "factorization failure: " << e.what() << "\n";
        return kExitFactorization;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }

    std::size_t non_cm = 0;
    for (const auto& r : reports) {
        if (!r.report)
            ++non_cm;
        out << report_to_json(r, opts.format).dump() << "\n";
    }
    out.flush();
    if (non_cm > 0) {
        err << non_cm << " of " << reports.size() << " curves have no complex multiplication\n";
        return kExitNotCM;
    }
    return kExitOk;
}

int cmd_compare(std::ostream& out, std::ostream& err, const CompareOptions& opts)
{
    if (opts.bound < 1) {
        err << "error: --bound must be at least 1\n";
        return kExitParse;
    }
    for (int cm : opts.cms) {
        if (!is_cm_value(cm)) {
            err << "error: " << cm << " is not a CM discriminant of a curve over Q\n";
            return kExitParse;
        }
    }
    std::vector<SweepResult> results;
    try {
        results = run_sweep(sweep_invariants(opts.cms, opts.bound), opts.jobs);
    } catch (const FactorizationFailure& e) {
        err << "factorization failure: " << e.what() << "\n";
        return kExitFactorization;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitMismatch;
    }

    for (const auto& r : results) {
        if (r.agrees())
            continue;
        ReportRecord table{std::nullopt, r.table, "classifier", std::nullopt, true};
        ReportRecord oracle{std::nullopt, r.oracle, "oracle", std::nullopt, true};
        json m = {{"cm", r.inv.cm},
                  {"k", integer_to_json(r.inv.k)},
                  {"classifier", report_to_json(table, opts.format)},
                  {"oracle", report_to_json(oracle, opts.format)}};
        out << json{{"mismatch", m}}.dump() << "\n";
    }

    Census c = take_census(results);
    json summary = json::object();
    summary["curves"] = c.curves;
    summary["mismatches"] = c.mismatches;
    json bases = json::array(), grown = json::array();
    for (const auto& g : c.base_groups)
        bases.push_back(group_to_json(g, opts.format));
    for (const auto& g : c.grown_groups)
        grown.push_back(group_to_json(g, opts.format));
    summary["base_groups"] = bases;
    summary["grown_groups"] = grown;
    json census = json::array();
    for (const auto& [base, confs] : c.configurations) {
        json list = json::array();
        for (const auto& [groups, count] : confs) {
            json gs = json::array();
            for (const auto& g : groups)
                gs.push_back(group_to_json(g, opts.format));
            list.push_back({{"grown", gs}, {"count", count}});
        }
        census.push_back({{"base", group_to_json(base, opts.format)}, {"configurations", list}});
    }
    summary["census"] = census;
    summary["max_entries"] = c.max_entries;
    out << json{{"summary", summary}}.dump() << "\n";
    out.flush();
    return c.mismatches == 0 ? kExitOk : kExitMismatch;
}

void cmd_tables(std::ostream& out)
{
    auto pad = [](std::string s, std::size_t width) {
        // count code points, not bytes
        std::size_t len = 0;
        for (unsigned char ch : s)
            len += (ch & 0xC0) != 0x80;
        if (len < width)
            s.append(width - len, ' ');
        return s;
    };
    out << "Torsion over Q\n";
    for (const auto& row : torsion_table())
        out << pad("cm=" + std::to_string(row.cm), 8) << pad("k: " + row.k_label, 22) << row.group.pretty() << "\n";
    out << "\nTorsion growth over quadratic fields\n";
    for (const auto& row : growth_table())
        out << pad("cm=" + std::to_string(row.cm), 8) << pad("k: " + row.k_label, 22) << render_row(row) << "\n";
}

} // namespace cmtors
