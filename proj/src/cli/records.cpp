#include "cmtors/cli/records.hpp"

#include <limits>
#include <regex>
#include <stdexcept>

#include "cmtors/errors.hpp"

namespace cmtors {

mpq_class parse_rational(const json& v)
{
    if (v.is_number_integer())
        return mpq_class(mpz_class(v.dump()));
    if (!v.is_string())
        throw std::invalid_argument("expected a rational string, got " + v.dump());
    static const std::regex pattern(R"(([+-]?)([0-9]+)(?:/([0-9]+))?)");
    const std::string s = v.get<std::string>();
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw std::invalid_argument("malformed rational '" + s + "'");
    mpz_class num(m[2].str()), den = m[3].matched ? mpz_class(m[3].str()) : mpz_class(1);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    if (m[1].str() == "-")
        num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

CurveRecord parse_curve_record(const std::string& line, std::size_t line_no)
{
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw ParseError(line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError(line_no, "record must be a JSON object");
    CurveRecord r;
    try {
        if (j.contains("label")) {
            if (!j["label"].is_string())
                throw std::invalid_argument("label must be a string");
            r.label = j["label"].get<std::string>();
        }
        const bool has_long = j.contains("long"), has_short = j.contains("short");
        if (has_long == has_short)
            throw std::invalid_argument("exactly one of \"long\" and \"short\" is required");
        if (has_long) {
            const json& a = j["long"];
            if (!a.is_array() || a.size() != 5)
                throw std::invalid_argument("\"long\" must be [a1, a2, a3, a4, a6]");
            r.long_model = LongModel{parse_rational(a[0]), parse_rational(a[1]), parse_rational(a[2]),
                                     parse_rational(a[3]), parse_rational(a[4])};
        } else {
            const json& s = j["short"];
            if (!s.is_object() || !s.contains("A") || !s.contains("B"))
                throw std::invalid_argument("\"short\" must be {\"A\": ..., \"B\": ...}");
            r.short_model = std::make_pair(parse_rational(s["A"]), parse_rational(s["B"]));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
    return r;
}

json curve_record_to_json(const CurveRecord& r)
{
    json j = json::object();
    if (r.label)
        j["label"] = *r.label;
    if (r.long_model) {
        const LongModel& m = *r.long_model;
        j["long"] = {m.a1.get_str(), m.a2.get_str(), m.a3.get_str(), m.a4.get_str(), m.a6.get_str()};
    } else if (r.short_model) {
        j["short"] = {{"A", r.short_model->first.get_str()}, {"B", r.short_model->second.get_str()}};
    }
    return j;
}

CurveQ short_curve(const CurveRecord& r)
{
    if (r.long_model)
        return short_from_long(*r.long_model).curve;
    if (!r.short_model)
        throw std::invalid_argument("curve record without a model");
    return CurveQ(r.short_model->first, r.short_model->second);
}

json group_to_json(const TorsionGroup& g, GroupFormat f)
{
    if (f == GroupFormat::Text)
        return g.to_string();
    return json::array({g.m(), g.n()});
}

json integer_to_json(const mpz_class& v)
{
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json report_to_json(const ReportRecord& r, GroupFormat f)
{
    json j = json::object();
    j["label"] = r.label ? json(*r.label) : json(nullptr);
    if (!r.report) {
        j["cm"] = nullptr;
        j["k"] = nullptr;
        j["torsion_q"] = nullptr;
        j["growth"] = nullptr;
    } else {
        j["cm"] = r.report->invariants.cm;
        j["k"] = integer_to_json(r.report->invariants.k);
        j["torsion_q"] = group_to_json(r.report->base, f);
        if (r.full_growth) {
            json g = json::array();
            for (const auto& e : r.report->entries)
                g.push_back({{"d", integer_to_json(e.d)}, {"group", group_to_json(e.group, f)}});
            j["growth"] = g;
        }
        if (r.field)
            j["field"] = {{"d", integer_to_json(r.field->d)}, {"group", group_to_json(r.field->group, f)}};
    }
    j["engine"] = r.engine;
    return j;
}

} // namespace cmtors
