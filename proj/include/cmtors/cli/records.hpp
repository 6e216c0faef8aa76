#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "cmtors/classifier/classifier.hpp"
#include "cmtors/curve/curve.hpp"

namespace cmtors {

using json = nlohmann::ordered_json;

// One input line: a long or a short Weierstrass model.
struct CurveRecord {
    std::optional<std::string> label;
    std::optional<LongModel> long_model;
    std::optional<std::pair<mpq_class, mpq_class>> short_model;  // (A, B)
};

// "-3/4", "+5", "12"; JSON integers are accepted too. Throws std::invalid_argument.
mpq_class parse_rational(const json& v);

// Throws ParseError carrying line_no.
CurveRecord parse_curve_record(const std::string& line, std::size_t line_no);
json curve_record_to_json(const CurveRecord& r);

// The short model of the record. Throws SingularCurve.
CurveQ short_curve(const CurveRecord& r);

enum class GroupFormat { Json, Text };

struct ReportRecord {
    std::optional<std::string> label;
    std::optional<GrowthReport> report;  // empty for curves without CM
    std::string engine = "classifier";
    std::optional<GrowthEntry> field;    // a single queried field
    bool full_growth = true;
};

json group_to_json(const TorsionGroup& g, GroupFormat f);
// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json integer_to_json(const mpz_class& v);
json report_to_json(const ReportRecord& r, GroupFormat f);

} // namespace cmtors
