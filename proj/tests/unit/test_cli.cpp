#include <doctest.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmtors/cli/commands.hpp"
#include "cmtors/cli/records.hpp"
#include "cmtors/cli/sweep.hpp"
#include "cmtors/errors.hpp"

using namespace cmtors;

namespace {

struct Run {
    int code;
    std::vector<json> lines;
    std::string out, err;
};

Run classify(const std::string& input, RunOptions opts = {}, Engine engine = Engine::Classifier)
{
    std::istringstream in(input);
    std::ostringstream out, err;
    Run r;
    r.code = cmd_classify(in, out, err, opts, engine);
    r.out = out.str();
    r.err = err.str();
    std::istringstream lines(r.out);
    for (std::string l; std::getline(lines, l);)
        r.lines.push_back(json::parse(l));
    return r;
}

Run compare(std::vector<int> cms, long bound)
{
    std::ostringstream out, err;
    CompareOptions opts;
    opts.cms = std::move(cms);
    opts.bound = bound;
    Run r;
    r.code = cmd_compare(out, err, opts);
    r.out = out.str();
    r.err = err.str();
    std::istringstream lines(r.out);
    for (std::string l; std::getline(lines, l);)
        r.lines.push_back(json::parse(l));
    return r;
}

} // namespace

TEST_CASE("rational parsing")
{
    CHECK(parse_rational(json("-3/4")) == mpq_class(-3, 4));
    CHECK(parse_rational(json("+5")) == 5);
    CHECK(parse_rational(json("6/4")) == mpq_class(3, 2));
    CHECK(parse_rational(json(12)) == 12);
    CHECK_THROWS(parse_rational(json("1/0")));
    CHECK_THROWS(parse_rational(json("1.5")));
    CHECK_THROWS(parse_rational(json("x")));
    CHECK_THROWS(parse_rational(json(1.5)));
}

TEST_CASE("classify examples")
{
    Run r = classify(R"({"short": {"A": "0", "B": "16"}})"
                     "\n"
                     R"({"short": {"A": "1", "B": "0"}})"
                     "\n");
    CHECK(r.code == kExitOk);
    REQUIRE(r.lines.size() == 2);
    CHECK(r.lines[0]["cm"] == 3);
    CHECK(r.lines[0]["k"] == 16);
    CHECK(r.lines[0]["torsion_q"] == json::parse("[1,3]"));
    CHECK(r.lines[0]["growth"] == json::parse(R"([{"d":-3,"group":[3,3]}])"));
    CHECK(r.lines[0]["engine"] == "classifier");
    CHECK(r.lines[1]["cm"] == 4);
    CHECK(r.lines[1]["k"] == 1);
    CHECK(r.lines[1]["torsion_q"] == json::parse("[1,2]"));
    CHECK(r.lines[1]["growth"] ==
          json::parse(R"([{"d":-1,"group":[2,2]},{"d":2,"group":[1,4]},{"d":-2,"group":[1,4]}])"));
}

TEST_CASE("non-CM input yields a null record and its own exit code")
{
    Run r = classify(R"({"short": {"A": "1", "B": "1"}, "label": "x"})");
    CHECK(r.code == kExitNotCM);
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0]["cm"].is_null());
    CHECK(r.lines[0]["label"] == "x");
}

TEST_CASE("error exit codes")
{
    CHECK(classify(R"({"short": {"A": "0", "B": "0"}})").code == kExitSingular);
    Run p = classify("{\"short\": {\"A\": \"0\", \"B\": \"1\"}}\n\n{\"short\": ");
    CHECK(p.code == kExitParse);
    CHECK(p.err.find("line 3") != std::string::npos);
    CHECK(p.lines.empty());
    CHECK(classify(R"({"short": {"A": "0", "B": "1"}, "long": ["0","0","0","0","1"]})").code == kExitParse);
    CHECK(classify(R"({"short": {"A": "1/0", "B": "1"}})").code == kExitParse);
    RunOptions bad_d;
    bad_d.d = mpz_class(4);
    CHECK(classify(R"({"short": {"A": "0", "B": "1"}})", bad_d).code == kExitParse);
}

TEST_CASE("long models are accepted")
{
    Run r = classify(R"({"long": ["0", "0", "1", "0", "0"], "label": "27a3"})");
    CHECK(r.code == kExitOk);
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0]["cm"] == 3);
    CHECK(r.lines[0]["k"] == 16);
}

TEST_CASE("text format and single-field queries")
{
    RunOptions text;
    text.format = GroupFormat::Text;
    Run r = classify(R"({"short": {"A": "-15", "B": "22"}})", text, Engine::Oracle);
    REQUIRE(r.lines.size() == 1);
    CHECK(r.lines[0]["torsion_q"] == "C6");
    CHECK(r.lines[0]["growth"] == json::parse(R"([{"d":3,"group":"C2xC6"}])"));
    CHECK(r.lines[0]["engine"] == "oracle");

    RunOptions one;
    one.d = mpz_class(-3);
    for (Engine e : {Engine::Classifier, Engine::Oracle}) {
        Run q = classify(R"({"short": {"A": "0", "B": "-432"}})", one, e);
        REQUIRE(q.lines.size() == 1);
        CHECK(q.lines[0]["field"] == json::parse(R"({"d":-3,"group":[3,3]})"));
        CHECK_FALSE(q.lines[0].contains("growth"));
    }
}

TEST_CASE("engines agree and output is stable across job counts")
{
    std::string input;
    for (const auto& inv : sweep_invariants({3, 4, 16, 12, 7, 163}, 12)) {
        CurveQ e = curve_from_invariants(inv);
        input += json{{"short", {{"A", e.A().get_str()}, {"B", e.B().get_str()}}}}.dump() + "\n";
    }
    RunOptions one, four;
    four.jobs = 4;
    Run a = classify(input, one), b = classify(input, four);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    Run o = classify(input, four, Engine::Oracle);
    REQUIRE(o.lines.size() == a.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        json x = a.lines[i], y = o.lines[i];
        x.erase("engine");
        y.erase("engine");
        CHECK(x == y);
    }
}

TEST_CASE("curve records round trip")
{
    std::vector<CurveRecord> recs;
    recs.push_back({std::string("a"), std::nullopt, std::make_pair(mpq_class(-44), mpq_class(112))});
    recs.push_back({std::nullopt, LongModel{1, -1, 1, 0, 0}, std::nullopt});
    recs.push_back({std::string("b"), std::nullopt, std::make_pair(mpq_class(1, 16), mpq_class(0))});
    std::string input;
    for (const auto& r : recs)
        input += curve_record_to_json(r).dump() + "\n";
    Run first = classify(input);
    std::string again;
    std::istringstream in(input);
    std::size_t line_no = 0;
    for (std::string l; std::getline(in, l);)
        again += curve_record_to_json(parse_curve_record(l, ++line_no)).dump() + "\n";
    CHECK(again == input);
    CHECK(classify(again).out == first.out);
}

TEST_CASE("compare examples")
{
    Run c3 = compare({3}, 100);
    CHECK(c3.code == kExitOk);
    REQUIRE(c3.lines.size() == 1);
    const json& s3 = c3.lines[0]["summary"];
    CHECK(s3["mismatches"] == 0);
    std::set<json> allowed{json::parse("[2,2]"), json::parse("[1,3]"), json::parse("[1,6]"), json::parse("[2,6]"),
                           json::parse("[3,3]")};
    for (const auto& g : s3["grown_groups"])
        CHECK(allowed.count(g) == 1);

    Run c16 = compare({16}, 50);
    CHECK(c16.lines.back()["summary"]["max_entries"] == 3);

    Run c11 = compare({11}, 50);
    const json& s11 = c11.lines.back()["summary"];
    CHECK(s11["grown_groups"].empty());
    CHECK(s11["max_entries"] == 0);

    std::ostringstream out, err;
    CompareOptions bad;
    bad.cms = {5};
    CHECK(cmd_compare(out, err, bad) == kExitParse);
}

TEST_CASE("tables rendering")
{
    std::ostringstream out;
    cmd_tables(out);
    const std::string s = out.str();
    CHECK(s.find("C₂ → C₂×C₂ over √2") != std::string::npos);
    CHECK(s.find("C₂×C₂ → C₂×C₄ over √2") != std::string::npos);
    CHECK(s.find("C₁ → C₃ over √k") != std::string::npos);
}
