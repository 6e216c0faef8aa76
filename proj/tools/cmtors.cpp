#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cmtors/cli/commands.hpp"
#include "cmtors/cm/cm.hpp"

using namespace cmtors;

namespace {

std::vector<int> parse_cm_list(const std::string& s)
{
    std::vector<int> out;
    if (s == "all") {
        for (const auto& c : cm_classes())
            out.push_back(c.cm);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torsion of CM elliptic curves over Q and its growth over quadratic fields"};
    app.require_subcommand(1);

    std::string in_path, out_path, format = "json";
    unsigned jobs = 1;
    std::string d_str;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", in_path, "JSONL input file (default: stdin)");
        sub->add_option("--out", out_path, "JSONL output file (default: stdout)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Group rendering: json ([m, n]) or text (C2xC6)")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    auto* classify = app.add_subcommand("classify", "Classify curves with the table-driven engine");
    add_io(classify);
    add_common(classify);
    classify->add_option("--d", d_str, "Report only the field Q(sqrt d)");

    auto* oracle = app.add_subcommand("oracle", "Classify curves with the division-polynomial engine");
    add_io(oracle);
    add_common(oracle);
    oracle->add_option("--d", d_str, "Report only the field Q(sqrt d)");

    std::string cm_list = "all";
    long bound = 0;
    auto* compare = app.add_subcommand("compare", "Run both engines over a family of twists and compare");
    add_common(compare);
    compare->add_option("--out", out_path, "Output file (default: stdout)");
    compare->add_option("--cm", cm_list, "Comma-separated cm values or 'all'");
    compare->add_option("--bound", bound, "Largest |k|")->required();

    auto* tables = app.add_subcommand("tables", "Print the classifier's tables");
    tables->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    std::ofstream out_file;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitParse;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : out_file;
    const GroupFormat fmt = format == "text" ? GroupFormat::Text : GroupFormat::Json;

    if (tables->parsed()) {
        cmd_tables(out);
        return kExitOk;
    }
    if (compare->parsed()) {
        CompareOptions opts;
        try {
            opts.cms = parse_cm_list(cm_list);
        } catch (const std::exception&) {
            std::cerr << "error: --cm expects a comma-separated list of integers or 'all'\n";
            return kExitParse;
        }
        opts.bound = bound;
        opts.jobs = jobs;
        opts.format = fmt;
        return cmd_compare(out, std::cerr, opts);
    }

    RunOptions opts;
    opts.format = fmt;
    opts.jobs = jobs;
    if (!d_str.empty()) {
        try {
            opts.d = mpz_class(d_str);
        } catch (const std::exception&) {
            std::cerr << "error: --d expects an integer\n";
            return kExitParse;
        }
    }
    std::ifstream in_file;
    if (!in_path.empty()) {
        in_file.open(in_path);
        if (!in_file) {
            std::cerr << "error: cannot read " << in_path << "\n";
            return kExitParse;
        }
    }
    std::istream& in = in_path.empty() ? std::cin : in_file;
    return cmd_classify(in, out, std::cerr, opts, oracle->parsed() ? Engine::Oracle : Engine::Classifier);
}
