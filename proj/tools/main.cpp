#include <dmhap/numeric.hpp>
#include <dmhap/suites.hpp>
#include <dmhap/textio.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

struct Options {
    std::string family = "identity";
    std::string suite = "all";
    int r = 1;
    int n_max = 6;
    std::string format = "json";
    std::string kappa = "0";
    std::vector<std::string> ls;
    std::vector<std::string> custom;
    int scale_i = 2;
    int scale_s = 3;
    int precision = 30;
    std::string output;
};

dmhap::AppellFamily make_family(const Options& opt) {
    if (opt.family == "custom") {
        if (opt.custom.empty())
            throw std::invalid_argument("family 'custom' needs --custom with A_0,A_1,...");
        std::vector<dmhap::Rational> numbers;
        for (const std::string& s : opt.custom) numbers.push_back(dmhap::rational_from_string(s));
        return dmhap::AppellFamily::custom("custom", std::move(numbers));
    }
    if (!opt.custom.empty())
        throw std::invalid_argument("--custom only applies to family 'custom'");
    return dmhap::AppellFamily::by_name(opt.family);
}

void emit(const Options& opt, const std::string& body) {
    if (opt.output.empty() || opt.output == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::invalid_argument("cannot open output file '" + opt.output + "'");
    out << body;
}

void require_format(const Options& opt, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (opt.format == f) return;
    throw std::invalid_argument("format '" + opt.format + "' not supported for this command");
}

int cmd_gen(const Options& opt) {
    require_format(opt, {"json", "csv", "latex", "text"});
    dmhap::Table table = dmhap::generate(make_family(opt), opt.r, opt.n_max);
    if (opt.format == "json")
        emit(opt, dmhap::table_document(table).dump(2) + "\n");
    else if (opt.format == "csv")
        emit(opt, dmhap::table_csv(table));
    else if (opt.format == "latex")
        emit(opt, dmhap::table_latex(table));
    else
        emit(opt, dmhap::table_text(table));
    return kExitOk;
}

int cmd_limit(const Options& opt) {
    require_format(opt, {"json", "csv", "text"});
    dmhap::AppellFamily family = make_family(opt);
    dmhap::Table table = dmhap::generate(family, opt.r, opt.n_max);
    std::vector<dmhap::MultiPoly> limit = dmhap::classical_limit(table);
    dmhap::Table oracle = dmhap::classical_reference(family, opt.r, opt.n_max);

    if (opt.format == "json") {
        json entries = json::array();
        for (int n = 0; n <= opt.n_max; ++n)
            entries.push_back({{"n", n},
                               {"poly", dmhap::to_text(limit[n])},
                               {"oracle", dmhap::to_text(oracle.entries[n])},
                               {"match", limit[n] == oracle.entries[n]}});
        json doc{{"schema_version", 1}, {"command", "limit"}, {"family", table.family},
                 {"r", opt.r},          {"N", opt.n_max},     {"entries", entries}};
        emit(opt, doc.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "n,polynomial_text,oracle_text,match\n";
        for (int n = 0; n <= opt.n_max; ++n)
            os << n << "," << dmhap::to_text(limit[n]) << "," << dmhap::to_text(oracle.entries[n])
               << "," << (limit[n] == oracle.entries[n] ? "true" : "false") << "\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (int n = 0; n <= opt.n_max; ++n)
            os << "n=" << n << "  " << dmhap::to_text(limit[n])
               << (limit[n] == oracle.entries[n]
                       ? "  [match]"
                       : "  [MISMATCH vs " + dmhap::to_text(oracle.entries[n]) + "]")
               << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

int cmd_eval(const Options& opt) {
    require_format(opt, {"json", "csv", "text"});
    if (opt.precision < dmhap::kMinPrecision || opt.precision > dmhap::kMaxPrecision)
        throw std::invalid_argument("precision must lie in [10, 100]");
    dmhap::AppellFamily family = make_family(opt);
    if (static_cast<int>(opt.ls.size()) != opt.r)
        throw std::invalid_argument("--ls needs exactly r values");
    dmhap::BigFloat kappa = dmhap::parse_number(opt.kappa);
    std::vector<dmhap::BigFloat> point;
    for (const std::string& s : opt.ls) point.push_back(dmhap::parse_number(s));

    dmhap::Table table = dmhap::generate(family, opt.r, opt.n_max);
    std::vector<std::string> values;
    for (int n = 0; n <= opt.n_max; ++n)
        values.push_back(dmhap::format_number(dmhap::eval_numeric(table.entries[n], point, kappa),
                                              opt.precision));

    if (opt.format == "json") {
        json entries = json::array();
        for (int n = 0; n <= opt.n_max; ++n) entries.push_back({{"n", n}, {"value", values[n]}});
        json doc{{"schema_version", 1},
                 {"command", "eval"},
                 {"family", table.family},
                 {"r", opt.r},
                 {"kappa", opt.kappa},
                 {"ls", opt.ls},
                 {"precision", opt.precision},
                 {"entries", entries}};
        emit(opt, doc.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "n,value\n";
        for (int n = 0; n <= opt.n_max; ++n) os << n << "," << values[n] << "\n";
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (int n = 0; n <= opt.n_max; ++n) os << "n=" << n << "  " << values[n] << "\n";
        emit(opt, os.str());
    }
    return kExitOk;
}

json suite_json(const dmhap::SuiteResult& res) {
    json checks = json::array();
    for (const dmhap::SuiteCheck& c : res.checks)
        checks.push_back({{"name", c.name},
                          {"promoted", c.promoted},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    json reports = json::array();
    for (const dmhap::IdentityReport& r : res.reports) reports.push_back(dmhap::report_document(r));
    return {{"suite", res.suite}, {"checks", checks}, {"reports", reports}};
}

int cmd_check(const Options& opt) {
    require_format(opt, {"json", "text"});
    dmhap::AppellFamily family = make_family(opt);

    std::vector<dmhap::SuiteResult> results;
    if (opt.suite == "all") {
        results = dmhap::run_all_suites(family, opt.r, opt.n_max, opt.scale_i, opt.scale_s);
    } else {
        results.push_back(
            dmhap::run_suite(opt.suite, family, opt.r, opt.n_max, opt.scale_i, opt.scale_s));
    }

    bool passed = true;
    for (const dmhap::SuiteResult& res : results) passed = passed && res.promoted_pass();

    if (opt.format == "json") {
        json suites = json::array();
        for (const dmhap::SuiteResult& res : results) suites.push_back(suite_json(res));
        json doc{{"schema_version", 1}, {"command", "check"}, {"family", family.name()},
                 {"r", opt.r},          {"n_max", opt.n_max}, {"I", opt.scale_i},
                 {"S", opt.scale_s},    {"passed", passed},   {"suites", suites}};
        emit(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const dmhap::SuiteResult& res : results) {
            for (const dmhap::SuiteCheck& c : res.checks) {
                os << (c.passed ? "pass" : "FAIL") << (c.promoted ? "  " : " *") << " " << res.suite
                   << "/" << c.name;
                if (!c.detail.empty()) os << "  (" << c.detail << ")";
                os << "\n";
            }
        }
        os << (passed ? "OK" : "FAILED") << "\n";
        emit(opt, os.str());
    }
    return passed ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, operators and identity checks for degenerate "
                 "multidimensional Hermite-based Appell polynomials"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool family_positional) {
        if (family_positional)
            cmd->add_option("family", opt.family,
                            "identity | bernoulli | euler | genocchi | custom");
        else
            cmd->add_option("--family", opt.family,
                            "identity | bernoulli | euler | genocchi | custom");
        cmd->add_option("--r", opt.r, "number of variables l_1..l_r")->check(CLI::PositiveNumber);
        cmd->add_option("--n-max", opt.n_max, "largest degree")->check(CLI::NonNegativeNumber);
        cmd->add_option("--format", opt.format, "json | csv | latex | text");
        cmd->add_option("--custom", opt.custom, "A_0,A_1,... for family 'custom'")->delimiter(',');
        cmd->add_option("--output", opt.output, "write to file instead of stdout");
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a polynomial table");
    add_common(gen, true);

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("suite", opt.suite,
                      "all | monomiality | derivatives | pde | oprule | limit | scaling | "
                      "convolution_3_4 | convolution_3_2 | gf_two_route");
    add_common(check, false);
    check->add_option("--I", opt.scale_i, "first scaling integer")->check(CLI::PositiveNumber);
    check->add_option("--S", opt.scale_s, "second scaling integer")->check(CLI::PositiveNumber);

    CLI::App* eval = app.add_subcommand("eval", "evaluate table entries numerically");
    add_common(eval, true);
    eval->add_option("--kappa", opt.kappa, "degeneration parameter (> -1; rational or decimal)");
    eval->add_option("--ls", opt.ls, "evaluation point, r comma-separated numbers")->delimiter(',');
    eval->add_option("--precision", opt.precision, "output digits (10..100)");

    CLI::App* limit = app.add_subcommand("limit", "lambda = 1 table with a classical cross-check");
    add_common(limit, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (check->parsed()) return cmd_check(opt);
        if (eval->parsed()) return cmd_eval(opt);
        return cmd_limit(opt);
    } catch (const dmhap::UnsupportedOperatorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
