// Command-line front end: enumerate classifications, re-verify saved records,
// run the quantum-presentation checks.  Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include "cybe/classify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cybe;

namespace {

int cmd_enumerate(const std::string& algebra, const std::string& vertex, bool include_empty,
                  const std::string& format) {
    EnumerateOptions opt;
    opt.include_empty = include_empty;
    if (!vertex.empty()) opt.vertex = parse_node(vertex);
    auto recs = enumerate_algebra(algebra, opt);
    if (format == "json")
        std::cout << records_to_json(algebra, recs);
    else
        print_text_report(std::cout, algebra, recs);
    for (const auto& r : recs)
        if (!r.all_verified()) return 1;
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto [label, recs] = records_from_json(ss.str());
    VerifyOutcome out = verify_records(label, recs);
    std::cout << "checked " << out.records << " records\n";
    if (!out.ok()) {
        for (const auto& m : out.mismatches) std::cout << "mismatch: " << m << "\n";
        return 1;
    }
    std::cout << "all records verified\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and verification of quasi-trigonometric solutions"};
    app.require_subcommand(1);

    std::string algebra, vertex, format = "json", input, check;
    bool include_empty = false;

    auto* enumerate = app.add_subcommand("enumerate", "classify one algebra");
    enumerate->add_option("--algebra", algebra, "algebra label, e.g. A2, B2, C3")->required();
    enumerate->add_option("--vertex", vertex, "restrict to one simple root, e.g. alpha2");
    enumerate->add_flag("--include-empty", include_empty, "also emit the empty-triple records");
    enumerate->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "re-verify a saved record file");
    verify->add_option("--input", input, "JSON produced by enumerate")->required();

    auto* uq = app.add_subcommand("uq", "quantum-presentation checks");
    uq->add_option("--algebra", algebra, "algebra label")->required();
    uq->add_option("--check", check, "presentation|hopf|limit")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(algebra, vertex, include_empty, format);
        if (verify->parsed()) return cmd_verify(input);
        if (uq->parsed()) return run_uq_check(std::cout, algebra, check);
    } catch (const UnsupportedAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ScalarError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
