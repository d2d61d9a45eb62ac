#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "corrclass/runner.hpp"

namespace {

int exit_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"corrclass: exact functoriality checks for correspondences, zigzags and "
                 "cobordism bicycles over products of projective spaces"};
    app.require_subcommand(1);

    std::string file;
    std::uint64_t seed = 1;
    std::string suites_csv;
    std::string format = "text";
    std::string expr;
    int max_dim = 4;
    int count = 2;

    CLI::App* check = app.add_subcommand("check", "parse a scenario and run its directives");
    check->add_option("file", file, "scenario file (.ccs)")->required();
    check->add_option("--seed", seed, "master random seed");
    check->add_option("--suites", suites_csv, "comma-separated directive-name filter");
    check->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* eval = app.add_subcommand("eval", "print a named declaration");
    eval->add_option("file", file, "scenario file (.ccs)")->required();
    eval->add_option("--expr", expr, "declared name to evaluate")->required();

    CLI::App* random = app.add_subcommand("random", "emit a generated scenario");
    random->add_option("--seed", seed, "master random seed");
    random->add_option("--max-dim", max_dim, "max total dimension of generated spaces");
    random->add_option("--count", count, "number of composable pairs");

    CLI::App* print = app.add_subcommand("print", "parse and pretty-print a scenario");
    print->add_option("file", file, "scenario file (.ccs)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) {
            const auto t0 = std::chrono::steady_clock::now();
            const corrclass::dsl::Scenario scenario =
                corrclass::dsl::parse_scenario(read_file(file));
            const corrclass::Report report =
                corrclass::run_suites(scenario, seed, split_list(suites_csv));
            if (format == "json") {
                std::cout << corrclass::report_json(report);
            } else {
                const double elapsed =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                std::cout << corrclass::report_text(report, elapsed);
            }
            return report.pass() ? 0 : 1;
        }
        if (eval->parsed()) {
            const corrclass::dsl::Scenario scenario =
                corrclass::dsl::parse_scenario(read_file(file));
            std::cout << corrclass::eval_expr(scenario, expr);
            return 0;
        }
        if (random->parsed()) {
            std::cout << corrclass::random_scenario(seed, max_dim, count);
            return 0;
        }
        if (print->parsed()) {
            const corrclass::dsl::Scenario scenario =
                corrclass::dsl::parse_scenario(read_file(file));
            std::cout << corrclass::dsl::print_scenario(scenario);
            return 0;
        }
    } catch (const corrclass::dsl::ParseError& e) {
        return exit_usage(file + ":" + e.what());
    } catch (const std::exception& e) {
        return exit_usage(e.what());
    }
    return 2;
}
