// Command-line driver: runs the theorem-check suite over a configured grid
// of (n, k, metric, seed) instances and renders the reports.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "svol/checks.hpp"
#include "svol/config.hpp"
#include "svol/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of square-volume identities for infinitesimal simplices"};

    std::string config_path;
    std::vector<std::string> check_names;
    std::vector<std::uint64_t> seeds;
    std::string out_path;
    std::string format;
    bool list_checks = false;

    app.add_option("--config", config_path, "JSON config file (defaults to the builtin grid)");
    app.add_option("--check", check_names, "Check name to run (repeatable; overrides config)");
    app.add_option("--seed", seeds, "Seed to use (repeatable; overrides config)");
    app.add_option("--out", out_path, "Report output path (default stdout)");
    app.add_option("--format", format, "Report format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_flag("--list-checks", list_checks, "Print the available check names and exit");

    CLI11_PARSE(app, argc, argv);

    if (list_checks) {
        for (const std::string& name : svol::all_check_names()) std::cout << name << "\n";
        return 0;
    }

    svol::RunConfig config;
    try {
        if (config_path.empty()) {
            config = svol::default_config();
        } else {
            std::ifstream f(config_path);
            if (!f) {
                std::cerr << "error: cannot read config file '" << config_path << "'\n";
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            config = svol::parse_config(buf.str());
        }
        if (!check_names.empty()) {
            for (const std::string& name : check_names) {
                const auto& names = svol::all_check_names();
                if (std::find(names.begin(), names.end(), name) == names.end()) {
                    std::cerr << "error: unknown check '" << name << "'; valid names:\n";
                    for (const std::string& v : names) std::cerr << "  " << v << "\n";
                    return 2;
                }
            }
            config.checks = check_names;
        }
        if (!seeds.empty()) config.seeds = seeds;
        if (!out_path.empty()) config.output.path = out_path;
        if (!format.empty()) config.output.format = format;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::vector<svol::CheckReport> reports = svol::run_suite(config);
        svol::write_report_atomically(svol::render_report(reports, config.output.format),
                                      config.output.path);
        return svol::all_passed(reports) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
