#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bers/checks.hpp"
#include "bers/config.hpp"
#include "bers/errors.hpp"
#include "bers/report.hpp"

namespace {

using Suite = std::vector<bers::CheckRow> (*)(const bers::RunConfig&, const std::string&);

struct Options {
    std::string config_path;
    std::string out_dir;
    std::int64_t seed = -1;
    int refinements = 0;
};

void print_rows(const std::vector<bers::CheckRow>& rows) {
    for (const bers::CheckRow& row : rows) {
        std::cout << (row.pass ? "pass  " : "FAIL  ") << row.check_id;
        std::cout << "  slope=" << bers::format_double(row.slope)
                  << "  max=" << bers::format_double(row.max_norm)
                  << "  threshold=" << bers::format_double(row.threshold) << "\n";
    }
}

// 0: all checks pass. 1: a check failed (or a suite aborted mid-run).
// 2: the configuration is unusable.
int run_suite(const std::string& name, const Options& opt, Suite suite) {
    bers::RunConfig cfg;
    try {
        if (!opt.config_path.empty()) cfg = bers::load_config_file(opt.config_path);
        if (opt.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt.seed);
        if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
        if (opt.refinements > 0) {
            if (opt.refinements < 3 || opt.refinements > 8) {
                throw bers::ConfigError("--refinements: expected a value in [3, 8]");
            }
            cfg.grid.refinements = opt.refinements;
        }
        std::filesystem::create_directories(cfg.out_dir);
    } catch (const std::exception& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    }

    std::vector<bers::CheckRow> rows;
    try {
        rows = suite(cfg, cfg.out_dir);
    } catch (const bers::ConfigError& err) {
        std::cerr << "config error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << name << " aborted: " << err.what() << "\n";
        return 1;
    }

    const std::string csv = bers::csv_from_rows(rows);
    bers::write_text_file(cfg.out_dir + "/results.csv", csv);
    bers::write_text_file(cfg.out_dir + "/manifest.json", bers::manifest_json(rows));
    print_rows(rows);
    const bool ok = bers::all_pass(rows);
    std::cout << name << ": " << rows.size() << " checks, " << (ok ? "all pass" : "FAILURES")
              << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residual verification suites for the stratified field solvers"};
    app.require_subcommand(1);

    Options opt;
    // no ExistingFile check: a missing file must exit 2 like any unusable
    // config, not with the option parser's own exit code
    app.add_option("--config", opt.config_path, "JSON run configuration");
    app.add_option("--seed", opt.seed, "Override the configured random seed");
    app.add_option("--out", opt.out_dir, "Override the configured output directory");
    app.add_option("--refinements", opt.refinements, "Override the refinement level count");

    struct Entry {
        const char* name;
        const char* blurb;
        Suite suite;
    };
    const Entry entries[] = {
        {"algebra-selftest", "Randomized identities of the component algebras",
         &bers::checks::run_algebra_selftest},
        {"formal-powers", "Recursive power tables and their residuals",
         &bers::checks::run_formal_powers},
        {"maxwell-verify", "Stratified 1D field system checks",
         &bers::checks::run_maxwell_verify},
        {"forcefree-verify", "Curl eigenfield checks", &bers::checks::run_forcefree_verify},
        {"dirac-verify", "Fixed-energy spinor system checks", &bers::checks::run_dirac_verify},
    };

    std::string chosen;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.blurb);
        sub->fallthrough();  // let --config/--seed/--out follow the subcommand
        sub->callback([&chosen, name = std::string(e.name)] { chosen = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help lands here with code 0; every real usage error exits 2
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    for (const Entry& e : entries) {
        if (chosen == e.name) return run_suite(chosen, opt, e.suite);
    }
    std::cerr << "no subcommand selected\n";
    return 2;
}
