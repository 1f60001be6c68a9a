#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nullcone/cli.hpp"

int main(int argc, char** argv) {
    nullcone::cli::RunConfig cfg;
    CLI::App app{"Stratification of the null-cone from roots and weights"};
    app.add_option("command", cfg.command, "stratify | candidates | tree | catalog-list | verify")
        ->required()
        ->check(CLI::IsMember(nullcone::cli::commands()));
    app.add_option("input", cfg.input, "problem JSON file or catalog spec, e.g. sl3-forms:4");
    app.add_option("--json", cfg.json_path, "write the JSON report to PATH");
    app.add_option("--svg", cfg.svg_path, "write a weight diagram to PATH (rank <= 2)");
    app.add_flag("--fast", cfg.fast, "treat root-free restrictions as leaves");
    app.add_flag("--verify", cfg.verify, "cross-check against the brute-force oracle");
    app.add_flag("--no-dedup", cfg.no_dedup, "keep Weyl-conjugate candidates");
    app.add_option("--orbit-cap", cfg.orbit_cap, "maximum Weyl orbit size")->check(CLI::PositiveNumber);
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    if (cfg.command != "catalog-list" && cfg.input.empty()) {
        std::cerr << "error: command '" << cfg.command << "' needs an input\n";
        return 1;
    }
    return nullcone::cli::run(cfg, std::cout, std::cerr);
}
