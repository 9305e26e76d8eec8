#include "ainf/suites.hpp"

#include <CLI11.hpp>

int main(int argc, char** argv) {
    CLI::App app{"exact verification of A-infinity structures built from a "
                 "non-derivation differential"};
    app.require_subcommand(1);

    ainf::RunConfig cfg;
    const std::vector<std::string> commands = {"validate", "ainf",       "order", "compat",
                                               "cohomology", "bar",      "hochschild", "all"};
    for (const auto& name : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input_path, "algebra definition file")->required();
        sub->add_option("--max-arity", cfg.max_arity, "largest operation arity (default 6)");
        sub->add_option("--max-word", cfg.max_word, "tensor word truncation (default 4)");
        sub->add_option("--max-cochain", cfg.max_cochain, "cochain degree bound (default 4)");
        sub->add_option("--seed", cfg.seed, "seed for the random sweeps (default 0)");
        sub->add_option("--report", cfg.report_path, "write the report to a file");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (cfg.max_arity < 1 || cfg.max_word < 1 || cfg.max_cochain < 0) {
        std::cerr << "bounds must be positive\n";
        return 2;
    }

    ainf::Report report;
    return ainf::run(cfg, report);
}
