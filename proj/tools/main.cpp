#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Sampled-data consensus of fractional-order agents"};
    app.require_subcommand(1);

    std::string config;
    std::string output;

    auto* check = app.add_subcommand("check", "Check the design conditions of a scenario");
    check->add_option("config", config, "Scenario JSON file")->required();

    fracon::cli::RunOptions run_opts;
    std::string dense;
    std::size_t window = 0;
    auto* run = app.add_subcommand("run", "Simulate a scenario and write per-sample CSV");
    run->add_option("config", run_opts.config_path, "Scenario JSON file")->required();
    run->add_option("-o,--output", run_opts.output_path, "Output CSV")->required();
    auto* dense_opt = run->add_option("--dense", dense, "Also write inter-sample states to this CSV");
    auto* window_opt = run->add_option("--memory-window", window,
                                       "Experimental: truncate plant memory to W intervals")
                           ->check(CLI::PositiveNumber);

    auto* cmp = app.add_subcommand("compare", "Run proposed and memoryless schemes side by side");
    cmp->add_option("config", config, "Scenario JSON file")->required();
    cmp->add_option("-o,--output", output, "Output CSV")->required();

    auto* paper = app.add_subcommand("paper-scenario", "Print the reference five-agent scenario");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fracon::cli::kExitInputError;
    }

    if (*check) {
        return fracon::cli::cmd_check(config, std::cout, std::cerr);
    }
    if (*run) {
        if (*dense_opt) {
            run_opts.dense_path = dense;
        }
        if (*window_opt) {
            run_opts.memory_window = window;
        }
        return fracon::cli::cmd_run(run_opts, std::cout, std::cerr);
    }
    if (*cmp) {
        return fracon::cli::cmd_compare(config, output, std::cout, std::cerr);
    }
    if (*paper) {
        return fracon::cli::cmd_paper_scenario(std::cout);
    }
    return fracon::cli::kExitInputError;
}
