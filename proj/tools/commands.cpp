#include "commands.hpp"

#include "fracon/io.hpp"
#include "fracon/sim.hpp"

#include <fstream>
#include <ostream>

namespace fracon::cli {

namespace {

std::optional<Scenario> load(const std::string& path, std::ostream& err) {
    try {
        return load_scenario(path);
    } catch (const ConfigError& e) {
        err << "error: " << path << ": " << e.what() << '\n';
    }
    return std::nullopt;
}

// Writes through `emit` into `path`; reports and returns false on failure.
template <typename Emit>
bool write_file(const std::string& path, std::ostream& err, Emit&& emit) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    emit(file);
    file.flush();
    if (!file) {
        err << "error: write to '" << path << "' failed\n";
        return false;
    }
    return true;
}

}  // namespace

int cmd_check(const std::string& config_path, std::ostream& out, std::ostream& err) {
    const auto scenario = load(config_path, err);
    if (!scenario) {
        return kExitInputError;
    }
    const ConditionReport report = check_conditions(scenario->graph, scenario->params, scenario->k_check);
    print_report(out, report);
    return report.certified() ? kExitOk : kExitConditionFailure;
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    auto scenario = load(opts.config_path, err);
    if (!scenario) {
        return kExitInputError;
    }
    scenario->memory_window = opts.memory_window;
    const RunResult result = run(*scenario);
    for (const auto& w : result.warnings) {
        err << "warning: " << w << '\n';
    }
    if (!write_file(opts.output_path, err, [&](std::ostream& f) { write_run_csv(f, result); })) {
        return kExitInputError;
    }
    if (opts.dense_path &&
        !write_file(*opts.dense_path, err, [&](std::ostream& f) { write_dense_csv(f, result); })) {
        return kExitInputError;
    }
    out << "scheme " << to_string(scenario->scheme) << ", " << scenario->horizon_steps
        << " steps, final r = " << format_number(result.metrics.r.back()) << '\n';
    return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& output_path, std::ostream& out,
                std::ostream& err) {
    const auto scenario = load(config_path, err);
    if (!scenario) {
        return kExitInputError;
    }
    const Comparison c = compare(*scenario);
    for (const auto& w : c.proposed.warnings) {
        err << "warning: " << w << '\n';
    }
    if (!write_file(output_path, err, [&](std::ostream& f) { write_compare_csv(f, c); })) {
        return kExitInputError;
    }
    const double rp = c.final_r_proposed();
    const double rb = c.final_r_baseline();
    out << "final r: proposed " << format_number(rp) << ", baseline " << format_number(rb);
    if (rp > 0.0) {
        out << ", baseline/proposed = " << format_number(rb / rp);
    } else {
        out << ", baseline/proposed = " << (rb > 0.0 ? "inf" : "n/a (both zero)");
    }
    out << '\n';
    return kExitOk;
}

int cmd_paper_scenario(std::ostream& out) {
    out << scenario_to_json(paper_scenario());
    return kExitOk;
}

}  // namespace fracon::cli
