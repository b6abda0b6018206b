#pragma once

// Scenario configuration (JSON) and result tables (CSV).
//
// Config keys: alpha, gamma, h, adjacency (n x n), x0 (n) are required;
// horizon_steps (120), dense_resolution (10), scheme ("proposed"),
// k_check (10 * horizon_steps) are optional. Unknown keys are rejected.

#include "fracon/control.hpp"
#include "fracon/sim.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracon {

/// Malformed or invalid scenario configuration. what() names the offending
/// field, or the line and column for JSON syntax errors.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] Scenario parse_scenario(std::string_view json_text);
[[nodiscard]] Scenario load_scenario(const std::string& path);
[[nodiscard]] std::string scenario_to_json(const Scenario& scenario);

/// Locale-independent decimal with 17 significant digits.
[[nodiscard]] std::string format_number(double value);

/// Header: k,t,x_1..x_n,u_1..u_n,r,u_norm_sq,bound_value,state_sum.
/// Row K carries the control that would be issued at t_K.
void write_run_csv(std::ostream& out, const RunResult& result);
/// Header: t,x_1..x_n.
void write_dense_csv(std::ostream& out, const RunResult& result);
/// Header: k,t,r_proposed,r_baseline,u_norm_sq_proposed,u_norm_sq_baseline.
void write_compare_csv(std::ostream& out, const Comparison& comparison);

/// Human-readable multi-line rendering of a condition report.
void print_report(std::ostream& out, const ConditionReport& report);

}  // namespace fracon
