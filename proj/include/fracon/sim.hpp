#pragma once

// Closed-loop scenario runner: controller + exact fractional dynamics, the
// convergence metrics, and the side-by-side comparison of the two schemes.

#include "fracon/control.hpp"
#include "fracon/dynamics.hpp"
#include "fracon/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fracon {

struct Scenario {
    ScalarParams params;
    DiGraph graph;
    Vector x0;
    std::size_t horizon_steps = 120;
    ControllerScheme scheme = ControllerScheme::Proposed;
    std::size_t dense_resolution = 10;  // points per sampling interval
    std::size_t k_check = 1200;
    /// Experimental short-memory plant; nullopt = exact full-memory dynamics.
    std::optional<std::size_t> memory_window;

    /// Throws std::invalid_argument if x0 does not match the graph, the
    /// horizon is zero, or dense_resolution / k_check is zero.
    void validate() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// The reference five-agent experiment: alpha = 0.9, gamma = 0.15, h = 0.85 s,
/// x0 = [4.5, 5, 6, 1.5, -1] and the balanced, strongly connected graph
/// a14 = a15 = a21 = a23 = a31 = a32 = a42 = a43 = a54 = 1.
[[nodiscard]] Scenario paper_scenario();

struct MetricsSeries {
    double x_final = 0.0;          // mean of x(t_0)
    std::vector<double> r;         // (1/N) sum_i |x_i(t_k) - x_final|, k = 0..K
    std::vector<double> u_norm_sq; // u_k^T u_k, k = 0..K (entry K is the control issued at t_K)
    std::vector<double> bound_curve;  // beta^{k+1} + sum_{l<=k+1} |f(l)|, k = 0..K
    std::vector<double> state_sum;    // 1^T x(t_k), k = 0..K
};

struct RunResult {
    Trajectory trajectory;
    Vector terminal_control;  // u_K, computed but not applied
    MetricsSeries metrics;
    ConditionReport conditions;
    std::vector<std::string> warnings;
    /// max_k ||x_trunc(t_k) - x_exact(t_k)||_inf when memory_window is set.
    std::optional<double> truncation_error;
};

/// Runs the scenario. Condition failures are reported as warnings, never
/// thrown; invalid scenarios throw std::invalid_argument.
[[nodiscard]] RunResult run(const Scenario& scenario);

struct Comparison {
    RunResult proposed;
    RunResult baseline;

    [[nodiscard]] double final_r_proposed() const { return proposed.metrics.r.back(); }
    [[nodiscard]] double final_r_baseline() const { return baseline.metrics.r.back(); }
};

/// Runs both schemes on identical inputs against the same exact dynamics
/// (the scenario's own scheme field is ignored). The two runs execute
/// concurrently.
[[nodiscard]] Comparison compare(const Scenario& scenario);

}  // namespace fracon
