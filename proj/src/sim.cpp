#include "fracon/sim.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fracon {

void Scenario::validate() const {
    if (x0.size() != graph.size()) {
        throw std::invalid_argument("x0 has " + std::to_string(x0.size()) +
                                    " entries but the graph has " + std::to_string(graph.size()) +
                                    " agents");
    }
    if (horizon_steps < 1) {
        throw std::invalid_argument("horizon_steps must be >= 1");
    }
    if (dense_resolution < 1) {
        throw std::invalid_argument("dense_resolution must be >= 1");
    }
    if (k_check < 1) {
        throw std::invalid_argument("k_check must be >= 1");
    }
    for (std::size_t i = 0; i < x0.size(); ++i) {
        if (!std::isfinite(x0[i])) {
            throw std::invalid_argument("x0[" + std::to_string(i) + "] is not finite");
        }
    }
}

Scenario paper_scenario() {
    Matrix adj(5, 5);
    for (auto [i, j] : {std::pair{1, 4}, {1, 5}, {2, 1}, {2, 3}, {3, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 4}}) {
        adj(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1.0;
    }
    return Scenario{
        .params = ScalarParams(FracOrder(0.9), 0.15, 0.85),
        .graph = DiGraph(std::move(adj)),
        .x0 = {4.5, 5.0, 6.0, 1.5, -1.0},
        .horizon_steps = 120,
        .scheme = ControllerScheme::Proposed,
        .dense_resolution = 10,
        .k_check = 1200,
        .memory_window = std::nullopt,
    };
}

namespace {

double mean_abs_error(const Vector& x, double target) {
    double acc = 0.0;
    for (double v : x) {
        acc += std::fabs(v - target);
    }
    return acc / static_cast<double>(x.size());
}

}  // namespace

RunResult run(const Scenario& scenario) {
    scenario.validate();
    const ScalarParams& params = scenario.params;
    const std::size_t steps = scenario.horizon_steps;

    RunResult out;
    out.conditions = check_conditions(scenario.graph, params, scenario.k_check);
    if (!out.conditions.certified()) {
        out.warnings.emplace_back("conditions not certified; simulating anyway");
        for (const auto& d : out.conditions.diagnostics) {
            out.warnings.push_back(d);
        }
    }

    Controller controller(scenario.scheme, scenario.graph, params);
    Trajectory& traj = out.trajectory;
    traj.h = params.h();
    traj.states.reserve(steps + 1);
    traj.states.push_back(scenario.x0);

    for (std::size_t k = 0; k < steps; ++k) {
        controller.step(traj.states.back());
        traj.states.push_back(
            scenario.memory_window
                ? propagate_truncated(traj.states.back(), controller.history(), params,
                                      *scenario.memory_window)
                : propagate_one_sample(scenario.x0, controller.history(), params));
    }
    if (scenario.memory_window) {
        // The truncated plant feeds back into the controller, so the error is
        // measured against a full-memory propagation of the same controls.
        double trunc_err = 0.0;
        ControlHistory partial(scenario.x0.size());
        for (std::size_t k = 0; k < steps; ++k) {
            partial.push_back(controller.history()[k]);
            const Vector exact = propagate_one_sample(scenario.x0, partial, params);
            for (std::size_t i = 0; i < exact.size(); ++i) {
                trunc_err = std::max(trunc_err, std::fabs(traj.states[k + 1][i] - exact[i]));
            }
        }
        out.truncation_error = trunc_err;
        std::ostringstream msg;
        msg.precision(6);
        msg << "memory truncated to " << *scenario.memory_window
            << " intervals; max deviation from exact dynamics = " << trunc_err;
        out.warnings.push_back(msg.str());
    }
    traj.controls = controller.history();
    out.terminal_control = controller.peek(traj.states.back());
    traj.dense = dense_samples(scenario.x0, traj.controls, params, scenario.dense_resolution);

    MetricsSeries& m = out.metrics;
    m.x_final = sum(scenario.x0) / static_cast<double>(scenario.x0.size());
    for (std::size_t k = 0; k <= steps; ++k) {
        const Vector& x = traj.states[k];
        const Vector& u = k < steps ? traj.controls[k] : out.terminal_control;
        m.r.push_back(mean_abs_error(x, m.x_final));
        m.u_norm_sq.push_back(dot(u, u));
        m.bound_curve.push_back(bound_value(out.conditions.beta, k, params.order()));
        m.state_sum.push_back(sum(x));
    }
    return out;
}

Comparison compare(const Scenario& scenario) {
    Scenario proposed = scenario;
    proposed.scheme = ControllerScheme::Proposed;
    Scenario baseline = scenario;
    baseline.scheme = ControllerScheme::BaselineMemoryless;
    auto pending = std::async(std::launch::async, [&baseline] { return run(baseline); });
    Comparison c{.proposed = run(proposed), .baseline = {}};
    c.baseline = pending.get();
    return c;
}

}  // namespace fracon
