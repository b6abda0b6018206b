#pragma once

// Sampled-data distributed consensus controllers and the design-condition
// checks for the memory-compensating scheme.
//
// Proposed scheme, for sample k:
//
//     u_k = -gamma L x(t_k) - sum_{l=1}^{k} f(l) u_{k-l}
//
// The second term cancels the fractional memory carried over from all
// earlier intervals, so the sampled closed loop reduces exactly to
// x(t_{k+1}) = (I - eps L) x(t_k).
//
// The memoryless baseline keeps only the consensus term; it is what a
// design that restarts the fractional integrator at every sample would use.

#include "fracon/dynamics.hpp"
#include "fracon/fraccalc.hpp"
#include "fracon/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fracon {

enum class ControllerScheme { Proposed, BaselineMemoryless };

[[nodiscard]] std::string_view to_string(ControllerScheme scheme) noexcept;
/// Accepts "proposed" and "baseline"; throws std::invalid_argument otherwise.
[[nodiscard]] ControllerScheme parse_scheme(std::string_view text);

/// gamma * sum_j a_ij (x_j - x_i) for every agent, i.e. -gamma L x.
[[nodiscard]] Vector consensus_term(const DiGraph& g, std::span<const double> x, double gamma);

/// Proposed control at step k. `history` must hold exactly u_0 ... u_{k-1};
/// throws std::invalid_argument otherwise.
[[nodiscard]] Vector proposed_control(std::size_t k, std::span<const double> x_k,
                                      const ControlHistory& history, const DiGraph& g,
                                      const ScalarParams& params);

/// Memoryless baseline control -gamma L x(t_k). `k` is accepted for symmetry
/// with proposed_control and does not affect the result.
[[nodiscard]] Vector baseline_control(std::size_t k, std::span<const double> x_k, const DiGraph& g,
                                      const ScalarParams& params);

/// Stateful controller for one trajectory: owns its control history and a
/// cached table of memory coefficients.
class Controller {
public:
    Controller(ControllerScheme scheme, DiGraph graph, ScalarParams params);

    /// Computes u_k from x(t_k), appends it to the history and returns it.
    const Vector& step(std::span<const double> x_k);

    /// The control that step() would return for x_k, without recording it.
    [[nodiscard]] Vector peek(std::span<const double> x_k);

    [[nodiscard]] const ControlHistory& history() const noexcept { return history_; }
    [[nodiscard]] ControllerScheme scheme() const noexcept { return scheme_; }

private:
    ControllerScheme scheme_;
    DiGraph graph_;
    ScalarParams params_;
    KernelTable kernel_;
    ControlHistory history_;
};

/// Result of checking the sufficient conditions for bounded control and
/// average consensus.
struct ConditionReport {
    double eps = 0.0;            // gamma h^a / Gamma(a+1)
    double delta_max = 0.0;
    double inv_delta_max = 0.0;  // 1 / Delta_max
    double lambda2 = 0.0;        // second-smallest eigenvalue of (L + L^T)/2
    double beta = 0.0;           // 1 - gamma lambda2 h^a / Gamma(a+1)
    bool gain_ok = false;        // 0 < eps < 1/Delta_max

    // bound_curve[k] = beta^{k+1} + sum_{l=1}^{k+1} |f(l)|, k = 0..k_check.
    std::vector<double> bound_curve;
    std::size_t k_check = 0;
    bool beta_in_range = false;  // 0 < beta < 1
    bool curve_ok = false;       // bound_curve <= 1 + 1e-12 throughout
    bool tail_ok = false;        // beta^{k+1} <= (k+2)^a - (k+1)^a for every k >= 0
    std::size_t tail_from = 0;   // analytic certificate covers k > tail_from
    bool bound_ok = false;       // beta_in_range && curve_ok && tail_ok

    bool balanced = false;
    bool strongly_connected = false;
    bool assumption1_ok = false;

    // Diagnostic, not part of certification: the per-step contraction of the
    // disagreement L x, compared against beta.
    double contraction_norm = 0.0;
    bool proof_step_ok = false;  // contraction_norm <= beta

    std::vector<std::string> diagnostics;

    [[nodiscard]] bool certified() const noexcept { return gain_ok && bound_ok && assumption1_ok; }
    [[nodiscard]] double bound_min() const;
    [[nodiscard]] double bound_max() const;
};

/// beta^{k+1} + sum_{l=1}^{k+1} |f(l)| with the telescoped partial sum.
[[nodiscard]] double bound_value(double beta, std::size_t k, FracOrder order);

/// Throws std::invalid_argument for k_check < 1.
[[nodiscard]] ConditionReport check_conditions(const DiGraph& g, const ScalarParams& params,
                                               std::size_t k_check);

}  // namespace fracon
