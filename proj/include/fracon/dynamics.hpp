#pragma once

// Exact evolution of N scalar Caputo fractional integrators
//
//     D^a x_i(t) = u_i(t),   t >= t_0,
//
// under zero-order-hold control. Because the input is piecewise constant,
// the Volterra integral form of the solution integrates in closed form over
// every sampling interval, so the state at any instant is an exact finite
// sum over the whole control history starting at t_0.
//
// Times are measured from t_0; sample instant k is k * h.

#include "fracon/fraccalc.hpp"
#include "fracon/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fracon {

/// Order, gain and sampling period plus the derived integrated gain
/// eps = gamma * h^a / Gamma(a + 1).
class ScalarParams {
public:
    /// Throws std::invalid_argument for gamma < 0 or h <= 0 (or non-finite).
    ScalarParams(FracOrder order, double gamma, double h);

    [[nodiscard]] FracOrder order() const noexcept { return order_; }
    [[nodiscard]] double alpha() const noexcept { return order_.value(); }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    /// h^a / Gamma(a + 1): state response to a unit input held for one period.
    [[nodiscard]] double step_gain() const noexcept { return step_gain_; }
    [[nodiscard]] double eps() const noexcept { return gamma_ * step_gain_; }

    friend bool operator==(const ScalarParams&, const ScalarParams&) = default;

private:
    FracOrder order_;
    double gamma_;
    double h_;
    double step_gain_;
};

/// Controls u_0, u_1, ... applied on consecutive sampling intervals.
class ControlHistory {
public:
    explicit ControlHistory(std::size_t dimension) : dim_(dimension) {}

    /// Throws std::invalid_argument on a dimension mismatch.
    void push_back(Vector u);

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_; }
    [[nodiscard]] const Vector& operator[](std::size_t j) const { return entries_[j]; }
    [[nodiscard]] const Vector& back() const { return entries_.back(); }

    [[nodiscard]] auto begin() const noexcept { return entries_.begin(); }
    [[nodiscard]] auto end() const noexcept { return entries_.end(); }

private:
    std::size_t dim_;
    std::vector<Vector> entries_;
};

struct DensePoint {
    double t;
    Vector x;
};

struct Trajectory {
    double h = 0.0;
    std::vector<Vector> states;     // x(t_0), ..., x(t_K)
    ControlHistory controls{0};     // u_0, ..., u_{K-1}
    std::vector<DensePoint> dense;  // optional inter-sample reconstruction

    [[nodiscard]] std::size_t steps() const noexcept { return controls.size(); }
    /// t_k = k * h (integer multiple, no accumulated drift).
    [[nodiscard]] double sample_time(std::size_t k) const noexcept {
        return static_cast<double>(k) * h;
    }
};

/// x(t_{k+1}) where k + 1 = history.size(), from the t_0-anchored exact sum
///   x(t_0) + h^a/Gamma(a+1) * sum_j [ (k+1-j)^a - (k-j)^a ] u_j.
/// Throws std::invalid_argument for an empty history or dimension mismatch.
[[nodiscard]] Vector propagate_one_sample(std::span<const double> x0, const ControlHistory& history,
                                          const ScalarParams& params);

/// Short-memory approximation of the same step: starts from x(t_k) and keeps
/// only the memory terms f(l) u_{k-l} with l <= window. Exact when
/// window >= k. Experimental; callers should report its deviation from
/// propagate_one_sample.
[[nodiscard]] Vector propagate_truncated(std::span<const double> x_k, const ControlHistory& history,
                                         const ScalarParams& params, std::size_t window);

/// x(t) for 0 <= t <= history.size() * h (t measured from t_0). Throws
/// std::out_of_range outside that span. Coincides with
/// propagate_one_sample at sample instants.
[[nodiscard]] Vector dense_state(double t, std::span<const double> x0, const ControlHistory& history,
                                 const ScalarParams& params);

/// dense_state evaluated at `per_interval` evenly spaced points inside every
/// sampling interval, plus the final instant.
[[nodiscard]] std::vector<DensePoint> dense_samples(std::span<const double> x0,
                                                    const ControlHistory& history,
                                                    const ScalarParams& params,
                                                    std::size_t per_interval);

}  // namespace fracon
