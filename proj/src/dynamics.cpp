#include "fracon/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracon {

ScalarParams::ScalarParams(FracOrder order, double gamma, double h)
    : order_(order), gamma_(gamma), h_(h), step_gain_(0.0) {
    if (!std::isfinite(gamma) || gamma < 0.0) {
        throw std::invalid_argument("gamma must be finite and >= 0");
    }
    if (!std::isfinite(h) || h <= 0.0) {
        throw std::invalid_argument("sampling period h must be finite and > 0");
    }
    step_gain_ = std::pow(h, order.value()) / gamma_fn(order.value() + 1.0);
}

void ControlHistory::push_back(Vector u) {
    if (u.size() != dim_) {
        throw std::invalid_argument("control of dimension " + std::to_string(u.size()) +
                                    " pushed into history of dimension " + std::to_string(dim_));
    }
    entries_.push_back(std::move(u));
}

namespace {

void require_dims(std::span<const double> x, const ControlHistory& history) {
    if (x.size() != history.dimension()) {
        throw std::invalid_argument("state dimension " + std::to_string(x.size()) +
                                    " does not match control dimension " +
                                    std::to_string(history.dimension()));
    }
}

void axpy(double a, const Vector& x, Vector& y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += a * x[i];
    }
}

}  // namespace

Vector propagate_one_sample(std::span<const double> x0, const ControlHistory& history,
                            const ScalarParams& params) {
    if (history.empty()) {
        throw std::invalid_argument("propagate_one_sample: history must contain u_0");
    }
    require_dims(x0, history);
    const auto steps = static_cast<std::int64_t>(history.size());
    Vector x(x0.begin(), x0.end());
    for (std::int64_t j = 0; j < steps; ++j) {
        const double w = params.step_gain() * memory_increment(steps - j, params.order());
        axpy(w, history[static_cast<std::size_t>(j)], x);
    }
    return x;
}

Vector propagate_truncated(std::span<const double> x_k, const ControlHistory& history,
                           const ScalarParams& params, std::size_t window) {
    if (history.empty()) {
        throw std::invalid_argument("propagate_truncated: history must contain u_0");
    }
    require_dims(x_k, history);
    const std::size_t k = history.size() - 1;
    Vector x(x_k.begin(), x_k.end());
    axpy(params.step_gain(), history[k], x);
    const std::size_t last = std::min(k, window);
    for (std::size_t l = 1; l <= last; ++l) {
        const double f = kernel_f(static_cast<std::int64_t>(l), params.order());
        axpy(params.step_gain() * f, history[k - l], x);
    }
    return x;
}

Vector dense_state(double t, std::span<const double> x0, const ControlHistory& history,
                   const ScalarParams& params) {
    require_dims(x0, history);
    const double span = static_cast<double>(history.size()) * params.h();
    if (!(t >= 0.0 && t <= span)) {
        throw std::out_of_range("dense_state: t = " + std::to_string(t) +
                                " outside the covered interval [0, " + std::to_string(span) + "]");
    }
    const double a = params.alpha();
    double tau = t / params.h();  // in sampling periods
    if (const double nearest = std::round(tau);
        std::fabs(tau - nearest) <= 1e-12 * std::max(1.0, nearest)) {
        tau = nearest;
    }
    Vector x(x0.begin(), x0.end());
    const double scale = params.step_gain();
    for (std::size_t j = 0; j < history.size(); ++j) {
        const double start = static_cast<double>(j);
        if (start >= tau) {
            break;
        }
        const double end = std::min(start + 1.0, tau);
        axpy(scale * pow_diff(tau - start, tau - end, a), history[j], x);
    }
    return x;
}

std::vector<DensePoint> dense_samples(std::span<const double> x0, const ControlHistory& history,
                                      const ScalarParams& params, std::size_t per_interval) {
    if (per_interval == 0) {
        throw std::invalid_argument("dense_samples: per_interval must be >= 1");
    }
    std::vector<DensePoint> out;
    out.reserve(history.size() * per_interval + 1);
    for (std::size_t k = 0; k < history.size(); ++k) {
        for (std::size_t i = 0; i < per_interval; ++i) {
            const double t = (static_cast<double>(k) +
                              static_cast<double>(i) / static_cast<double>(per_interval)) *
                             params.h();
            out.push_back({t, dense_state(t, x0, history, params)});
        }
    }
    const double t_end = static_cast<double>(history.size()) * params.h();
    out.push_back({t_end, dense_state(t_end, x0, history, params)});
    return out;
}

}  // namespace fracon
