#include "fracon/control.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fracon {

std::string_view to_string(ControllerScheme scheme) noexcept {
    switch (scheme) {
        case ControllerScheme::Proposed: return "proposed";
        case ControllerScheme::BaselineMemoryless: return "baseline";
    }
    return "unknown";
}

ControllerScheme parse_scheme(std::string_view text) {
    if (text == "proposed") {
        return ControllerScheme::Proposed;
    }
    if (text == "baseline") {
        return ControllerScheme::BaselineMemoryless;
    }
    throw std::invalid_argument("unknown controller scheme '" + std::string(text) +
                                "' (expected \"proposed\" or \"baseline\")");
}

Vector consensus_term(const DiGraph& g, std::span<const double> x, double gamma) {
    if (x.size() != g.size()) {
        throw std::invalid_argument("state dimension does not match graph size");
    }
    const std::size_t n = g.size();
    Vector u(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += g.weight(i, j) * (x[j] - x[i]);
        }
        u[i] = gamma * acc;
    }
    return u;
}

namespace {

// u -= sum_{l=1}^{k} f(l) u_{k-l}, with history holding u_0 ... u_{k-1}.
template <typename Coeff>
void subtract_memory(Vector& u, const ControlHistory& history, Coeff&& coeff) {
    const std::size_t k = history.size();
    for (std::size_t l = 1; l <= k; ++l) {
        const double f = coeff(static_cast<std::int64_t>(l));
        const Vector& past = history[k - l];
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] -= f * past[i];
        }
    }
}

}  // namespace

Vector proposed_control(std::size_t k, std::span<const double> x_k, const ControlHistory& history,
                        const DiGraph& g, const ScalarParams& params) {
    if (history.size() != k) {
        throw std::invalid_argument("proposed_control: step " + std::to_string(k) +
                                    " needs exactly " + std::to_string(k) +
                                    " past controls, history has " +
                                    std::to_string(history.size()));
    }
    if (history.dimension() != g.size()) {
        throw std::invalid_argument("proposed_control: history dimension does not match graph");
    }
    Vector u = consensus_term(g, x_k, params.gamma());
    subtract_memory(u, history, [&](std::int64_t l) { return kernel_f(l, params.order()); });
    return u;
}

Vector baseline_control(std::size_t /*k*/, std::span<const double> x_k, const DiGraph& g,
                        const ScalarParams& params) {
    return consensus_term(g, x_k, params.gamma());
}

Controller::Controller(ControllerScheme scheme, DiGraph graph, ScalarParams params)
    : scheme_(scheme),
      graph_(std::move(graph)),
      params_(params),
      kernel_(params.order()),
      history_(graph_.size()) {}

Vector Controller::peek(std::span<const double> x_k) {
    Vector u = consensus_term(graph_, x_k, params_.gamma());
    if (scheme_ == ControllerScheme::Proposed) {
        subtract_memory(u, history_, [&](std::int64_t l) { return kernel_.at(l); });
    }
    return u;
}

const Vector& Controller::step(std::span<const double> x_k) {
    history_.push_back(peek(x_k));
    return history_.back();
}

double ConditionReport::bound_min() const {
    return bound_curve.empty() ? 0.0 : *std::min_element(bound_curve.begin(), bound_curve.end());
}

double ConditionReport::bound_max() const {
    return bound_curve.empty() ? 0.0 : *std::max_element(bound_curve.begin(), bound_curve.end());
}

double bound_value(double beta, std::size_t k, FracOrder order) {
    const auto kk = static_cast<std::int64_t>(k);
    return std::pow(beta, static_cast<double>(k + 1)) + abs_kernel_partial_sum(kk + 1, order);
}

namespace {

constexpr double kBoundSlack = 1e-12;
constexpr std::int64_t kTailSearchCap = 10'000'000;

// Finds K such that beta^{k+1} <= (k+2)^a - (k+1)^a is guaranteed for every
// k > K, using (k+2)^a - (k+1)^a > a (k+2)^{a-1}. The log-ratio
//   phi(k) = (k+1) ln beta + (1-a) ln(k+2)
// is decreasing once k + 2 > (1-a) / (-ln beta); any K past that point with
// phi(K) <= ln a certifies the tail. Returns nullopt if K would exceed the cap.
std::optional<std::int64_t> analytic_tail_start(double beta, double alpha) {
    const double log_beta = std::log(beta);
    const double log_alpha = std::log(alpha);
    auto phi = [&](std::int64_t k) {
        return static_cast<double>(k + 1) * log_beta +
               (1.0 - alpha) * std::log(static_cast<double>(k + 2));
    };
    const double turn = (1.0 - alpha) / (-log_beta) - 2.0;
    std::int64_t lo = turn > 0.0 ? static_cast<std::int64_t>(std::ceil(turn)) : 0;
    if (phi(lo) <= log_alpha) {
        return lo;
    }
    std::int64_t hi = std::max<std::int64_t>(lo + 1, 2 * lo);
    while (phi(hi) > log_alpha) {
        if (hi >= kTailSearchCap) {
            return std::nullopt;
        }
        lo = hi;
        hi = std::min(2 * hi, kTailSearchCap);
    }
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (phi(mid) <= log_alpha ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

ConditionReport check_conditions(const DiGraph& g, const ScalarParams& params, std::size_t k_check) {
    if (k_check < 1) {
        throw std::invalid_argument("check_conditions: k_check must be >= 1");
    }
    const LaplacianBundle bundle = build_bundle(g);
    const double alpha = params.alpha();

    ConditionReport rep;
    rep.eps = params.eps();
    rep.delta_max = bundle.delta_max;
    rep.inv_delta_max = bundle.delta_max > 0.0 ? 1.0 / bundle.delta_max
                                               : std::numeric_limits<double>::infinity();
    rep.lambda2 = bundle.lambda2;
    rep.beta = 1.0 - params.gamma() * bundle.lambda2 * params.step_gain();
    rep.gain_ok = rep.eps > 0.0 && rep.eps < rep.inv_delta_max;
    if (!rep.gain_ok) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "gain condition violated: need 0 < eps < 1/Delta_max, eps = " << rep.eps
            << ", 1/Delta_max = " << rep.inv_delta_max;
        rep.diagnostics.push_back(msg.str());
    }

    rep.k_check = k_check;
    rep.bound_curve.reserve(k_check + 1);
    for (std::size_t k = 0; k <= k_check; ++k) {
        rep.bound_curve.push_back(bound_value(rep.beta, k, params.order()));
    }
    rep.curve_ok = std::all_of(rep.bound_curve.begin(), rep.bound_curve.end(),
                               [](double v) { return v <= 1.0 + kBoundSlack; });
    if (!rep.curve_ok) {
        const auto bad = std::find_if(rep.bound_curve.begin(), rep.bound_curve.end(),
                                      [](double v) { return v > 1.0 + kBoundSlack; });
        rep.diagnostics.push_back("bound curve exceeds 1 first at k = " +
                                  std::to_string(bad - rep.bound_curve.begin()));
    }

    rep.beta_in_range = rep.beta > 0.0 && rep.beta < 1.0;
    if (!rep.beta_in_range) {
        rep.diagnostics.push_back(
            rep.beta <= -1.0 || rep.beta >= 1.0
                ? "beta outside (-1, 1): need 0 < gamma lambda2 h^a / Gamma(a+1) < 2"
                : "beta <= 0: outside the certified regime (contraction factor must be positive)");
    } else if (const auto tail = analytic_tail_start(rep.beta, alpha)) {
        rep.tail_from = static_cast<std::size_t>(*tail);
        rep.tail_ok = true;
        for (std::int64_t k = 0; k <= *tail; ++k) {
            const double lhs = std::pow(rep.beta, static_cast<double>(k + 1));
            if (lhs > memory_increment(k + 2, params.order()) + kBoundSlack) {
                rep.tail_ok = false;
                rep.diagnostics.push_back("tail check fails at k = " + std::to_string(k));
                break;
            }
        }
    } else {
        rep.diagnostics.push_back("tail check: beta too close to 1 to certify all k");
    }
    rep.bound_ok = rep.beta_in_range && rep.curve_ok && rep.tail_ok;

    rep.balanced = is_balanced(g);
    rep.strongly_connected = is_strongly_connected(g);
    rep.assumption1_ok = rep.balanced && rep.strongly_connected;
    if (!rep.balanced) {
        rep.diagnostics.push_back("graph is not balanced");
    }
    if (!rep.strongly_connected) {
        rep.diagnostics.push_back("graph is not strongly connected");
    }

    rep.contraction_norm = restricted_contraction_norm(perron_matrix(bundle, rep.eps));
    rep.proof_step_ok = rep.contraction_norm <= rep.beta + kBoundSlack;
    return rep;
}

}  // namespace fracon
