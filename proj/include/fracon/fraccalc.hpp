#pragma once

// Scalar fractional-calculus kernels used by the sampled-data consensus
// scheme: the Gamma function, the memory-kernel coefficients
//
//     f(j) = (j+1)^a - 2 j^a + (j-1)^a,   j >= 1,
//
// and the partial sums of |f(j)| that appear in the control-boundedness
// condition. Everything here is a pure function of its arguments.

#include <cstdint>
#include <vector>

namespace fracon {

/// Commensurate fractional order a in the open interval (0, 1).
class FracOrder {
public:
    /// Throws std::invalid_argument unless 0 < alpha < 1.
    explicit FracOrder(double alpha);

    [[nodiscard]] double value() const noexcept { return alpha_; }

    friend bool operator==(const FracOrder&, const FracOrder&) = default;

private:
    double alpha_;
};

/// Gamma function for z > 0 (Lanczos approximation, relative error ~1e-15
/// on (0, 3]). Throws std::domain_error for z <= 0 or non-finite z.
[[nodiscard]] double gamma_fn(double z);

/// a^p - b^p for a >= b >= 0 without cancellation when a and b are close.
[[nodiscard]] double pow_diff(double a, double b, double p);

/// g(s) = s^a - (s-1)^a for s >= 1. Positive and strictly decreasing in s;
/// it is the weight of a unit control held over one sampling interval that
/// ended s-1 intervals ago (in units of h^a / Gamma(a+1)).
[[nodiscard]] double memory_increment(std::int64_t s, FracOrder order);

/// Memory-kernel coefficient f(j). Throws std::invalid_argument for j < 1.
/// Evaluated in a cancellation-free form; supported range j <= 1e6.
[[nodiscard]] double kernel_f(std::int64_t j, FracOrder order);

/// sum_{l=1}^{K} |f(l)| through the telescoped closed form
/// 1 - ((K+1)^a - K^a). K = 0 returns 0.
[[nodiscard]] double abs_kernel_partial_sum(std::int64_t count, FracOrder order);

/// Same sum by compensated direct accumulation of |kernel_f(l)|; O(K).
[[nodiscard]] double abs_kernel_partial_sum_direct(std::int64_t count, FracOrder order);

/// Lazily grown table of f(1), f(2), ... for one order.
class KernelTable {
public:
    explicit KernelTable(FracOrder order) : order_(order) {}

    /// f(j) for j >= 1, extending the table as needed.
    [[nodiscard]] double at(std::int64_t j);

    void reserve(std::int64_t max_j);

    [[nodiscard]] FracOrder order() const noexcept { return order_; }

private:
    FracOrder order_;
    std::vector<double> coeffs_;  // coeffs_[j-1] == f(j)
};

}  // namespace fracon
