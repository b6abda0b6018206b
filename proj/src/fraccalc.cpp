#include "fracon/fraccalc.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracon {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("fractional order must lie in (0, 1), got " +
                                    std::to_string(alpha));
    }
}

namespace {

// Lanczos coefficients, g = 7, n = 9 (Numerical Recipes / Godfrey set).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_gamma(double z) {
    // Valid for z >= 0.5; callers reflect below that.
    z -= 1.0;
    double acc = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        acc += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double z) {
    if (!std::isfinite(z) || z <= 0.0) {
        throw std::domain_error("gamma_fn: argument must be positive and finite");
    }
    if (z < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
        return std::numbers::pi / (std::sin(std::numbers::pi * z) * lanczos_gamma(1.0 - z));
    }
    return lanczos_gamma(z);
}

double pow_diff(double a, double b, double p) {
    if (b <= 0.0) {
        return std::pow(a, p);
    }
    // a^p - b^p = a^p * (1 - (b/a)^p) = -a^p * expm1(p * log1p(-(a-b)/a))
    return -std::pow(a, p) * std::expm1(p * std::log1p(-(a - b) / a));
}

double memory_increment(std::int64_t s, FracOrder order) {
    if (s < 1) {
        throw std::invalid_argument("memory_increment: s must be >= 1");
    }
    const auto sd = static_cast<double>(s);
    return pow_diff(sd, sd - 1.0, order.value());
}

double kernel_f(std::int64_t j, FracOrder order) {
    if (j < 1) {
        throw std::invalid_argument("kernel_f: j must be >= 1");
    }
    const double a = order.value();
    const auto jd = static_cast<double>(j);
    // j^a [ ((1+1/j)^a - 1) + ((1-1/j)^a - 1) ]; at j = 1 the second term is -1.
    const double up = std::expm1(a * std::log1p(1.0 / jd));
    const double down = (j == 1) ? -1.0 : std::expm1(a * std::log1p(-1.0 / jd));
    return std::pow(jd, a) * (up + down);
}

double abs_kernel_partial_sum(std::int64_t count, FracOrder order) {
    if (count < 0) {
        throw std::invalid_argument("abs_kernel_partial_sum: count must be >= 0");
    }
    if (count == 0) {
        return 0.0;
    }
    return 1.0 - memory_increment(count + 1, order);
}

double abs_kernel_partial_sum_direct(std::int64_t count, FracOrder order) {
    if (count < 0) {
        throw std::invalid_argument("abs_kernel_partial_sum_direct: count must be >= 0");
    }
    // Kahan summation; terms are positive and decreasing.
    double sum = 0.0;
    double carry = 0.0;
    for (std::int64_t l = 1; l <= count; ++l) {
        const double y = std::fabs(kernel_f(l, order)) - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double KernelTable::at(std::int64_t j) {
    if (j < 1) {
        throw std::invalid_argument("KernelTable::at: j must be >= 1");
    }
    reserve(j);
    return coeffs_[static_cast<std::size_t>(j - 1)];
}

void KernelTable::reserve(std::int64_t max_j) {
    while (static_cast<std::int64_t>(coeffs_.size()) < max_j) {
        coeffs_.push_back(kernel_f(static_cast<std::int64_t>(coeffs_.size()) + 1, order_));
    }
}

}  // namespace fracon
