// Acceptance suite: one PASS/FAIL line per criterion.
//
//     fracon_acceptance                  run every criterion
//     fracon_acceptance --criterion N    run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include "fracon/control.hpp"
#include "fracon/dynamics.hpp"
#include "fracon/fraccalc.hpp"
#include "fracon/graph.hpp"
#include "fracon/sim.hpp"

#include "test_support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fracon;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double oracle_eps(double gamma, double h, double alpha) {
    return gamma * std::pow(h, alpha) / std::tgamma(alpha + 1.0);
}

std::vector<Scenario> random_scenarios(std::size_t count, std::uint64_t seed, std::size_t steps) {
    std::mt19937_64 rng(seed);
    std::vector<Scenario> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(testing::random_certified_scenario(rng, 6, steps));
    }
    return out;
}

// Max deviation of the run from x <- x - eps L x, with eps and L rebuilt from
// the raw inputs.
double perron_gap(const Scenario& s) {
    const RunResult r = run(s);
    const double eps = oracle_eps(s.params.gamma(), s.params.h(), s.params.alpha());
    Vector x = s.x0;
    double gap = 0.0;
    for (const auto& state : r.trajectory.states) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            gap = std::max(gap, std::fabs(state[i] - x[i]));
        }
        x = testing::perron_step(s.graph.adjacency(), x, eps);
    }
    return gap;
}

// Largest ||u_k|| / ||u_0|| over the run.
double control_growth(const Scenario& s) {
    const RunResult r = run(s);
    const double u0 = norm2(r.trajectory.controls[0]);
    double worst = 1.0;
    for (const auto& u : r.trajectory.controls) {
        if (u0 > 0.0) {
            worst = std::max(worst, norm2(u) / u0);
        }
    }
    return worst;
}

Outcome criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const RunResult r = run(paper_scenario());
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double worst = 0.0;
    for (double x : r.trajectory.states.back()) {
        worst = std::max(worst, std::fabs(x - 3.2));
    }
    const double final_r = r.metrics.r.back();
    return {final_r < 1e-2 && worst < 1e-2 && seconds < 1.0,
            "reference scenario: r(t_K) = " + fmt(final_r) + ", max |x_i - 3.2| = " + fmt(worst) +
                ", runtime " + fmt(seconds) + " s"};
}

Outcome criterion_2() {
    Scenario paper = paper_scenario();
    paper.horizon_steps = 500;
    paper.dense_resolution = 1;
    double worst = perron_gap(paper);
    for (const Scenario& s : random_scenarios(20, 2024, 500)) {
        worst = std::max(worst, perron_gap(s));
    }
    return {worst <= 1e-9,
            "trajectory vs Perron recursion, 500 steps, reference + 20 random: max gap " + fmt(worst)};
}

Outcome criterion_3() {
    const Scenario s = paper_scenario();
    const ConditionReport r = check_conditions(s.graph, s.params, s.k_check);
    const double err = std::fabs(r.eps - testing::kPaperEps);
    const bool pass = err <= 1e-12 && r.gain_ok && r.inv_delta_max == 0.5 && r.eps < 0.5;
    return {pass, "eps = " + fmt(r.eps) + " (|err| " + fmt(err) + "), 1/Delta_max = " +
                      fmt(r.inv_delta_max) + ", gain " + (r.gain_ok ? "ok" : "rejected")};
}

Outcome criterion_4() {
    std::ostringstream detail;
    bool pass = true;

    const double paper_growth = control_growth(paper_scenario());
    pass = pass && paper_growth <= 1.0 + 1e-12;
    detail << "reference max ||u_k||/||u_0|| = " << fmt(paper_growth);

    int violations = 0;
    double worst = 1.0;
    for (const Scenario& s : random_scenarios(20, 4040, 300)) {
        const double g = control_growth(s);
        worst = std::max(worst, g);
        if (g > 1.0 + 1e-12) {
            ++violations;
        }
    }
    pass = pass && violations == 0;
    detail << "; random certified: " << violations << "/20 violate (worst " << fmt(worst) << ")";

    // Directed 3-cycle, alpha = 0.6, h = 1, eps = 0.33.
    const double alpha = 0.6;
    Scenario cycle{.params = ScalarParams(FracOrder(alpha), 0.33 * std::tgamma(alpha + 1.0), 1.0),
                   .graph = DiGraph(Matrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}),
                   .x0 = {1.0, 0.0, 0.0},
                   .horizon_steps = 50,
                   .scheme = ControllerScheme::Proposed,
                   .dense_resolution = 1,
                   .k_check = 2000,
                   .memory_window = std::nullopt};
    const bool cycle_certified = check_conditions(cycle.graph, cycle.params, 100'000).certified();
    const double cycle_growth = control_growth(cycle);
    pass = pass && cycle_growth <= 1.0 + 1e-12;
    detail << "; certified=" << (cycle_certified ? "yes" : "no")
           << " directed 3-cycle: " << fmt(cycle_growth);
    return {pass, "control norm never exceeds ||u_0||: " + detail.str()};
}

Outcome criterion_5() {
    const Scenario s = paper_scenario();
    const ConditionReport r = check_conditions(s.graph, s.params, s.k_check);
    // long-double oracle for beta^{k+1} + sum |f(l)|
    const long double a = 0.9L;
    const long double beta = testing::kPaperBeta;
    long double partial = 0.0L;
    long double beta_pow = 1.0L;
    double curve_max = 0.0;
    double curve_gap = 0.0;
    bool curve_ok = r.bound_curve.size() == s.k_check + 1;
    for (std::size_t k = 0; curve_ok && k <= s.k_check; ++k) {
        const long double l = static_cast<long double>(k + 1);
        partial += -(std::pow(l + 1.0L, a) - 2.0L * std::pow(l, a) + std::pow(l - 1.0L, a));
        beta_pow *= beta;
        const double oracle = static_cast<double>(beta_pow + partial);
        curve_gap = std::max(curve_gap, std::fabs(oracle - r.bound_curve[k]));
        curve_max = std::max(curve_max, r.bound_curve[k]);
        curve_ok = oracle <= 1.0 + 1e-12 && r.bound_curve[k] <= 1.0 + 1e-12;
    }
    double sum_gap = 0.0;
    for (std::int64_t count = 1; count <= 10'000; count = count < 100 ? count + 1 : count + 97) {
        sum_gap = std::max(sum_gap, std::fabs(abs_kernel_partial_sum(count, FracOrder(0.9)) -
                                              abs_kernel_partial_sum_direct(count, FracOrder(0.9))));
    }
    sum_gap = std::max(sum_gap, std::fabs(abs_kernel_partial_sum(10'000, FracOrder(0.9)) -
                                          abs_kernel_partial_sum_direct(10'000, FracOrder(0.9))));
    const bool pass = curve_ok && curve_gap <= 1e-12 && sum_gap <= 1e-12 && r.bound_ok;
    return {pass, "bound curve max " + fmt(curve_max) + " over k <= " + std::to_string(s.k_check) +
                      " (oracle gap " + fmt(curve_gap) + "), telescoped vs direct gap " +
                      fmt(sum_gap) + ", tail " + (r.tail_ok ? "certified" : "not certified")};
}

Outcome criterion_6() {
    int failures = 0;
    std::string first;
    for (int step = 1; step <= 19; ++step) {
        const double alpha = 0.05 * step;
        const FracOrder order(alpha);
        double prev = kernel_f(1, order);
        const double f1 = prev;
        for (std::int64_t j = 1; j <= 10'000; ++j) {
            const double f = j == 1 ? f1 : kernel_f(j, order);
            bool ok = f < 0.0 && std::fabs(f) > 0.0 && std::fabs(f) < 1.0;
            if (j > 1) {
                ok = ok && std::fabs(f) < std::fabs(prev);
            }
            if (!ok) {
                ++failures;
                if (first.empty()) {
                    first = " (first at alpha=" + fmt(alpha) + ", j=" + std::to_string(j) + ")";
                }
            }
            prev = f;
        }
        if (!(std::fabs(kernel_f(10'000, order)) < 1e-3 * std::fabs(f1))) {
            ++failures;
        }
        const double oracle_f1 = std::pow(2.0, alpha) - 2.0;
        if (std::fabs(f1 - oracle_f1) > 1e-15) {
            ++failures;
        }
    }
    return {failures == 0, "kernel sign, magnitude, monotone decay over 19 orders x 10^4 lags: " +
                               std::to_string(failures) + " failures" + first};
}

Outcome criterion_7() {
    const Scenario s = paper_scenario();
    const RunResult r = run(s);
    double initial = 0.0;
    for (double v : s.x0) {
        initial += v;
    }
    double worst = 0.0;
    for (const auto& x : r.trajectory.states) {
        double total = 0.0;
        for (double v : x) {
            total += v;
        }
        worst = std::max(worst, std::fabs(total - initial));
    }
    return {worst <= 1e-9, "max |1'x(t_k) - 1'x(t_0)| = " + fmt(worst)};
}

Outcome criterion_8() {
    const Comparison c = compare(paper_scenario());
    const double p = c.final_r_proposed();
    const double b = c.final_r_baseline();
    return {b > p, "final r: proposed " + fmt(p) + ", baseline " + fmt(b) +
                       (p > 0.0 ? ", ratio " + fmt(b / p) : std::string())};
}

Outcome criterion_9() {
    double worst = 0.0;
    for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        for (double h : {0.1, 0.85, 2.0}) {
            const ScalarParams p(FracOrder(alpha), 1.0, h);
            const double c = -1.7;
            const Vector x0{0.25, -3.0};
            ControlHistory hist(2);
            for (int k = 1; k <= 500; ++k) {
                hist.push_back(Vector(2, c));
                const Vector x = propagate_one_sample(x0, hist, p);
                const double inc = c * std::pow(k * h, alpha) / std::tgamma(alpha + 1.0);
                for (std::size_t i = 0; i < 2; ++i) {
                    worst = std::max(worst, std::fabs(x[i] - (x0[i] + inc)));
                }
            }
        }
    }
    return {worst <= 1e-10, "constant input vs c (Kh)^a / Gamma(a+1), K <= 500: max error " + fmt(worst)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3,
                                                         criterion_4, criterion_5, criterion_6,
                                                         criterion_7, criterion_8, criterion_9};
    std::vector<int> selected;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        const int n = std::atoi(argv[2]);
        if (n < 1 || n > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "unknown criterion %s\n", argv[2]);
            return 2;
        }
        selected.push_back(n);
    } else if (argc == 1) {
        for (int n = 1; n <= static_cast<int>(criteria.size()); ++n) {
            selected.push_back(n);
        }
    } else {
        std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
        return 2;
    }

    int failed = 0;
    for (int n : selected) {
        Outcome o;
        try {
            o = criteria[static_cast<std::size_t>(n - 1)]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d: %s\n", o.pass ? "PASS" : "FAIL", n, o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
