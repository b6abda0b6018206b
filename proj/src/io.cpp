#include "fracon/io.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace fracon {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "alpha", "gamma", "h", "horizon_steps", "dense_resolution",
    "adjacency", "x0", "scheme", "k_check",
};

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ConfigError("field '" + field + "': " + message);
}

double get_number(const json& j, const std::string& field) {
    if (!j.is_number()) {
        fail(field, "expected a number");
    }
    return j.get<double>();
}

std::size_t get_count(const json& doc, const std::string& field, std::size_t fallback) {
    if (!doc.contains(field)) {
        return fallback;
    }
    const json& j = doc.at(field);
    if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
        fail(field, "expected a positive integer");
    }
    return j.get<std::size_t>();
}

const json& require(const json& doc, const std::string& field) {
    if (!doc.contains(field)) {
        fail(field, "missing required key");
    }
    return doc.at(field);
}

Vector get_vector(const json& j, const std::string& field) {
    if (!j.is_array()) {
        fail(field, "expected an array of numbers");
    }
    Vector v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        v.push_back(get_number(j[i], field + "[" + std::to_string(i) + "]"));
    }
    return v;
}

std::string shortest(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("JSON syntax error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (!kKnownKeys.contains(item.key())) {
            fail(item.key(), "unknown key");
        }
    }

    const double alpha = get_number(require(doc, "alpha"), "alpha");
    const double gamma = get_number(require(doc, "gamma"), "gamma");
    const double h = get_number(require(doc, "h"), "h");

    const json& adj_json = require(doc, "adjacency");
    if (!adj_json.is_array()) {
        fail("adjacency", "expected an array of rows");
    }
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < adj_json.size(); ++i) {
        rows.push_back(get_vector(adj_json[i], "adjacency[" + std::to_string(i) + "]"));
        if (rows.back().size() != adj_json.size()) {
            fail("adjacency[" + std::to_string(i) + "]",
                 "expected " + std::to_string(adj_json.size()) + " entries (square matrix), got " +
                     std::to_string(rows.back().size()));
        }
    }

    Vector x0 = get_vector(require(doc, "x0"), "x0");
    const std::size_t horizon = get_count(doc, "horizon_steps", 120);

    ControllerScheme scheme = ControllerScheme::Proposed;
    if (doc.contains("scheme")) {
        if (!doc["scheme"].is_string()) {
            fail("scheme", "expected a string");
        }
        try {
            scheme = parse_scheme(doc["scheme"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail("scheme", e.what());
        }
    }

    auto guarded = [](const std::string& field, auto&& make) {
        try {
            return make();
        } catch (const std::invalid_argument& e) {
            fail(field, e.what());
        }
    };
    const FracOrder order = guarded("alpha", [&] { return FracOrder(alpha); });
    const ScalarParams params = guarded(gamma < 0.0 ? "gamma" : "h",
                                        [&] { return ScalarParams(order, gamma, h); });
    DiGraph graph = guarded("adjacency", [&] { return DiGraph(Matrix::from_rows(rows)); });

    Scenario s{
        .params = params,
        .graph = std::move(graph),
        .x0 = std::move(x0),
        .horizon_steps = horizon,
        .scheme = scheme,
        .dense_resolution = get_count(doc, "dense_resolution", 10),
        .k_check = get_count(doc, "k_check", 10 * horizon),
        .memory_window = std::nullopt,
    };
    guarded("x0", [&] {
        s.validate();
        return 0;
    });
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
    std::ostringstream out;
    const Matrix& a = s.graph.adjacency();
    out << "{\n";
    out << "  \"alpha\": " << shortest(s.params.alpha()) << ",\n";
    out << "  \"gamma\": " << shortest(s.params.gamma()) << ",\n";
    out << "  \"h\": " << shortest(s.params.h()) << ",\n";
    out << "  \"horizon_steps\": " << s.horizon_steps << ",\n";
    out << "  \"dense_resolution\": " << s.dense_resolution << ",\n";
    out << "  \"k_check\": " << s.k_check << ",\n";
    out << "  \"scheme\": \"" << to_string(s.scheme) << "\",\n";
    out << "  \"adjacency\": [\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out << "    [";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out << (j ? ", " : "") << shortest(a(i, j));
        }
        out << "]" << (i + 1 < a.rows() ? "," : "") << "\n";
    }
    out << "  ],\n";
    out << "  \"x0\": [";
    for (std::size_t i = 0; i < s.x0.size(); ++i) {
        out << (i ? ", " : "") << shortest(s.x0[i]);
    }
    out << "]\n}\n";
    return out.str();
}

std::string format_number(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return {buf, res.ptr};
}

void write_run_csv(std::ostream& out, const RunResult& result) {
    const auto& traj = result.trajectory;
    const std::size_t n = traj.states.front().size();
    out << "k,t";
    for (std::size_t i = 1; i <= n; ++i) {
        out << ",x_" << i;
    }
    for (std::size_t i = 1; i <= n; ++i) {
        out << ",u_" << i;
    }
    out << ",r,u_norm_sq,bound_value,state_sum\n";
    const auto& m = result.metrics;
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
        const Vector& u = k < traj.controls.size() ? traj.controls[k] : result.terminal_control;
        out << k << ',' << format_number(traj.sample_time(k));
        for (double v : traj.states[k]) {
            out << ',' << format_number(v);
        }
        for (double v : u) {
            out << ',' << format_number(v);
        }
        out << ',' << format_number(m.r[k]) << ',' << format_number(m.u_norm_sq[k]) << ','
            << format_number(m.bound_curve[k]) << ',' << format_number(m.state_sum[k]) << '\n';
    }
}

void write_dense_csv(std::ostream& out, const RunResult& result) {
    const std::size_t n = result.trajectory.states.front().size();
    out << 't';
    for (std::size_t i = 1; i <= n; ++i) {
        out << ",x_" << i;
    }
    out << '\n';
    for (const auto& p : result.trajectory.dense) {
        out << format_number(p.t);
        for (double v : p.x) {
            out << ',' << format_number(v);
        }
        out << '\n';
    }
}

void write_compare_csv(std::ostream& out, const Comparison& c) {
    out << "k,t,r_proposed,r_baseline,u_norm_sq_proposed,u_norm_sq_baseline\n";
    const auto& p = c.proposed.metrics;
    const auto& b = c.baseline.metrics;
    for (std::size_t k = 0; k < p.r.size(); ++k) {
        out << k << ',' << format_number(c.proposed.trajectory.sample_time(k)) << ','
            << format_number(p.r[k]) << ',' << format_number(b.r[k]) << ','
            << format_number(p.u_norm_sq[k]) << ',' << format_number(b.u_norm_sq[k]) << '\n';
    }
}

void print_report(std::ostream& out, const ConditionReport& r) {
    auto verdict = [](bool ok) { return ok ? "ok" : "FAILED"; };
    out << "eps = gamma h^a / Gamma(a+1)  " << format_number(r.eps) << '\n'
        << "1 / Delta_max                 " << format_number(r.inv_delta_max) << '\n'
        << "gain condition                " << verdict(r.gain_ok) << '\n'
        << "lambda2(L_s)                  " << format_number(r.lambda2) << '\n'
        << "beta                          " << format_number(r.beta) << '\n'
        << "bound curve k = 0.." << r.k_check << "     min " << format_number(r.bound_min())
        << ", max " << format_number(r.bound_max()) << '\n'
        << "bound condition               " << verdict(r.bound_ok);
    if (r.tail_ok) {
        out << " (tail certified analytically beyond k = " << r.tail_from << ")";
    }
    out << '\n'
        << "balanced                      " << (r.balanced ? "yes" : "no") << '\n'
        << "strongly connected            " << (r.strongly_connected ? "yes" : "no") << '\n'
        << "assumption 1                  " << verdict(r.assumption1_ok) << '\n'
        << "disagreement contraction      " << format_number(r.contraction_norm)
        << (r.proof_step_ok ? " (<= beta)" : " (> beta, diagnostic only)") << '\n';
    for (const auto& d : r.diagnostics) {
        out << "note: " << d << '\n';
    }
    out << (r.certified() ? "CERTIFIED" : "NOT CERTIFIED") << '\n';
}

}  // namespace fracon
