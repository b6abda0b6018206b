#include "fracon/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracon {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
    return "adjacency[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

// Nodes reachable from `start`; `forward` follows j -> i for m(i, j) > 0,
// otherwise the reversed edges.
std::vector<bool> reachable(const Matrix& m, std::size_t start, bool forward) {
    const std::size_t n = m.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v || seen[w]) {
                continue;
            }
            const double weight = forward ? m(w, v) : m(v, w);
            if (weight > 0.0) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

DiGraph::DiGraph(Matrix adjacency) : adj_(std::move(adjacency)) {
    if (!adj_.is_square()) {
        throw std::invalid_argument("adjacency must be square, got " +
                                    std::to_string(adj_.rows()) + "x" +
                                    std::to_string(adj_.cols()));
    }
    if (adj_.rows() < 2) {
        throw std::invalid_argument("graph needs at least 2 agents");
    }
    for (std::size_t i = 0; i < adj_.rows(); ++i) {
        for (std::size_t j = 0; j < adj_.cols(); ++j) {
            const double a = adj_(i, j);
            if (!std::isfinite(a) || a < 0.0) {
                throw std::invalid_argument(entry_name(i, j) +
                                            ": weights must be finite and non-negative");
            }
            if (i == j && a != 0.0) {
                throw std::invalid_argument(entry_name(i, j) + ": self-loops are not allowed");
            }
        }
    }
}

LaplacianBundle build_bundle(const DiGraph& g) {
    const std::size_t n = g.size();
    const Matrix& a = g.adjacency();
    LaplacianBundle b;
    b.degrees.assign(n, 0.0);
    b.laplacian = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b.degrees[i] += a(i, j);
            b.laplacian(i, j) = -a(i, j);
        }
        b.laplacian(i, i) = b.degrees[i];
    }
    b.sym_part = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b.sym_part(i, j) = 0.5 * (b.laplacian(i, j) + b.laplacian(j, i));
        }
    }
    b.delta_max = *std::max_element(b.degrees.begin(), b.degrees.end());
    b.sym_eigenvalues = symmetric_eigenvalues(b.sym_part);
    b.lambda2 = b.sym_eigenvalues[1];
    return b;
}

bool is_balanced(const DiGraph& g, double tol) {
    const Matrix& a = g.adjacency();
    for (std::size_t i = 0; i < g.size(); ++i) {
        double row = 0.0;
        double col = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            row += a(i, j);
            col += a(j, i);
        }
        if (std::fabs(row - col) > tol) {
            return false;
        }
    }
    return true;
}

bool pattern_strongly_connected(const Matrix& m) {
    if (!m.is_square() || m.rows() == 0) {
        return false;
    }
    // Strongly connected iff node 0 reaches everything and everything reaches node 0.
    const auto fwd = reachable(m, 0, true);
    const auto bwd = reachable(m, 0, false);
    return std::all_of(fwd.begin(), fwd.end(), [](bool v) { return v; }) &&
           std::all_of(bwd.begin(), bwd.end(), [](bool v) { return v; });
}

bool is_strongly_connected(const DiGraph& g) { return pattern_strongly_connected(g.adjacency()); }

Matrix perron_matrix(const LaplacianBundle& b, double eps) {
    const std::size_t n = b.laplacian.rows();
    Matrix p = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            p(i, j) -= eps * b.laplacian(i, j);
        }
    }
    return p;
}

bool spectral_consensus_check(const Matrix& p, double tol) {
    if (!p.is_square() || p.rows() < 2) {
        return false;
    }
    const std::size_t n = p.rows();
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += p(i, j);
            if (i != j && p(i, j) < 0.0) {
                return false;
            }
        }
        if (std::fabs(row - 1.0) > tol || !(p(i, i) > 0.0)) {
            return false;
        }
    }
    return pattern_strongly_connected(p);
}

double subdominant_spectral_radius(const Matrix& p, int iterations) {
    if (!p.is_square() || p.rows() == 0) {
        throw std::invalid_argument("subdominant_spectral_radius: matrix must be square");
    }
    const std::size_t n = p.rows();
    const Matrix pt = p.transposed();

    // Left Perron vector, normalised to w^T 1 = 1.
    Vector w(n, 1.0 / static_cast<double>(n));
    for (int it = 0; it < iterations; ++it) {
        Vector next = pt * w;
        const double s = sum(next);
        if (s == 0.0) {
            break;
        }
        for (double& v : next) {
            v /= s;
        }
        w = std::move(next);
    }

    // Power iteration on Q = P - 1 w^T; average log growth over the second half.
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = std::sin(static_cast<double>(i) + 1.0) + 0.5 * std::cos(3.0 * static_cast<double>(i));
    }
    auto apply_q = [&](const Vector& x) {
        Vector y = p * x;
        const double wx = dot(w, x);
        for (double& yi : y) {
            yi -= wx;
        }
        return y;
    };
    double nv = norm2(v);
    if (nv == 0.0) {
        return 0.0;
    }
    for (double& x : v) {
        x /= nv;
    }
    double log_growth = 0.0;
    int counted = 0;
    for (int it = 0; it < iterations; ++it) {
        v = apply_q(v);
        nv = norm2(v);
        if (nv < 1e-300) {
            return 0.0;
        }
        for (double& x : v) {
            x /= nv;
        }
        if (it >= iterations / 2) {
            log_growth += std::log(nv);
            ++counted;
        }
    }
    return counted > 0 ? std::exp(log_growth / counted) : 0.0;
}

double restricted_contraction_norm(const Matrix& p) {
    if (!p.is_square() || p.rows() < 2) {
        throw std::invalid_argument("restricted_contraction_norm: need a square matrix, n >= 2");
    }
    const std::size_t n = p.rows();
    // Helmert basis of the complement of 1: u_k = (1,..,1,-k,0,..)/sqrt(k(k+1)).
    Matrix u(n, n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
        for (std::size_t i = 0; i < k; ++i) {
            u(i, k - 1) = scale;
        }
        u(k, k - 1) = -static_cast<double>(k) * scale;
    }
    const Matrix pu = p * u;
    const Matrix gram = pu.transposed() * pu;
    const Vector eig = symmetric_eigenvalues(gram);
    return std::sqrt(std::max(0.0, eig.back()));
}

}  // namespace fracon
