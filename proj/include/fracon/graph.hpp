#pragma once

// Directed communication graph of the agent network.
//
// Convention: adjacency(i, j) = a_ij > 0 means agent i receives the state of
// agent j, i.e. the directed edge j -> i exists and j is a neighbor of i.

#include "fracon/linalg.hpp"

#include <cstddef>

namespace fracon {

class DiGraph {
public:
    /// Validates the adjacency matrix: square, n >= 2, finite non-negative
    /// entries, zero diagonal. Throws std::invalid_argument naming the
    /// offending entry otherwise.
    explicit DiGraph(Matrix adjacency);

    [[nodiscard]] std::size_t size() const noexcept { return adj_.rows(); }
    [[nodiscard]] const Matrix& adjacency() const noexcept { return adj_; }
    [[nodiscard]] double weight(std::size_t i, std::size_t j) const { return adj_(i, j); }

    friend bool operator==(const DiGraph&, const DiGraph&) = default;

private:
    Matrix adj_;
};

/// Laplacian and the spectral quantities derived from it.
struct LaplacianBundle {
    Vector degrees;     // in-degrees (row sums of the adjacency)
    Matrix laplacian;   // L = diag(degrees) - A
    Matrix sym_part;    // (L + L^T) / 2
    Vector sym_eigenvalues;  // ascending spectrum of sym_part
    double delta_max = 0.0;
    double lambda2 = 0.0;    // second-smallest eigenvalue of sym_part
};

[[nodiscard]] LaplacianBundle build_bundle(const DiGraph& g);

/// Every row sum equals the matching column sum within `tol` (absolute).
[[nodiscard]] bool is_balanced(const DiGraph& g, double tol = 1e-12);

/// Every node reaches every other node along directed edges.
[[nodiscard]] bool is_strongly_connected(const DiGraph& g);

/// Same test on the positive off-diagonal pattern of an arbitrary square
/// matrix (entry (i, j) > 0 is read as an edge j -> i).
[[nodiscard]] bool pattern_strongly_connected(const Matrix& m);

/// P = I - eps * L.
[[nodiscard]] Matrix perron_matrix(const LaplacianBundle& b, double eps);

/// True iff P certifiably has 1 as a simple eigenvalue with every other
/// eigenvalue strictly inside the unit circle. Uses the sufficient condition
/// for Perron matrices: rows sum to 1, off-diagonal entries >= 0, all
/// diagonal entries > 0 (eps * Delta_max < 1) and the off-diagonal pattern is
/// strongly connected.
[[nodiscard]] bool spectral_consensus_check(const Matrix& p, double tol = 1e-12);

/// Diagnostic: estimate of max |lambda| over the eigenvalues of P other than
/// the Perron root 1, by power iteration on P deflated with its left Perron
/// vector. Accuracy is limited (~1e-3) when subdominant moduli are close.
[[nodiscard]] double subdominant_spectral_radius(const Matrix& p, int iterations = 4000);

/// max ||P y||_2 / ||y||_2 over nonzero y orthogonal to the ones vector.
/// For P from a balanced graph this is the per-step contraction factor of
/// the disagreement e = L x.
[[nodiscard]] double restricted_contraction_norm(const Matrix& p);

}  // namespace fracon
