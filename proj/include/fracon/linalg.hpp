#pragma once

// Minimal dense row-major matrix and the handful of kernels the consensus
// code needs. Sizes are small (agent counts up to a few hundred).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fracon {

using Vector = std::vector<double>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    /// Row-wise literal; throws std::invalid_argument on ragged rows.
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    [[nodiscard]] Matrix transposed() const;
    [[nodiscard]] Vector operator*(std::span<const double> x) const;
    [[nodiscard]] Matrix operator*(const Matrix& rhs) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

[[nodiscard]] double norm2(std::span<const double> x);
[[nodiscard]] double norm_inf(std::span<const double> x);
[[nodiscard]] double dot(std::span<const double> x, std::span<const double> y);
[[nodiscard]] double sum(std::span<const double> x);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Only the upper triangle is read. Throws std::invalid_argument if the
/// matrix is not square.
[[nodiscard]] Vector symmetric_eigenvalues(const Matrix& sym, double tol = 1e-14,
                                           int max_sweeps = 100);

}  // namespace fracon
