#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<double> column(std::size_t j) const;

  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Dense symmetric matrix. Writes go through set()/add(), which update both
/// triangles, so the stored matrix is exactly symmetric.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  /// Accepts a square matrix whose asymmetry is at most
  /// 1e-12 * max(1, max|A_ij|) and whose entries are finite; the result is
  /// the symmetric part. Throws NumericError otherwise.
  static DenseSymMatrix from_dense(const DenseMatrix& a);
  static DenseSymMatrix identity(std::size_t dim);
  static DenseSymMatrix diagonal(std::span<const double> diag);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, double value);
  void add(std::size_t i, std::size_t j, double value);

  std::vector<double> multiply(std::span<const double> x) const;

  double max_abs() const;
  /// Maximum absolute row sum.
  double inf_norm() const;
  bool all_finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Cholesky factor L of an SPD matrix, A = L Lᵀ.
class CholeskyFactor {
 public:
  /// Throws NumericError("matrix not SPD") on a non-positive pivot and on
  /// non-finite input.
  explicit CholeskyFactor(const DenseSymMatrix& a);

  std::size_t dim() const { return dim_; }
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> lower_;  // row-major, lower triangle used
};

/// x with A x = rhs for SPD A.
std::vector<double> solve_spd(const DenseSymMatrix& a, std::span<const double> rhs);

struct SymmetricEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector of values[k]; its first coordinate
  /// with magnitude above 1e-9 is positive.
  DenseMatrix vectors;
};

struct JacobiOptions {
  /// Converged when the off-diagonal Frobenius mass is at most
  /// off_diagonal_tol * ||A||_F.
  double off_diagonal_tol = 1e-12;
  /// Sweep cap is sweep_cap_factor * dim^2; exceeding it throws.
  std::size_t sweep_cap_factor = 100;
};

/// Full eigendecomposition by cyclic Jacobi rotations.
SymmetricEigen eigen_symmetric(const DenseSymMatrix& a, const JacobiOptions& options = {});

/// Ascending eigenvalues only.
std::vector<double> eigenvalues_symmetric(const DenseSymMatrix& a);

double inf_norm(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

}  // namespace steklov
