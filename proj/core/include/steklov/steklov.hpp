#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/linalg.hpp"

namespace steklov {

/// Boundary inner product used by the Steklov problem.
///   kUnit:    <x, y>_B = sum_{i in B} x_i y_i        (unnormalized problem)
///   kMeasure: <x, y>_B = sum_{i in B} x_i y_i m_i    (measure-normalized DtN)
/// The two agree when all weights are 1 and every boundary vertex has degree 1.
enum class Normalization { kUnit, kMeasure };

std::string_view to_string(Normalization norm);
/// Accepts "unit" and "measure"; throws ParameterError otherwise.
Normalization parse_normalization(std::string_view text);

/// Weighted graph Laplacian: diagonal m_i, off-diagonal -mu_ij.
DenseSymMatrix laplacian(const GraphWithBoundary& g);

/// Sum over edges of mu_ij (v_i - v_j)^2.
double dirichlet_energy(const GraphWithBoundary& g, std::span<const double> v);

/// Solves the interior Dirichlet problem for one graph, reusing a single
/// factorization of the interior principal minor [Δ]_I.
class HarmonicExtender {
 public:
  /// Requires a valid graph; throws ValidationError otherwise.
  explicit HarmonicExtender(const GraphWithBoundary& g);

  /// phi is indexed like g.boundary(); the result is indexed by vertex id.
  std::vector<double> extend(std::span<const double> phi) const;

 private:
  GraphWithBoundary graph_;
  CholeskyFactor interior_;
};

std::vector<double> harmonic_extension(const GraphWithBoundary& g, std::span<const double> phi);

/// (∂v/∂n)_i = sum over interior neighbors j of mu_ij (v_i - v_j), for i in B.
std::vector<double> normal_derivative(const GraphWithBoundary& g, std::span<const double> v);

/// Λ = Δ_BB - Δ_BI [Δ]_I^{-1} Δ_IB exactly as assembled, before symmetrization.
DenseMatrix schur_complement_dtn(const GraphWithBoundary& g);

/// Dirichlet-to-Neumann matrix (symmetric part of the Schur complement).
DenseSymMatrix dtn_matrix(const GraphWithBoundary& g);

/// Λ assembled column by column: column k is the normal derivative of the
/// harmonic extension of the k-th boundary basis vector.
DenseMatrix dtn_matrix_by_extension(const GraphWithBoundary& g);

struct SteklovSpectrum {
  Normalization normalization = Normalization::kUnit;
  /// Ascending σ_0 <= ... <= σ_{b-1}; raw values, σ_0 is not clamped.
  std::vector<double> sigmas;
  /// boundary_eigvecs[k] is indexed like g.boundary() and has unit norm in
  /// the boundary inner product of `normalization`.
  std::vector<std::vector<double>> boundary_eigvecs;
  /// extensions[k]: harmonic extension of boundary_eigvecs[k] to all vertices.
  std::vector<std::vector<double>> extensions;
  /// ||Λ||_inf of the operator that was diagonalized.
  double operator_norm = 0.0;

  std::size_t size() const { return sigmas.size(); }
  /// |σ_0| <= 1e-9 (1 + ||Λ||_inf).
  bool sigma0_is_zero() const;
  /// σ_1; throws ParameterError when b < 2.
  double first_nonzero() const;
};

/// Full Steklov spectrum. kMeasure diagonalizes D^{-1/2} Λ D^{-1/2} with
/// D = diag(m_i), i in B, and maps eigenvectors back through D^{-1/2}.
SteklovSpectrum steklov_spectrum(const GraphWithBoundary& g,
                                 Normalization norm = Normalization::kUnit);

/// Energy of v over its boundary norm in the given convention. Throws
/// ParameterError when v vanishes on B.
double rayleigh_quotient(const GraphWithBoundary& g, std::span<const double> v,
                         Normalization norm = Normalization::kUnit);

/// Ascending eigenvalues of the (weighted) graph Laplacian.
std::vector<double> combinatorial_laplacian_spectrum(const GraphWithBoundary& g);

}  // namespace steklov
