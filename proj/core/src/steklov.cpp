#include "steklov/steklov.hpp"

#include <cmath>
#include <string>

namespace steklov {

std::string_view to_string(Normalization norm) {
  return norm == Normalization::kUnit ? "unit" : "measure";
}

Normalization parse_normalization(std::string_view text) {
  if (text == "unit") return Normalization::kUnit;
  if (text == "measure") return Normalization::kMeasure;
  throw ParameterError("unknown normalization '" + std::string(text) + "'");
}

DenseSymMatrix laplacian(const GraphWithBoundary& g) {
  DenseSymMatrix lap(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    lap.add(e.u, e.u, e.weight);
    lap.add(e.v, e.v, e.weight);
    lap.add(e.u, e.v, -e.weight);
  }
  return lap;
}

double dirichlet_energy(const GraphWithBoundary& g, std::span<const double> v) {
  if (v.size() != g.vertex_count()) throw ParameterError("vertex function has wrong size");
  double energy = 0.0;
  for (const Edge& e : g.edges()) {
    const double diff = v[e.u] - v[e.v];
    energy += e.weight * diff * diff;
  }
  return energy;
}

namespace {

DenseSymMatrix interior_minor(const GraphWithBoundary& g) {
  const auto interior = g.interior();
  DenseSymMatrix minor(interior.size());
  for (std::size_t a = 0; a < interior.size(); ++a) {
    const VertexId v = interior[a];
    minor.set(a, a, g.measure(v));
    for (const Neighbor& nb : g.neighbors(v)) {
      if (!g.is_boundary(nb.vertex) && nb.vertex > v) {
        minor.set(a, g.interior_index(nb.vertex), -nb.weight);
      }
    }
  }
  return minor;
}

const GraphWithBoundary& checked(const GraphWithBoundary& g) {
  require_valid(g);
  return g;
}

}  // namespace

HarmonicExtender::HarmonicExtender(const GraphWithBoundary& g)
    : graph_(checked(g)), interior_(interior_minor(g)) {}

std::vector<double> HarmonicExtender::extend(std::span<const double> phi) const {
  const GraphWithBoundary& g = graph_;
  if (phi.size() != g.boundary_size()) throw ParameterError("boundary data has wrong size");
  // ([Δ]_I u)_i = sum over boundary neighbors j of mu_ij phi_j.
  std::vector<double> rhs(g.interior_size(), 0.0);
  for (std::size_t a = 0; a < rhs.size(); ++a) {
    for (const Neighbor& nb : g.neighbors(g.interior()[a])) {
      if (g.is_boundary(nb.vertex)) rhs[a] += nb.weight * phi[g.boundary_index(nb.vertex)];
    }
  }
  const std::vector<double> u = interior_.solve(rhs);
  std::vector<double> out(g.vertex_count());
  for (std::size_t k = 0; k < phi.size(); ++k) out[g.boundary()[k]] = phi[k];
  for (std::size_t a = 0; a < u.size(); ++a) out[g.interior()[a]] = u[a];
  return out;
}

std::vector<double> harmonic_extension(const GraphWithBoundary& g, std::span<const double> phi) {
  return HarmonicExtender(g).extend(phi);
}

std::vector<double> normal_derivative(const GraphWithBoundary& g, std::span<const double> v) {
  if (v.size() != g.vertex_count()) throw ParameterError("vertex function has wrong size");
  std::vector<double> out(g.boundary_size(), 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    const VertexId i = g.boundary()[k];
    for (const Neighbor& nb : g.neighbors(i)) {
      if (!g.is_boundary(nb.vertex)) out[k] += nb.weight * (v[i] - v[nb.vertex]);
    }
  }
  return out;
}

DenseMatrix schur_complement_dtn(const GraphWithBoundary& g) {
  require_valid(g);
  const std::size_t b = g.boundary_size();
  const std::size_t ni = g.interior_size();
  const CholeskyFactor minor(interior_minor(g));

  // Y = [Δ]_I^{-1} Δ_IB, one column per boundary vertex.
  std::vector<std::vector<double>> y(b);
  for (std::size_t k = 0; k < b; ++k) {
    std::vector<double> column(ni, 0.0);
    for (const Neighbor& nb : g.neighbors(g.boundary()[k])) {
      if (!g.is_boundary(nb.vertex)) column[g.interior_index(nb.vertex)] = -nb.weight;
    }
    y[k] = minor.solve(column);
  }

  DenseMatrix lambda(b, b);
  for (std::size_t r = 0; r < b; ++r) {
    const VertexId vr = g.boundary()[r];
    lambda(r, r) = g.measure(vr);  // Δ_BB is diagonal since E(B,B) is empty
    for (std::size_t c = 0; c < b; ++c) {
      double s = 0.0;
      for (const Neighbor& nb : g.neighbors(vr)) {
        if (!g.is_boundary(nb.vertex)) s += -nb.weight * y[c][g.interior_index(nb.vertex)];
      }
      lambda(r, c) -= s;
    }
  }
  return lambda;
}

DenseSymMatrix dtn_matrix(const GraphWithBoundary& g) {
  const DenseMatrix raw = schur_complement_dtn(g);
  DenseSymMatrix out(raw.rows());
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    for (std::size_t j = i; j < raw.cols(); ++j) out.set(i, j, 0.5 * (raw(i, j) + raw(j, i)));
  }
  return out;
}

DenseMatrix dtn_matrix_by_extension(const GraphWithBoundary& g) {
  const HarmonicExtender extender(g);
  const std::size_t b = g.boundary_size();
  DenseMatrix lambda(b, b);
  std::vector<double> basis(b, 0.0);
  for (std::size_t k = 0; k < b; ++k) {
    basis[k] = 1.0;
    const std::vector<double> column = normal_derivative(g, extender.extend(basis));
    for (std::size_t r = 0; r < b; ++r) lambda(r, k) = column[r];
    basis[k] = 0.0;
  }
  return lambda;
}

bool SteklovSpectrum::sigma0_is_zero() const {
  return !sigmas.empty() && std::abs(sigmas.front()) <= 1e-9 * (1.0 + operator_norm);
}

double SteklovSpectrum::first_nonzero() const {
  if (sigmas.size() < 2) throw ParameterError("σ_1 needs at least 2 boundary vertices");
  return sigmas[1];
}

SteklovSpectrum steklov_spectrum(const GraphWithBoundary& g, Normalization norm) {
  if (g.boundary_size() == 0) throw ParameterError("Steklov spectrum needs a non-empty boundary");
  const HarmonicExtender extender(g);
  const std::size_t b = g.boundary_size();

  DenseSymMatrix op = dtn_matrix(g);
  std::vector<double> scale(b, 1.0);
  if (norm == Normalization::kMeasure) {
    for (std::size_t k = 0; k < b; ++k) scale[k] = 1.0 / std::sqrt(g.measure(g.boundary()[k]));
    DenseSymMatrix scaled(b);
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = i; j < b; ++j) scaled.set(i, j, scale[i] * op(i, j) * scale[j]);
    }
    op = std::move(scaled);
  }

  const SymmetricEigen eig = eigen_symmetric(op);
  SteklovSpectrum out;
  out.normalization = norm;
  out.sigmas = eig.values;
  out.operator_norm = op.inf_norm();
  out.boundary_eigvecs.resize(b);
  out.extensions.resize(b);
  for (std::size_t k = 0; k < b; ++k) {
    std::vector<double> vec = eig.vectors.column(k);
    for (std::size_t i = 0; i < b; ++i) vec[i] *= scale[i];
    out.extensions[k] = extender.extend(vec);
    out.boundary_eigvecs[k] = std::move(vec);
  }
  return out;
}

double rayleigh_quotient(const GraphWithBoundary& g, std::span<const double> v, Normalization norm) {
  const double energy = dirichlet_energy(g, v);
  double denom = 0.0;
  for (VertexId i : g.boundary()) {
    const double w = norm == Normalization::kMeasure ? g.measure(i) : 1.0;
    denom += v[i] * v[i] * w;
  }
  if (denom == 0.0) throw ParameterError("function vanishes on the boundary");
  return energy / denom;
}

std::vector<double> combinatorial_laplacian_spectrum(const GraphWithBoundary& g) {
  return eigenvalues_symmetric(laplacian(g));
}

}  // namespace steklov
