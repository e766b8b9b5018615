#include "steklov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace steklov {

std::vector<double> DenseMatrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  if (x.size() != cols_) throw ParameterError("matrix-vector size mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* r = data_.data() + i * cols_;
    y[i] = std::inner_product(r, r + cols_, x.begin(), 0.0);
  }
  return y;
}

DenseSymMatrix DenseSymMatrix::from_dense(const DenseMatrix& a) {
  if (a.rows() != a.cols()) throw ParameterError("symmetric matrix must be square");
  const std::size_t n = a.rows();
  double scale = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) throw NumericError("matrix has non-finite entries");
      scale = std::max(scale, std::abs(a(i, j)));
    }
  }
  DenseSymMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale) {
        throw NumericError("matrix is not symmetric at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      }
      out.set(i, j, 0.5 * (a(i, j) + a(j, i)));
    }
  }
  return out;
}

DenseSymMatrix DenseSymMatrix::identity(std::size_t dim) {
  DenseSymMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.set(i, i, 1.0);
  return out;
}

DenseSymMatrix DenseSymMatrix::diagonal(std::span<const double> diag) {
  DenseSymMatrix out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out.set(i, i, diag[i]);
  return out;
}

void DenseSymMatrix::set(std::size_t i, std::size_t j, double value) {
  data_[i * dim_ + j] = value;
  data_[j * dim_ + i] = value;
}

void DenseSymMatrix::add(std::size_t i, std::size_t j, double value) {
  data_[i * dim_ + j] += value;
  if (i != j) data_[j * dim_ + i] += value;
}

std::vector<double> DenseSymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != dim_) throw ParameterError("matrix-vector size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const double* r = data_.data() + i * dim_;
    y[i] = std::inner_product(r, r + dim_, x.begin(), 0.0);
  }
  return y;
}

double DenseSymMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseSymMatrix::inf_norm() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) s += std::abs((*this)(i, j));
    m = std::max(m, s);
  }
  return m;
}

bool DenseSymMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

CholeskyFactor::CholeskyFactor(const DenseSymMatrix& a) : dim_(a.dim()), lower_(a.dim() * a.dim()) {
  if (!a.all_finite()) throw NumericError("matrix has non-finite entries");
  const std::size_t n = dim_;
  for (std::size_t j = 0; j < n; ++j) {
    double pivot = a(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= lower_[j * n + k] * lower_[j * n + k];
    if (!(pivot > 0.0)) {
      throw NumericError("matrix not SPD: non-positive pivot at row " + std::to_string(j));
    }
    const double ljj = std::sqrt(pivot);
    lower_[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      const double* li = lower_.data() + i * n;
      const double* lj = lower_.data() + j * n;
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
      lower_[i * n + j] = s / ljj;
    }
  }
}

std::vector<double> CholeskyFactor::solve(std::span<const double> rhs) const {
  if (rhs.size() != dim_) throw ParameterError("right-hand side size mismatch");
  for (double v : rhs) {
    if (!std::isfinite(v)) throw NumericError("right-hand side has non-finite entries");
  }
  const std::size_t n = dim_;
  std::vector<double> x(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= lower_[i * n + k] * x[k];
    x[i] = s / lower_[i * n + i];
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= lower_[k * n + ii] * x[k];
    x[ii] = s / lower_[ii * n + ii];
  }
  return x;
}

std::vector<double> solve_spd(const DenseSymMatrix& a, std::span<const double> rhs) {
  return CholeskyFactor(a).solve(rhs);
}

namespace {

void normalize_signs(DenseMatrix& vectors) {
  for (std::size_t k = 0; k < vectors.cols(); ++k) {
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
      const double x = vectors(i, k);
      if (std::abs(x) > 1e-9) {
        if (x < 0.0) {
          for (std::size_t r = 0; r < vectors.rows(); ++r) vectors(r, k) = -vectors(r, k);
        }
        break;
      }
    }
  }
}

}  // namespace

SymmetricEigen eigen_symmetric(const DenseSymMatrix& a, const JacobiOptions& options) {
  if (!a.all_finite()) throw NumericError("matrix has non-finite entries");
  const std::size_t n = a.dim();
  DenseMatrix m(n, n);
  DenseMatrix v(n, n);
  double frob2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v(i, i) = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      frob2 += a(i, j) * a(i, j);
    }
  }
  const double threshold = options.off_diagonal_tol * std::sqrt(frob2);
  const std::size_t sweep_cap = std::max<std::size_t>(1, options.sweep_cap_factor * n * n);

  auto off_diagonal = [&m, n] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m(i, j) * m(i, j);
    }
    return std::sqrt(s);
  };

  std::size_t sweeps = 0;
  while (off_diagonal() > threshold) {
    if (++sweeps > sweep_cap) {
      throw NumericError("Jacobi eigensolver did not converge within " +
                         std::to_string(sweep_cap) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (apq == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        // Smaller root of t^2 + 2 theta t - 1 = 0.
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&m](std::size_t x, std::size_t y) { return m(x, x) < m(y, y); });

  SymmetricEigen out{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  normalize_signs(out.vectors);
  return out;
}

std::vector<double> eigenvalues_symmetric(const DenseSymMatrix& a) {
  return eigen_symmetric(a).values;
}

double inf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double dot(std::span<const double> x, std::span<const double> y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

}  // namespace steklov
