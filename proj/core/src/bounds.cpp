#include "steklov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace steklov {

namespace {

void require_bound_args(std::size_t b, std::size_t boundary_diam) {
  if (b < 2) throw ParameterError("bound needs b >= 2");
  if (boundary_diam < 1) throw ParameterError("bound needs d_B >= 1");
}

}  // namespace

double thm1_bound(std::size_t b, std::size_t boundary_diam) {
  require_bound_args(b, boundary_diam);
  const double bm1 = static_cast<double>(b - 1);
  return static_cast<double>(b) / (bm1 * bm1 * static_cast<double>(boundary_diam));
}

double thm2_bound(std::size_t b, std::size_t boundary_diam) {
  require_bound_args(b, boundary_diam);
  const std::size_t product = (b / 2) * ((b + 1) / 2);
  return static_cast<double>(b) / static_cast<double>(product * boundary_diam);
}

double weighted_bound(const GraphWithBoundary& g) {
  if (g.boundary_size() < 2) throw ParameterError("weighted bound needs b >= 2");
  return g.min_weight() /
         (static_cast<double>(boundary_diameter(g)) * boundary_volume(g));
}

double prop1_min_closed(std::size_t b) {
  if (b < 2) throw ParameterError("spread problem needs b >= 2");
  const double lo = static_cast<double>(b / 2);
  const double hi = static_cast<double>((b + 1) / 2);
  return std::sqrt(static_cast<double>(b)) / (std::sqrt(lo) * std::sqrt(hi));
}

double spread(const std::vector<double>& x) { return x.front() - x.back(); }

std::vector<SpreadCandidate> spread_candidates(std::size_t b) {
  if (b < 2) throw ParameterError("spread problem needs b >= 2");
  const double bd = static_cast<double>(b);
  std::vector<SpreadCandidate> out;
  for (std::size_t k = 1; k < b; ++k) {
    const double kd = static_cast<double>(k);
    const double rest = bd - kd;
    const double high = kd * std::sqrt(rest) / (rest * std::sqrt(bd) * std::sqrt(kd));
    const double low = -std::sqrt(rest) / (std::sqrt(bd) * std::sqrt(kd));
    SpreadCandidate c;
    c.k = k;
    c.y.assign(b - k, high);
    c.y.insert(c.y.end(), k, low);
    c.value = std::sqrt(bd) / (std::sqrt(rest) * std::sqrt(kd));
    out.push_back(std::move(c));
  }
  return out;
}

bool project_to_spread_feasible(std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double norm2 = 0.0;
  for (double& v : x) {
    v -= mean;
    norm2 += v * v;
  }
  if (!(norm2 > 0.0)) return false;
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : x) v *= inv;
  std::sort(x.begin(), x.end(), std::greater<>());
  return true;
}

namespace {

/// Spread of the normalized projection of a zero-sum x.
double normalized_spread(const std::vector<double>& x) {
  double hi = -std::numeric_limits<double>::infinity();
  double lo = std::numeric_limits<double>::infinity();
  double norm2 = 0.0;
  for (double v : x) {
    hi = std::max(hi, v);
    lo = std::min(lo, v);
    norm2 += v * v;
  }
  return norm2 > 0.0 ? (hi - lo) / std::sqrt(norm2) : std::numeric_limits<double>::infinity();
}

/// Coordinate-pair pattern search. Moving x_i up and x_j down by the same
/// step keeps the sum at zero, so each trial only needs renormalization.
void descend(std::vector<double>& x, std::size_t iters) {
  double best = normalized_spread(x);
  double step = 0.1;
  std::size_t sweeps = 0;
  const std::size_t b = x.size();
  while (step >= 1e-7 && sweeps < iters) {
    ++sweeps;
    bool improved = false;
    for (std::size_t i = 0; i < b; ++i) {
      for (std::size_t j = 0; j < b; ++j) {
        if (i == j) continue;
        x[i] += step;
        x[j] -= step;
        const double trial = normalized_spread(x);
        if (trial < best) {
          best = trial;
          improved = true;
        } else {
          x[i] -= step;
          x[j] += step;
        }
      }
    }
    if (improved) {
      project_to_spread_feasible(x);
    } else {
      step *= 0.5;
    }
  }
  project_to_spread_feasible(x);
}

}  // namespace

SpreadOracleResult prop1_oracle(std::size_t b, std::size_t samples, std::size_t iters,
                                std::uint64_t seed) {
  if (b < 2) throw ParameterError("spread problem needs b >= 2");
  if (samples == 0) throw ParameterError("oracle needs at least one sample");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  SpreadOracleResult best{std::numeric_limits<double>::infinity(), {}};
  std::vector<double> x(b);
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& v : x) v = normal(rng);
    if (!project_to_spread_feasible(x)) continue;
    descend(x, iters);
    const double value = spread(x);
    if (value < best.value) {
      best.value = value;
      best.argmin = x;
    }
  }
  if (best.argmin.empty()) throw NumericError("oracle found no feasible sample");
  return best;
}

SpreadProblem solve_spread_problem(std::size_t b, std::size_t samples, std::size_t iters,
                                   std::uint64_t seed) {
  SpreadProblem p;
  p.b = b;
  p.closed_form = prop1_min_closed(b);
  p.candidates = spread_candidates(b);
  SpreadOracleResult oracle = prop1_oracle(b, samples, iters, seed);
  p.oracle_min = oracle.value;
  p.oracle_argmin = std::move(oracle.argmin);
  return p;
}

BoundReport check_bounds(const GraphWithBoundary& g, Normalization norm, double tolerance) {
  require_valid(g);
  if (g.boundary_size() < 2) throw ParameterError("bounds need b >= 2");

  BoundReport r;
  r.normalization = norm;
  r.b = g.boundary_size();
  r.boundary_diam = boundary_diameter(g);
  r.sigma1 = steklov_spectrum(g, norm).first_nonzero();
  r.thm1 = thm1_bound(r.b, r.boundary_diam);
  r.thm2 = thm2_bound(r.b, r.boundary_diam);
  r.weighted = weighted_bound(g);
  r.slack_thm2 = r.sigma1 - r.thm2;
  r.thm_bounds_apply = norm == Normalization::kUnit && g.has_unit_weights();
  r.weighted_applies = norm == Normalization::kMeasure;

  auto flag = [&r, tolerance](const char* name, double bound) {
    if (r.sigma1 < bound - tolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << name << " violated: sigma1 = " << r.sigma1 << " < " << bound;
      r.violations.push_back(msg.str());
    }
  };
  if (r.thm_bounds_apply) {
    flag("thm1", r.thm1);
    flag("thm2", r.thm2);
  }
  if (r.weighted_applies) flag("weighted", r.weighted);
  return r;
}

}  // namespace steklov
