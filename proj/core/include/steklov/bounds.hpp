#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/steklov.hpp"

namespace steklov {

/// b / ((b-1)^2 d_B). Requires b >= 2, d_B >= 1.
double thm1_bound(std::size_t b, std::size_t boundary_diam);

/// b / (floor(b/2) ceil(b/2) d_B). Requires b >= 2, d_B >= 1.
double thm2_bound(std::size_t b, std::size_t boundary_diam);

/// c / (d_B Vol(B)) with c the smallest edge weight. Requires b >= 2.
double weighted_bound(const GraphWithBoundary& g);

// --- Spread problem -------------------------------------------------------
//
// Minimize f_b(x) = x_1 - x_b over the non-increasing unit vectors of R^b
// whose coordinates sum to zero.

/// sqrt(b) / (sqrt(floor(b/2)) sqrt(ceil(b/2))). Requires b >= 2.
double prop1_min_closed(std::size_t b);

/// f_b(x) = x.front() - x.back().
double spread(const std::vector<double>& x);

/// Two-level feasible point with b-k equal positive coordinates followed by k
/// equal negative ones.
struct SpreadCandidate {
  std::size_t k = 0;
  std::vector<double> y;
  double value = 0.0;
};

/// One candidate per k = 1..b-1. Requires b >= 2.
std::vector<SpreadCandidate> spread_candidates(std::size_t b);

struct SpreadOracleResult {
  double value = 0.0;
  std::vector<double> argmin;
};

/// Randomized search for the spread minimum: `samples` random starts are
/// projected onto the feasible set, then refined by `iters` rounds of
/// coordinate-pair perturbation with step sizes halving from 0.1 to 1e-7.
/// Every iterate is feasible, so the result never undercuts the true minimum.
/// Deterministic for a given seed. Requires b >= 2.
SpreadOracleResult prop1_oracle(std::size_t b, std::size_t samples, std::size_t iters,
                                std::uint64_t seed);

/// Re-sorts (non-increasing), centers and normalizes x in place. Returns
/// false when x is constant, i.e. has no feasible projection.
bool project_to_spread_feasible(std::vector<double>& x);

struct SpreadProblem {
  std::size_t b = 0;
  double closed_form = 0.0;
  std::vector<SpreadCandidate> candidates;
  double oracle_min = 0.0;
  std::vector<double> oracle_argmin;
};

SpreadProblem solve_spread_problem(std::size_t b, std::size_t samples, std::size_t iters,
                                   std::uint64_t seed);

// --- Reports ---------------------------------------------------------------

/// Absolute tolerance below which a negative slack counts as a violation.
inline constexpr double kBoundTolerance = 1e-8;

struct BoundReport {
  Normalization normalization = Normalization::kUnit;
  std::size_t b = 0;
  std::size_t boundary_diam = 0;
  double sigma1 = 0.0;
  double thm1 = 0.0;
  double thm2 = 0.0;
  double weighted = 0.0;
  double slack_thm2 = 0.0;
  /// thm1 and thm2 are checked in the unit convention on unit weights;
  /// the weighted bound in the measure convention.
  bool thm_bounds_apply = false;
  bool weighted_applies = false;
  /// Human-readable description of each violated applicable bound.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Computes σ_1 and every bound for g. Requires a valid graph with b >= 2.
BoundReport check_bounds(const GraphWithBoundary& g, Normalization norm = Normalization::kUnit,
                         double tolerance = kBoundTolerance);

}  // namespace steklov
