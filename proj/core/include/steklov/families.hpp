#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "steklov/graph.hpp"

namespace steklov {

/// Path of length n (vertices 0..n) with boundary {0, n}. Requires n >= 2.
GraphWithBoundary path_graph(std::size_t n);

/// D_{n+3}: boundary {0, 1}, hub 2 adjacent to both, and a pendant interior
/// path 2-3-...-(n+2) hanging off the hub. n + 3 vertices in total.
GraphWithBoundary d_family(std::size_t n);

/// (H^b)_{d_B}: a left hub with floor(b/2) boundary leaves and a right hub
/// with ceil(b/2) boundary leaves, joined by an interior path of length
/// d_B - 2. Labels: left leaves 0..floor(b/2)-1, right leaves up to b-1, left
/// hub b, middle path, right hub b + d_B - 2. Requires b >= 2, d_B >= 3.
GraphWithBoundary h_family(std::size_t b, std::size_t boundary_diam);

/// b / (floor(b/2) ceil(b/2) (d_B - 2) + b), the first non-zero Steklov
/// eigenvalue of h_family(b, d_B).
double h_family_sigma1(std::size_t b, std::size_t boundary_diam);

struct RandomGraphOptions {
  std::size_t interior = 1;
  std::size_t boundary = 1;
  /// Probability of each non-tree interior edge.
  double edge_probability = 0.3;
  std::uint64_t seed = 0;
  /// Draw weights uniformly from [0.5, 2] instead of using unit weights.
  bool weighted = false;
};

/// Random valid graph with boundary: a random spanning tree on the interior
/// plus independent extra edges, then every boundary vertex attached to
/// 1 + Geometric(1/2) distinct interior vertices (capped at the interior
/// size). Labels: boundary first, then interior. Deterministic per seed.
GraphWithBoundary random_valid_graph(const RandomGraphOptions& options);

struct EnsembleOptions {
  std::size_t count = 500;
  std::uint64_t seed = 0;
  std::size_t max_interior = 40;
  /// Boundary sizes are drawn from 2..max_boundary.
  std::size_t max_boundary = 12;
  bool weighted = false;
};

/// `count` random valid graphs; graph i uses seed `seed + i`, with interior
/// size, boundary size and edge probability in [0.05, 0.5] drawn from it.
std::vector<GraphWithBoundary> random_ensemble(const EnsembleOptions& options);

enum class FamilyKind { kPath, kD, kH, kRandom };

std::string_view to_string(FamilyKind kind);
/// Accepts "path", "d", "h", "random".
FamilyKind parse_family_kind(std::string_view text);

}  // namespace steklov
