#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steklov/graph.hpp"

namespace steklov {

class BudgetExceeded : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

struct SearchOptions {
  std::size_t b = 2;
  std::size_t boundary_diam = 2;
  std::size_t max_vertices = 6;
  /// Upper limit on the number of candidate graphs the search may visit.
  std::size_t budget = 50'000'000;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchResult {
  SearchOptions options;
  /// Valid graphs with exactly b boundary vertices and boundary diameter d_B.
  std::size_t graphs_examined = 0;
  /// Smallest σ_1 found; empty when no graph meets the constraints.
  std::optional<double> sigma1_min;
  /// One representative per boundary-respecting isomorphism class attaining
  /// sigma1_min within 1e-9, in canonical order.
  std::vector<GraphWithBoundary> minimizers;
  /// The conjectured extremal graph: the path for b = 2, (H^b)_{d_B} otherwise.
  std::string reference_name;
  /// Whether the reference graph is among the minimizers; empty when it is
  /// undefined for these parameters or does not fit in max_vertices.
  std::optional<bool> reference_is_minimizer;
};

/// Canonical form of g under permutations that map boundary to boundary and
/// interior to interior. Equal keys mean isomorphic graphs with boundary.
/// Edge weights are ignored. Requires at most 8 interior vertices.
std::vector<std::uint32_t> canonical_key(const GraphWithBoundary& g);

/// Enumerates every valid graph with at most max_vertices vertices, exactly b
/// boundary vertices and boundary diameter exactly d_B, and returns those of
/// minimal σ_1 (unit convention). Throws BudgetExceeded when max_vertices > 10,
/// when an interior would exceed 6 vertices, or when the candidate count
/// exceeds options.budget.
SearchResult exhaustive_minimizer_search(const SearchOptions& options);

}  // namespace steklov
