#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steklov/error.hpp"

namespace steklov {

using VertexId = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex = 0;
  double weight = 1.0;
};

/// A finite graph with a distinguished boundary vertex set B; the interior is
/// the complement of B. Vertices are the dense ids 0..n-1.
///
/// Construction only checks representability (ids in range, finite weights).
/// The structural axioms of a graph with boundary are checked by validate().
/// Parallel edges are merged into one edge whose weight is the sum of the
/// parallel weights; every quantity derived from the graph (Laplacian,
/// measure, volume, minimum weight) only depends on the aggregated weight.
class GraphWithBoundary {
 public:
  GraphWithBoundary() = default;
  GraphWithBoundary(std::size_t vertex_count, std::vector<Edge> edges,
                    std::vector<VertexId> boundary);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t boundary_size() const { return boundary_.size(); }
  std::size_t interior_size() const { return interior_.size(); }

  /// Sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }
  /// Sorted ascending, duplicates removed.
  std::span<const VertexId> boundary() const { return boundary_; }
  /// Sorted ascending.
  std::span<const VertexId> interior() const { return interior_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[v]; }

  bool is_boundary(VertexId v) const { return is_boundary_[v]; }
  /// Position of v inside boundary(), or npos when v is interior.
  std::size_t boundary_index(VertexId v) const { return local_index_[v]; }
  /// Position of v inside interior(), or npos when v is on the boundary.
  std::size_t interior_index(VertexId v) const { return local_index_[v]; }

  /// m_v: sum of the weights of edges incident to v.
  double measure(VertexId v) const;
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  /// True when every edge weight is exactly 1.
  bool has_unit_weights() const;
  /// Smallest edge weight; +inf for an edge-free graph.
  double min_weight() const;

  /// Number of duplicate ids removed from the boundary list on construction.
  std::size_t duplicate_boundary_ids() const { return duplicate_boundary_ids_; }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  friend bool operator==(const GraphWithBoundary& a, const GraphWithBoundary& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.boundary_ == b.boundary_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexId> boundary_;
  std::vector<VertexId> interior_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<bool> is_boundary_;
  std::vector<std::size_t> local_index_;
  std::size_t duplicate_boundary_ids_ = 0;
};

enum class ViolationKind {
  kEmptyBoundary,
  kDuplicateBoundaryId,
  kLoop,
  kNonPositiveWeight,
  kBoundaryEdge,          // E(B,B) != {}
  kIsolatedBoundary,      // boundary vertex without interior neighbor
  kDisconnected,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<VertexId> vertices;
};

/// Name used in reports, e.g. "E(B,B) ≠ ∅" or "not connected".
std::string_view violation_name(ViolationKind kind);

/// Every violated axiom of a graph with boundary. Empty means valid.
std::vector<Violation> validate(const GraphWithBoundary& g);

/// Thrown by operations that require a valid graph.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws ValidationError when validate(g) is non-empty.
void require_valid(const GraphWithBoundary& g);

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct DistanceTable {
  VertexId source = 0;
  /// Hop counts; kUnreachable for vertices in another component.
  std::vector<std::size_t> dist;
};

/// Hop distances from source. Edge weights are ignored.
DistanceTable bfs_distances(const GraphWithBoundary& g, VertexId source);

/// d_B: largest hop distance between two boundary vertices. Requires b >= 2.
std::size_t boundary_diameter(const GraphWithBoundary& g);

/// Largest hop distance between any two vertices. Requires n >= 2.
std::size_t diameter(const GraphWithBoundary& g);

/// Vol(B) = sum of m_i over boundary vertices.
double boundary_volume(const GraphWithBoundary& g);

}  // namespace steklov
