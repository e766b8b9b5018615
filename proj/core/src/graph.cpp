#include "steklov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <utility>

namespace steklov {

GraphWithBoundary::GraphWithBoundary(std::size_t vertex_count, std::vector<Edge> edges,
                                     std::vector<VertexId> boundary)
    : vertex_count_(vertex_count) {
  for (Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      std::ostringstream msg;
      msg << "edge {" << e.u << "," << e.v << "} references a vertex id >= " << vertex_count;
      throw ParameterError(msg.str());
    }
    if (!std::isfinite(e.weight)) {
      throw ParameterError("edge weight is not finite");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (const Edge& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().weight += e.weight;
    } else {
      edges_.push_back(e);
    }
  }

  for (VertexId v : boundary) {
    if (v >= vertex_count) {
      std::ostringstream msg;
      msg << "boundary id " << v << " >= vertex count " << vertex_count;
      throw ParameterError(msg.str());
    }
  }
  std::sort(boundary.begin(), boundary.end());
  auto last = std::unique(boundary.begin(), boundary.end());
  duplicate_boundary_ids_ = static_cast<std::size_t>(boundary.end() - last);
  boundary.erase(last, boundary.end());
  boundary_ = std::move(boundary);

  is_boundary_.assign(vertex_count, false);
  local_index_.assign(vertex_count, npos);
  for (std::size_t k = 0; k < boundary_.size(); ++k) {
    is_boundary_[boundary_[k]] = true;
    local_index_[boundary_[k]] = k;
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (!is_boundary_[v]) {
      local_index_[v] = interior_.size();
      interior_.push_back(v);
    }
  }

  adjacency_.assign(vertex_count, {});
  for (const Edge& e : edges_) {
    if (e.u == e.v) continue;  // loops carry no energy; validate() reports them
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
}

double GraphWithBoundary::measure(VertexId v) const {
  double m = 0.0;
  for (const Neighbor& nb : adjacency_[v]) m += nb.weight;
  return m;
}

bool GraphWithBoundary::has_unit_weights() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; });
}

double GraphWithBoundary::min_weight() const {
  double c = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges_) c = std::min(c, e.weight);
  return c;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyBoundary:
      return "empty boundary";
    case ViolationKind::kDuplicateBoundaryId:
      return "duplicate boundary id";
    case ViolationKind::kLoop:
      return "loop";
    case ViolationKind::kNonPositiveWeight:
      return "non-positive weight";
    case ViolationKind::kBoundaryEdge:
      return "E(B,B) ≠ ∅";
    case ViolationKind::kIsolatedBoundary:
      return "δ(B^c) ≠ B";
    case ViolationKind::kDisconnected:
      return "not connected";
  }
  return "unknown";
}

namespace {

std::string edge_text(const Edge& e) {
  std::ostringstream out;
  out << "{" << e.u << "," << e.v << "}";
  return out.str();
}

}  // namespace

std::vector<Violation> validate(const GraphWithBoundary& g) {
  std::vector<Violation> out;
  auto add = [&out](ViolationKind kind, std::string detail, std::vector<VertexId> vertices) {
    std::string message(violation_name(kind));
    if (!detail.empty()) message += ": " + detail;
    out.push_back({kind, std::move(message), std::move(vertices)});
  };

  if (g.boundary_size() == 0) add(ViolationKind::kEmptyBoundary, "", {});
  if (g.duplicate_boundary_ids() > 0) {
    add(ViolationKind::kDuplicateBoundaryId,
        std::to_string(g.duplicate_boundary_ids()) + " repeated id(s)", {});
  }

  for (const Edge& e : g.edges()) {
    if (e.u == e.v) add(ViolationKind::kLoop, "at vertex " + std::to_string(e.u), {e.u});
    if (!(e.weight > 0.0)) {
      add(ViolationKind::kNonPositiveWeight, "edge " + edge_text(e), {e.u, e.v});
    }
    if (e.u != e.v && g.is_boundary(e.u) && g.is_boundary(e.v)) {
      add(ViolationKind::kBoundaryEdge, "edge " + edge_text(e) + " joins two boundary vertices",
          {e.u, e.v});
    }
  }

  // With E(B,B) empty, every neighbor of a boundary vertex is interior, so
  // δ(B^c) = B reduces to: every boundary vertex has an interior neighbor.
  for (VertexId v : g.boundary()) {
    const auto nbs = g.neighbors(v);
    const bool has_interior = std::any_of(nbs.begin(), nbs.end(), [&g](const Neighbor& nb) {
      return !g.is_boundary(nb.vertex);
    });
    if (!has_interior) {
      add(ViolationKind::kIsolatedBoundary,
          "boundary vertex " + std::to_string(v) + " has no interior neighbor", {v});
    }
  }

  if (g.vertex_count() > 0) {
    const DistanceTable t = bfs_distances(g, 0);
    std::vector<VertexId> unreached;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (t.dist[v] == kUnreachable) unreached.push_back(v);
    }
    if (!unreached.empty()) {
      add(ViolationKind::kDisconnected,
          std::to_string(unreached.size()) + " vertex(es) unreachable from vertex 0",
          std::move(unreached));
    }
  }
  return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string text = "invalid graph with boundary:";
  for (const Violation& v : violations) text += "\n  " + v.message;
  return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

void require_valid(const GraphWithBoundary& g) {
  auto violations = validate(g);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

DistanceTable bfs_distances(const GraphWithBoundary& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw ParameterError("bfs source " + std::to_string(source) + " out of range");
  }
  DistanceTable table{source, std::vector<std::size_t>(g.vertex_count(), kUnreachable)};
  std::deque<VertexId> queue{source};
  table.dist[source] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const Neighbor& nb : g.neighbors(v)) {
      if (table.dist[nb.vertex] == kUnreachable) {
        table.dist[nb.vertex] = table.dist[v] + 1;
        queue.push_back(nb.vertex);
      }
    }
  }
  return table;
}

std::size_t boundary_diameter(const GraphWithBoundary& g) {
  if (g.boundary_size() < 2) {
    throw ParameterError("boundary diameter undefined: fewer than 2 boundary vertices");
  }
  std::size_t d = 0;
  for (VertexId s : g.boundary()) {
    const DistanceTable t = bfs_distances(g, s);
    for (VertexId v : g.boundary()) {
      if (t.dist[v] == kUnreachable) throw ParameterError("graph is not connected");
      d = std::max(d, t.dist[v]);
    }
  }
  return d;
}

std::size_t diameter(const GraphWithBoundary& g) {
  if (g.vertex_count() < 2) throw ParameterError("diameter needs at least 2 vertices");
  std::size_t d = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    const DistanceTable t = bfs_distances(g, s);
    for (std::size_t x : t.dist) {
      if (x == kUnreachable) throw ParameterError("graph is not connected");
      d = std::max(d, x);
    }
  }
  return d;
}

double boundary_volume(const GraphWithBoundary& g) {
  double vol = 0.0;
  for (VertexId v : g.boundary()) vol += g.measure(v);
  return vol;
}

}  // namespace steklov
