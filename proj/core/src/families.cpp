#include "steklov/families.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace steklov {

GraphWithBoundary path_graph(std::size_t n) {
  if (n < 2) throw ParameterError("path family needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.push_back({v, v + 1, 1.0});
  return GraphWithBoundary(n + 1, std::move(edges), {0, n});
}

GraphWithBoundary d_family(std::size_t n) {
  std::vector<Edge> edges{{0, 2, 1.0}, {1, 2, 1.0}};
  for (VertexId v = 2; v < n + 2; ++v) edges.push_back({v, v + 1, 1.0});
  return GraphWithBoundary(n + 3, std::move(edges), {0, 1});
}

namespace {

void require_h_args(std::size_t b, std::size_t boundary_diam) {
  if (b < 2) throw ParameterError("h family needs b >= 2");
  if (boundary_diam < 3) throw ParameterError("h family needs d_B >= 3");
}

}  // namespace

GraphWithBoundary h_family(std::size_t b, std::size_t boundary_diam) {
  require_h_args(b, boundary_diam);
  const std::size_t left = b / 2;
  const VertexId left_hub = b;
  const VertexId right_hub = b + boundary_diam - 2;
  std::vector<Edge> edges;
  for (VertexId v = 0; v < b; ++v) edges.push_back({v, v < left ? left_hub : right_hub, 1.0});
  for (VertexId v = left_hub; v < right_hub; ++v) edges.push_back({v, v + 1, 1.0});
  std::vector<VertexId> boundary(b);
  std::iota(boundary.begin(), boundary.end(), 0);
  return GraphWithBoundary(right_hub + 1, std::move(edges), std::move(boundary));
}

double h_family_sigma1(std::size_t b, std::size_t boundary_diam) {
  require_h_args(b, boundary_diam);
  const std::size_t product = (b / 2) * ((b + 1) / 2);
  return static_cast<double>(b) / static_cast<double>(product * (boundary_diam - 2) + b);
}

GraphWithBoundary random_valid_graph(const RandomGraphOptions& options) {
  const std::size_t ni = options.interior;
  const std::size_t b = options.boundary;
  if (ni < 1) throw ParameterError("random graph needs at least one interior vertex");
  if (!(options.edge_probability > 0.0 && options.edge_probability <= 1.0)) {
    throw ParameterError("edge probability must lie in (0, 1]");
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::bernoulli_distribution extra(options.edge_probability);
  std::geometric_distribution<std::size_t> extra_attachments(0.5);
  auto next_weight = [&] { return options.weighted ? weight(rng) : 1.0; };

  // Interior vertices are b..b+ni-1; a shuffled order gives a random tree.
  std::vector<VertexId> order(ni);
  std::iota(order.begin(), order.end(), b);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> edges;
  std::vector<std::vector<bool>> linked(ni, std::vector<bool>(ni, false));
  for (std::size_t k = 1; k < ni; ++k) {
    std::uniform_int_distribution<std::size_t> parent(0, k - 1);
    const VertexId u = order[parent(rng)];
    const VertexId v = order[k];
    linked[u - b][v - b] = linked[v - b][u - b] = true;
    edges.push_back({u, v, next_weight()});
  }
  for (std::size_t i = 0; i < ni; ++i) {
    for (std::size_t j = i + 1; j < ni; ++j) {
      if (!linked[i][j] && extra(rng)) edges.push_back({b + i, b + j, next_weight()});
    }
  }

  std::vector<VertexId> interior_ids(ni);
  std::iota(interior_ids.begin(), interior_ids.end(), b);
  for (VertexId v = 0; v < b; ++v) {
    const std::size_t count = std::min(ni, 1 + extra_attachments(rng));
    std::vector<VertexId> picks;
    std::sample(interior_ids.begin(), interior_ids.end(), std::back_inserter(picks), count, rng);
    for (VertexId u : picks) edges.push_back({v, u, next_weight()});
  }

  std::vector<VertexId> boundary(b);
  std::iota(boundary.begin(), boundary.end(), 0);
  return GraphWithBoundary(b + ni, std::move(edges), std::move(boundary));
}

std::vector<GraphWithBoundary> random_ensemble(const EnsembleOptions& options) {
  if (options.max_interior < 1 || options.max_boundary < 2) {
    throw ParameterError("ensemble needs max_interior >= 1 and max_boundary >= 2");
  }
  std::vector<GraphWithBoundary> out;
  out.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    std::mt19937_64 rng(options.seed + i);
    std::uniform_int_distribution<std::size_t> interior(1, options.max_interior);
    std::uniform_int_distribution<std::size_t> boundary(2, options.max_boundary);
    std::uniform_real_distribution<double> probability(0.05, 0.5);
    RandomGraphOptions g;
    g.interior = interior(rng);
    g.boundary = boundary(rng);
    g.edge_probability = probability(rng);
    g.seed = rng();
    g.weighted = options.weighted;
    out.push_back(random_valid_graph(g));
  }
  return out;
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kPath:
      return "path";
    case FamilyKind::kD:
      return "d";
    case FamilyKind::kH:
      return "h";
    case FamilyKind::kRandom:
      return "random";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view text) {
  if (text == "path") return FamilyKind::kPath;
  if (text == "d") return FamilyKind::kD;
  if (text == "h") return FamilyKind::kH;
  if (text == "random") return FamilyKind::kRandom;
  throw ParameterError("unknown family '" + std::string(text) + "'");
}

}  // namespace steklov
