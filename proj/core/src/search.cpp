#include "steklov/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "steklov/families.hpp"
#include "steklov/steklov.hpp"

namespace steklov {

namespace {

constexpr std::size_t kMaxSearchVertices = 10;
constexpr std::size_t kMaxEnumeratedInterior = 6;
constexpr std::size_t kMaxKeyedInterior = 8;
constexpr double kTieTolerance = 1e-9;

// Number of simple graphs on k unlabeled vertices, k = 0..6.
constexpr std::array<std::size_t, 7> kGraphClasses{1, 1, 2, 4, 11, 34, 156};

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  if (i > j) std::swap(i, j);
  // Row-major over the strict upper triangle.
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

struct PermutationTable {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> vertex;  // perm[v]
  std::vector<std::vector<std::size_t>> pair;    // image of each pair index

  explicit PermutationTable(std::size_t interior) : k(interior) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> image(k * (k - (k > 0 ? 1 : 0)) / 2);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          image[pair_index(i, j, k)] = pair_index(perm[i], perm[j], k);
        }
      }
      vertex.push_back(perm);
      pair.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
};

std::uint32_t permute_pairs(std::uint32_t mask, const std::vector<std::size_t>& image) {
  std::uint32_t out = 0;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    out |= 1u << image[static_cast<std::size_t>(bit)];
    mask &= mask - 1;
  }
  return out;
}

std::uint32_t permute_vertices(std::uint32_t mask, const std::vector<std::size_t>& perm) {
  std::uint32_t out = 0;
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    out |= 1u << perm[static_cast<std::size_t>(bit)];
    mask &= mask - 1;
  }
  return out;
}

std::vector<std::uint32_t> canonical_from_masks(std::size_t k, std::uint32_t interior_mask,
                                                std::vector<std::uint32_t> attachments,
                                                const PermutationTable& perms) {
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> key(3 + attachments.size());
  for (std::size_t p = 0; p < perms.vertex.size(); ++p) {
    key[0] = static_cast<std::uint32_t>(k);
    key[1] = static_cast<std::uint32_t>(attachments.size());
    key[2] = permute_pairs(interior_mask, perms.pair[p]);
    for (std::size_t a = 0; a < attachments.size(); ++a) {
      key[3 + a] = permute_vertices(attachments[a], perms.vertex[p]);
    }
    std::sort(key.begin() + 3, key.end());
    if (best.empty() || key < best) best = key;
  }
  return best;
}

/// Interior graphs on k vertices, one per isomorphism class, as pair masks.
std::vector<std::uint32_t> interior_classes(const PermutationTable& perms) {
  const std::size_t k = perms.k;
  const std::size_t pairs = k * (k - (k > 0 ? 1 : 0)) / 2;
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    bool minimal = true;
    for (std::size_t p = 1; p < perms.pair.size() && minimal; ++p) {
      if (permute_pairs(mask, perms.pair[p]) < mask) minimal = false;
    }
    if (minimal) reps.push_back(mask);
  }
  return reps;
}

/// C(n + r - 1, r), saturating at SIZE_MAX.
std::size_t multichoose(std::size_t n, std::size_t r) {
  long double value = 1.0L;
  for (std::size_t i = 1; i <= r; ++i) {
    value = value * static_cast<long double>(n + r - i) / static_cast<long double>(i);
  }
  const auto limit = static_cast<long double>(std::numeric_limits<std::size_t>::max());
  return value >= limit ? std::numeric_limits<std::size_t>::max()
                        : static_cast<std::size_t>(value + 0.5L);
}

struct Candidate {
  double sigma1;
  GraphWithBoundary graph;
};

struct WorkerResult {
  std::size_t examined = 0;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Candidate> ties;

  void offer(double sigma1, GraphWithBoundary g) {
    if (sigma1 < best - kTieTolerance) {
      best = sigma1;
      std::erase_if(ties, [this](const Candidate& c) { return c.sigma1 > best + kTieTolerance; });
    } else {
      best = std::min(best, sigma1);
    }
    if (sigma1 <= best + kTieTolerance) ties.push_back({sigma1, std::move(g)});
  }
};

/// Boundary diameter through bitmask BFS; 0 when the graph is disconnected.
std::size_t masked_boundary_diameter(const std::vector<std::uint32_t>& adj, std::size_t b) {
  const std::size_t n = adj.size();
  const std::uint32_t all = (1u << n) - 1;
  const std::uint32_t boundary = (1u << b) - 1;
  std::size_t diam = 0;
  for (std::size_t s = 0; s < b; ++s) {
    std::uint32_t seen = 1u << s;
    std::uint32_t frontier = seen;
    std::size_t depth = 0;
    std::size_t farthest = 0;
    while (frontier != 0) {
      if (frontier & boundary) farthest = depth;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      }
      frontier = next & ~seen;
      seen |= frontier;
      ++depth;
    }
    if (seen != all) return 0;
    diam = std::max(diam, farthest);
  }
  return diam;
}

GraphWithBoundary build_graph(std::size_t b, std::size_t k, std::uint32_t interior_mask,
                              const std::vector<std::uint32_t>& attachments) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (interior_mask >> pair_index(i, j, k) & 1u) edges.push_back({b + i, b + j, 1.0});
    }
  }
  for (std::size_t v = 0; v < b; ++v) {
    for (std::uint32_t m = attachments[v]; m != 0; m &= m - 1) {
      edges.push_back({v, b + static_cast<std::size_t>(std::countr_zero(m)), 1.0});
    }
  }
  std::vector<VertexId> boundary(b);
  std::iota(boundary.begin(), boundary.end(), 0);
  return GraphWithBoundary(b + k, std::move(edges), std::move(boundary));
}

void search_class(std::size_t b, std::size_t k, std::size_t target, std::uint32_t interior_mask,
                  WorkerResult& out) {
  const std::size_t n = b + k;
  std::vector<std::uint32_t> base(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (interior_mask >> pair_index(i, j, k) & 1u) {
        base[b + i] |= 1u << (b + j);
        base[b + j] |= 1u << (b + i);
      }
    }
  }
  const std::uint32_t subsets = (1u << k) - 1;
  std::vector<std::uint32_t> attachments(b, 1);
  std::vector<std::uint32_t> adj(n);

  // Non-decreasing sequences of non-empty interior subsets.
  while (true) {
    adj = base;
    for (std::size_t v = 0; v < b; ++v) {
      adj[v] = attachments[v] << b;
      for (std::uint32_t m = attachments[v]; m != 0; m &= m - 1) {
        adj[b + static_cast<std::size_t>(std::countr_zero(m))] |= 1u << v;
      }
    }
    if (masked_boundary_diameter(adj, b) == target) {
      GraphWithBoundary g = build_graph(b, k, interior_mask, attachments);
      const double sigma1 = eigenvalues_symmetric(dtn_matrix(g))[1];
      ++out.examined;
      out.offer(sigma1, std::move(g));
    }

    std::size_t pos = b;
    while (pos > 0 && attachments[pos - 1] == subsets) --pos;
    if (pos == 0) break;
    const std::uint32_t next = attachments[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < b; ++q) attachments[q] = next;
  }
}

}  // namespace

std::vector<std::uint32_t> canonical_key(const GraphWithBoundary& g) {
  const std::size_t k = g.interior_size();
  if (k > kMaxKeyedInterior) throw ParameterError("canonical key needs at most 8 interior vertices");
  std::uint32_t interior_mask = 0;
  std::vector<std::uint32_t> attachments(g.boundary_size(), 0);
  for (const Edge& e : g.edges()) {
    const bool bu = g.is_boundary(e.u);
    const bool bv = g.is_boundary(e.v);
    if (!bu && !bv) {
      interior_mask |= 1u << pair_index(g.interior_index(e.u), g.interior_index(e.v), k);
    } else if (bu && !bv) {
      attachments[g.boundary_index(e.u)] |= 1u << g.interior_index(e.v);
    } else if (!bu && bv) {
      attachments[g.boundary_index(e.v)] |= 1u << g.interior_index(e.u);
    } else {
      throw ParameterError("canonical key needs E(B,B) to be empty");
    }
  }
  return canonical_from_masks(k, interior_mask, std::move(attachments), PermutationTable(k));
}

SearchResult exhaustive_minimizer_search(const SearchOptions& options) {
  const std::size_t b = options.b;
  if (b < 2) throw ParameterError("search needs b >= 2");
  if (options.boundary_diam < 2) throw ParameterError("search needs d_B >= 2");
  if (options.max_vertices > kMaxSearchVertices) {
    throw BudgetExceeded("budget exceeded: max_vertices must be at most 10");
  }
  const std::size_t max_interior = options.max_vertices > b ? options.max_vertices - b : 0;
  if (max_interior > kMaxEnumeratedInterior) {
    throw BudgetExceeded("budget exceeded: interior of up to " + std::to_string(max_interior) +
                         " vertices (limit 6)");
  }
  std::size_t estimate = 0;
  for (std::size_t k = 1; k <= max_interior; ++k) {
    const std::size_t per_class = multichoose((1u << k) - 1, b);
    estimate = per_class > options.budget ? options.budget + 1
                                          : std::min(options.budget + 1,
                                                     estimate + kGraphClasses[k] * per_class);
  }
  if (estimate > options.budget) {
    throw BudgetExceeded("budget exceeded: more than " + std::to_string(options.budget) +
                         " candidate graphs");
  }

  struct Job {
    std::size_t k;
    std::uint32_t mask;
  };
  std::vector<Job> jobs;
  for (std::size_t k = 1; k <= max_interior; ++k) {
    for (std::uint32_t mask : interior_classes(PermutationTable(k))) jobs.push_back({k, mask});
  }

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::vector<WorkerResult> partial(threads);
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned id) {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      search_class(b, jobs[j].k, options.boundary_diam, jobs[j].mask, partial[id]);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }

  SearchResult result;
  result.options = options;
  double best = std::numeric_limits<double>::infinity();
  for (const WorkerResult& w : partial) {
    result.graphs_examined += w.examined;
    best = std::min(best, w.best);
  }
  std::map<std::vector<std::uint32_t>, GraphWithBoundary> classes;
  for (WorkerResult& w : partial) {
    for (Candidate& c : w.ties) {
      if (c.sigma1 <= best + kTieTolerance) {
        classes.try_emplace(canonical_key(c.graph), std::move(c.graph));
      }
    }
  }
  if (result.graphs_examined > 0) result.sigma1_min = best;
  for (auto& [key, g] : classes) result.minimizers.push_back(std::move(g));

  std::optional<GraphWithBoundary> reference;
  if (b == 2) {
    result.reference_name = "path P_" + std::to_string(options.boundary_diam);
    reference = path_graph(options.boundary_diam);
  } else if (options.boundary_diam >= 3) {
    result.reference_name =
        "H^" + std::to_string(b) + "_" + std::to_string(options.boundary_diam);
    reference = h_family(b, options.boundary_diam);
  }
  if (reference && reference->vertex_count() <= options.max_vertices) {
    result.reference_is_minimizer = classes.contains(canonical_key(*reference));
  }
  return result;
}

}  // namespace steklov
