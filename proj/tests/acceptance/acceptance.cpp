// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "steklov/bounds.hpp"
#include "steklov/families.hpp"
#include "steklov/search.hpp"
#include "steklov/steklov.hpp"

using namespace steklov;

namespace {

constexpr std::uint64_t kEnsembleSeed = 424242;
constexpr std::uint64_t kWeightedSeed = 515151;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::size_t lo_half(std::size_t b) { return b / 2; }
std::size_t hi_half(std::size_t b) { return (b + 1) / 2; }

const std::vector<GraphWithBoundary>& ensemble(bool weighted) {
  static const auto unit = [] {
    EnsembleOptions o;
    o.count = 500;
    o.seed = kEnsembleSeed;
    return random_ensemble(o);
  }();
  static const auto heavy = [] {
    EnsembleOptions o;
    o.count = 500;
    o.seed = kWeightedSeed;
    o.weighted = true;
    return random_ensemble(o);
  }();
  return weighted ? heavy : unit;
}

Outcome path_sharpness() {
  double worst = 0.0;
  bool exact = true;
  for (std::size_t n = 2; n <= 50; ++n) {
    const double expected = 2.0 / static_cast<double>(n);
    worst = std::max(worst, std::abs(steklov_spectrum(path_graph(n)).first_nonzero() - expected));
    exact = exact && thm1_bound(2, n) == expected && thm2_bound(2, n) == expected;
  }
  return {worst <= 1e-9 && exact,
          "max |sigma1 - 2/n| = " + fmt(worst) + ", bounds exact: " + (exact ? "yes" : "no")};
}

Outcome d_family_constant() {
  double worst = 0.0;
  bool linear = true;
  for (std::size_t n = 0; n <= 50; ++n) {
    const GraphWithBoundary g = d_family(n);
    worst = std::max(worst, std::abs(steklov_spectrum(g).first_nonzero() - 1.0));
    linear = linear && boundary_diameter(g) == 2 && diameter(g) == std::max<std::size_t>(2, n + 1);
  }
  return {worst <= 1e-9 && linear, "max |sigma1 - 1| = " + fmt(worst) +
                                       ", diameter = max(2, n+1): " + (linear ? "yes" : "no")};
}

Outcome h_family_closed_form() {
  double worst = 0.0;
  bool rational = true;
  std::size_t graphs = 0;
  for (std::size_t b = 2; b <= 10; ++b) {
    const std::size_t pq = lo_half(b) * hi_half(b);
    for (std::size_t d = 3; d <= 40; ++d) {
      const double expected =
          static_cast<double>(b) / static_cast<double>(pq * (d - 2) + b);
      worst = std::max(worst, std::abs(steklov_spectrum(h_family(b, d)).first_nonzero() - expected));
      if (b % 2 == 0) {
        // b / (pq(d-2) + b) == 4 / (b(d-2) + 4), cross-multiplied in integers.
        rational = rational && b * (b * (d - 2) + 4) == 4 * (pq * (d - 2) + b);
      }
      ++graphs;
    }
  }
  return {worst <= 1e-9 && rational, std::to_string(graphs) + " graphs, max error " + fmt(worst) +
                                         ", even-b rational identity: " + (rational ? "yes" : "no")};
}

Outcome asymptotic_sharpness() {
  double worst_ratio = 0.0;
  bool monotone = true;
  for (std::size_t b = 3; b <= 8; ++b) {
    const double pq = static_cast<double>(lo_half(b) * hi_half(b));
    const double limit = static_cast<double>(b) / pq;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t d : {10, 100, 1000}) {
      const double dd = static_cast<double>(d);
      const double error = std::abs(dd * steklov_spectrum(h_family(b, d)).first_nonzero() - limit);
      const double allowed = 2.0 * limit * limit * pq / (static_cast<double>(b) * dd);
      worst_ratio = std::max(worst_ratio, error / allowed);
      monotone = monotone && error < previous;
      previous = error;
    }
  }
  return {worst_ratio <= 1.0 && monotone, "max error/allowed = " + fmt(worst_ratio) +
                                              ", errors decrease: " + (monotone ? "yes" : "no")};
}

Outcome thm2_dominance() {
  double worst = std::numeric_limits<double>::infinity();
  bool ordered = true;
  for (const GraphWithBoundary& g : ensemble(false)) {
    const std::size_t b = g.boundary_size();
    const std::size_t d = boundary_diameter(g);
    const double sigma1 = steklov_spectrum(g).first_nonzero();
    worst = std::min(worst, sigma1 - thm2_bound(b, d));
    ordered = ordered && thm2_bound(b, d) >= thm1_bound(b, d);
  }
  for (std::size_t b = 2; b <= 64; ++b) {
    for (std::size_t d = 1; d <= 256; ++d) ordered = ordered && thm2_bound(b, d) >= thm1_bound(b, d);
  }
  return {worst >= -1e-8 && ordered, "min(sigma1 - thm2) = " + fmt(worst) +
                                         ", thm2 >= thm1: " + (ordered ? "yes" : "no")};
}

Outcome weighted_bound_holds() {
  double worst = std::numeric_limits<double>::infinity();
  for (const GraphWithBoundary& g : ensemble(true)) {
    double c = std::numeric_limits<double>::infinity();
    for (const Edge& e : g.edges()) c = std::min(c, e.weight);
    double vol = 0.0;
    for (VertexId v : g.boundary()) vol += g.measure(v);
    const double bound = c / (static_cast<double>(boundary_diameter(g)) * vol);
    worst = std::min(worst, steklov_spectrum(g, Normalization::kMeasure).first_nonzero() - bound);
  }
  return {worst >= -1e-8, "min(sigma1 - c/(d_B Vol B)) = " + fmt(worst)};
}

Outcome spread_minimum() {
  double candidate_gap = 0.0;
  for (std::size_t b = 2; b <= 30; ++b) {
    double best = std::numeric_limits<double>::infinity();
    for (const SpreadCandidate& c : spread_candidates(b)) best = std::min(best, c.value);
    candidate_gap = std::max(candidate_gap, std::abs(best - prop1_min_closed(b)));
  }
  double below = 0.0, above = 0.0;
  for (std::size_t b = 2; b <= 10; ++b) {
    const double closed = prop1_min_closed(b);
    const double oracle = prop1_oracle(b, 10000, 200, 7000 + b).value;
    below = std::max(below, closed - oracle);
    above = std::max(above, oracle - closed);
  }
  return {candidate_gap <= 1e-12 && below <= 1e-9 && above <= 1e-3,
          "candidate gap " + fmt(candidate_gap) + ", oracle below closed by " + fmt(below) +
              ", above by " + fmt(above)};
}

Outcome dtn_invariants() {
  double asym = 0.0, min_eig = 0.0, row_sum = 0.0, gap = 0.0;
  for (const GraphWithBoundary& g : ensemble(false)) {
    const DenseMatrix raw = schur_complement_dtn(g);
    const DenseMatrix ext = dtn_matrix_by_extension(g);
    const std::size_t b = raw.rows();
    for (std::size_t i = 0; i < b; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < b; ++j) {
        asym = std::max(asym, std::abs(raw(i, j) - raw(j, i)));
        gap = std::max(gap, std::abs(raw(i, j) - ext(i, j)));
        s += raw(i, j);
      }
      row_sum = std::max(row_sum, std::abs(s));
    }
    min_eig = std::min(min_eig, eigenvalues_symmetric(dtn_matrix(g)).front());
  }
  return {asym <= 1e-10 && min_eig >= -1e-8 && row_sum <= 1e-8 && gap <= 1e-8,
          "asymmetry " + fmt(asym) + ", min eig " + fmt(min_eig) + ", |L1| " + fmt(row_sum) +
              ", assembly gap " + fmt(gap)};
}

Outcome laplacian_comparison() {
  double worst = std::numeric_limits<double>::infinity();
  for (const GraphWithBoundary& g : ensemble(false)) {
    const auto sigma = steklov_spectrum(g).sigmas;
    const auto lambda = combinatorial_laplacian_spectrum(g);
    for (std::size_t k = 0; k < g.boundary_size(); ++k) worst = std::min(worst, sigma[k] - lambda[k]);
  }
  return {worst >= -1e-8, "min(sigma_k - lambda_k) = " + fmt(worst)};
}

Outcome eigenfunction_spread() {
  double worst = std::numeric_limits<double>::infinity();
  for (const GraphWithBoundary& g : ensemble(false)) {
    std::vector<double> x = steklov_spectrum(g).boundary_eigvecs[1];
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    for (double& v : x) v -= mean;
    const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    worst = std::min(worst, (*hi - *lo) / norm - prop1_min_closed(x.size()));
  }
  return {worst >= -1e-8, "min(spread - closed form) = " + fmt(worst)};
}

Outcome search_floor() {
  bool ok = true;
  std::string detail;
  for (std::size_t d : {2, 3}) {
    const SearchResult r = exhaustive_minimizer_search(SearchOptions{2, d, 6});
    const double expected = 2.0 / static_cast<double>(d);
    const bool min_ok = r.sigma1_min && std::abs(*r.sigma1_min - expected) <= 1e-9;
    const auto path_key = canonical_key(path_graph(d));
    const bool has_path = std::any_of(r.minimizers.begin(), r.minimizers.end(),
                                      [&](const GraphWithBoundary& g) { return canonical_key(g) == path_key; });
    ok = ok && min_ok && has_path;
    if (d == 2) ok = ok && r.minimizers.size() >= 2;
    detail += (detail.empty() ? "" : "; ") + std::string("d_B = ") + std::to_string(d) + ": min " +
              (r.sigma1_min ? fmt(*r.sigma1_min) : std::string("none")) + ", " +
              std::to_string(r.minimizers.size()) + " minimizer(s), path " +
              (has_path ? "included" : "missing");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"path sharpness", path_sharpness},
      {"D family sigma1 = 1", d_family_constant},
      {"H family closed form", h_family_closed_form},
      {"H family asymptotic sharpness", asymptotic_sharpness},
      {"thm2 dominance on random graphs", thm2_dominance},
      {"weighted bound on random weighted graphs", weighted_bound_holds},
      {"spread minimum", spread_minimum},
      {"DtN structural invariants", dtn_invariants},
      {"Steklov vs Laplacian eigenvalues", laplacian_comparison},
      {"sigma1 eigenfunction spread", eigenfunction_spread},
      {"exhaustive search floor", search_floor},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  [%2zu] %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
