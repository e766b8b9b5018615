#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cli/format.hpp"
#include "steklov/bounds.hpp"
#include "steklov/families.hpp"
#include "steklov/search.hpp"
#include "steklov/steklov.hpp"

namespace steklov::cli {

double tolerance_from_env() {
  if (const char* env = std::getenv("STEKLOV_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(value)) return value;
  }
  return 1e-8;
}

namespace {

class Suite {
 public:
  Suite(std::vector<Check>& out, const std::function<void(const Check&)>& on_check)
      : out_(out), on_check_(on_check) {}

  void add(std::string name, std::string expected, std::string got, double tol, bool pass) {
    out_.push_back({std::move(name), std::move(expected), std::move(got), tol, pass});
    if (on_check_) on_check_(out_.back());
  }

  /// |got - expected| <= tol.
  void close(std::string name, double expected, double got, double tol) {
    add(std::move(name), human(expected), human(got), tol, std::abs(got - expected) <= tol);
  }

 private:
  std::vector<Check>& out_;
  const std::function<void(const Check&)>& on_check_;
};

double max_asymmetry(const DenseMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  }
  return worst;
}

double max_difference(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

void families_checks(Suite& suite) {
  double path_err = 0.0;
  bool path_bounds_exact = true;
  for (std::size_t n = 2; n <= 50; ++n) {
    const double expected = 2.0 / static_cast<double>(n);
    path_err = std::max(path_err,
                        std::abs(steklov_spectrum(path_graph(n)).first_nonzero() - expected));
    path_bounds_exact = path_bounds_exact && thm1_bound(2, n) == expected &&
                        thm2_bound(2, n) == expected;
  }
  suite.add("path sharpness: sigma1(P_n) = 2/n, n = 2..50", "max error <= 1e-9",
            human(path_err), 1e-9, path_err <= 1e-9);
  suite.add("path sharpness: thm1(2,n) = thm2(2,n) = 2/n exactly", "true",
            path_bounds_exact ? "true" : "false", 0.0, path_bounds_exact);

  double d_err = 0.0;
  bool d_linear = true;
  for (std::size_t n = 0; n <= 50; ++n) {
    const GraphWithBoundary g = d_family(n);
    d_err = std::max(d_err, std::abs(steklov_spectrum(g).first_nonzero() - 1.0));
    d_linear = d_linear && boundary_diameter(g) == 2 && diameter(g) == std::max<std::size_t>(2, n + 1);
  }
  suite.add("D family: sigma1(D_{n+3}) = 1, n = 0..50", "max error <= 1e-9", human(d_err), 1e-9,
            d_err <= 1e-9);
  suite.add("D family: d_B = 2 and diameter = max(2, n+1)", "true", d_linear ? "true" : "false",
            0.0, d_linear);

  double h_err = 0.0;
  bool even_rational = true;
  for (std::size_t b = 2; b <= 10; ++b) {
    const std::size_t pq = (b / 2) * ((b + 1) / 2);
    for (std::size_t d = 3; d <= 40; ++d) {
      h_err = std::max(h_err, std::abs(steklov_spectrum(h_family(b, d)).first_nonzero() -
                                       h_family_sigma1(b, d)));
      if (b % 2 == 0) {
        // b / (pq (d-2) + b) == 4 / (b (d-2) + 4), cross-multiplied.
        even_rational = even_rational && b * (b * (d - 2) + 4) == 4 * (pq * (d - 2) + b);
      }
    }
  }
  suite.add("H family: sigma1 = b/(pq(d_B-2)+b), b = 2..10, d_B = 3..40", "max error <= 1e-9",
            human(h_err), 1e-9, h_err <= 1e-9);
  suite.add("H family: even b matches 4/(b(d_B-2)+4) as rationals", "true",
            even_rational ? "true" : "false", 0.0, even_rational);

  suite.close("H^6_5: sigma1 = 2/11", 2.0 / 11.0, steklov_spectrum(h_family(6, 5)).first_nonzero(),
              1e-9);
  const BoundReport h7 = check_bounds(h_family(7, 10));
  suite.close("H^7_10: sigma1 = 7/103", 7.0 / 103.0, h7.sigma1, 1e-9);
  suite.close("H^7_10: thm2 = 7/120", 7.0 / 120.0, h7.thm2, 1e-15);

  {
    const SteklovSpectrum s = steklov_spectrum(h_family(6, 5));
    const double hub = std::abs(s.extensions[1][6]);
    suite.close("H^6_5: hub value of the sigma1 eigenfunction = 3 sqrt(6)/22",
                3.0 * std::sqrt(6.0) / 22.0, hub, 1e-8);
  }

  double asym_worst = -std::numeric_limits<double>::infinity();
  bool asym_ok = true;
  for (std::size_t b = 3; b <= 8; ++b) {
    const double pq = static_cast<double>((b / 2) * ((b + 1) / 2));
    const double limit = static_cast<double>(b) / pq;
    for (std::size_t d : {10u, 100u, 1000u}) {
      const double dd = static_cast<double>(d);
      const double scaled = dd * steklov_spectrum(h_family(b, d)).first_nonzero();
      const double allowed = 2.0 * limit * limit * pq / (static_cast<double>(b) * dd);
      const double err = std::abs(scaled - limit);
      asym_ok = asym_ok && err <= allowed;
      asym_worst = std::max(asym_worst, err / allowed);
    }
  }
  suite.add("asymptotic sharpness: |d_B sigma1(H) - b/pq| <= 2 L^2 pq/(b d_B)",
            "error/allowed <= 1", human(asym_worst), 0.0, asym_ok);
}

void bound_formula_checks(Suite& suite) {
  suite.close("thm1(3, 4) = 3/16", 3.0 / 16.0, thm1_bound(3, 4), 0.0);
  suite.close("thm1(6, 5) = 6/125", 6.0 / 125.0, thm1_bound(6, 5), 0.0);
  suite.close("thm2(6, 5) = 2/15", 2.0 / 15.0, thm2_bound(6, 5), 1e-17);
  suite.close("thm2(7, 10) = 7/120", 7.0 / 120.0, thm2_bound(7, 10), 0.0);

  bool dominance = true;
  for (std::size_t b = 2; b <= 64; ++b) {
    for (std::size_t d = 1; d <= 256; ++d) {
      dominance = dominance && thm2_bound(b, d) >= thm1_bound(b, d) - 1e-15;
    }
  }
  suite.add("thm2 >= thm1 for 2 <= b <= 64, 1 <= d_B <= 256", "true",
            dominance ? "true" : "false", 1e-15, dominance);
}

void spread_checks(Suite& suite) {
  double worst = 0.0;
  bool argmin_ok = true;
  for (std::size_t b = 2; b <= 30; ++b) {
    const auto candidates = spread_candidates(b);
    const auto best = std::min_element(candidates.begin(), candidates.end(),
                                       [](const auto& x, const auto& y) { return x.value < y.value; });
    worst = std::max(worst, std::abs(best->value - prop1_min_closed(b)));
    const double at_floor = candidates[b / 2 - 1].value;
    argmin_ok = argmin_ok && std::abs(at_floor - prop1_min_closed(b)) <= 1e-12;
  }
  suite.add("spread: min over two-level candidates = closed form, b = 2..30",
            "max error <= 1e-12", human(worst), 1e-12, worst <= 1e-12 && argmin_ok);

  for (std::size_t b = 2; b <= 10; ++b) {
    const double closed = prop1_min_closed(b);
    const double oracle = prop1_oracle(b, 10000, 200, 1000 + b).value;
    suite.add("spread oracle b = " + std::to_string(b) + " (10^4 samples)",
              "[" + human(closed - 1e-9) + ", " + human(closed + 1e-3) + "]", human(oracle), 1e-3,
              oracle >= closed - 1e-9 && oracle <= closed + 1e-3);
  }
}

void ensemble_checks(Suite& suite, const VerifyOptions& options) {
  const double tol = options.tolerance;
  const auto graphs = random_ensemble({500, options.seed, 40, 12, false});

  double thm2_slack = std::numeric_limits<double>::infinity();
  double asym = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  double row_sum = 0.0;
  double route_gap = 0.0;
  double note2 = std::numeric_limits<double>::infinity();
  double spread_slack = std::numeric_limits<double>::infinity();

  for (const GraphWithBoundary& g : graphs) {
    const std::size_t b = g.boundary_size();
    const SteklovSpectrum s = steklov_spectrum(g);
    thm2_slack = std::min(thm2_slack, s.first_nonzero() - thm2_bound(b, boundary_diameter(g)));

    const DenseMatrix raw = schur_complement_dtn(g);
    asym = std::max(asym, max_asymmetry(raw));
    min_eig = std::min(min_eig, eigenvalues_symmetric(dtn_matrix(g)).front());
    const std::vector<double> ones(b, 1.0);
    row_sum = std::max(row_sum, inf_norm(raw.multiply(ones)));
    route_gap = std::max(route_gap, max_difference(raw, dtn_matrix_by_extension(g)));

    const std::vector<double> lambda = combinatorial_laplacian_spectrum(g);
    for (std::size_t k = 0; k < b; ++k) note2 = std::min(note2, s.sigmas[k] - lambda[k]);

    std::vector<double> boundary_values = s.boundary_eigvecs[1];
    if (project_to_spread_feasible(boundary_values)) {
      spread_slack = std::min(spread_slack, spread(boundary_values) - prop1_min_closed(b));
    }
  }
  suite.add("thm2 dominance on 500 random graphs", "min(sigma1 - thm2) >= -tol",
            human(thm2_slack), tol, thm2_slack >= -tol);
  suite.add("DtN symmetric on 500 random graphs", "asymmetry <= 1e-10", human(asym), 1e-10,
            asym <= 1e-10);
  suite.add("DtN positive semidefinite on 500 random graphs", "min eigenvalue >= -tol",
            human(min_eig), tol, min_eig >= -tol);
  suite.add("DtN annihilates constants on 500 random graphs", "|Λ1| <= 1e-8", human(row_sum), 1e-8,
            row_sum <= 1e-8);
  suite.add("DtN Schur assembly = harmonic-extension assembly", "max gap <= 1e-8",
            human(route_gap), 1e-8, route_gap <= 1e-8);
  suite.add("sigma_k >= lambda_k for k < b on 500 random graphs", "min(sigma_k - lambda_k) >= -tol",
            human(note2), tol, note2 >= -tol);
  suite.add("sigma1 eigenfunction spread >= closed-form minimum", "min slack >= -tol",
            human(spread_slack), tol, spread_slack >= -tol);

  const auto weighted = random_ensemble({500, options.seed + 7919, 40, 12, true});
  double weighted_slack = std::numeric_limits<double>::infinity();
  for (const GraphWithBoundary& g : weighted) {
    const double sigma1 = steklov_spectrum(g, Normalization::kMeasure).first_nonzero();
    weighted_slack = std::min(weighted_slack, sigma1 - weighted_bound(g));
  }
  suite.add("weighted bound on 500 random weighted graphs (measure)",
            "min(sigma1 - c/(d_B Vol B)) >= -tol", human(weighted_slack), tol,
            weighted_slack >= -tol);
}

void search_checks(Suite& suite) {
  for (std::size_t d : {2u, 3u}) {
    SearchOptions options;
    options.b = 2;
    options.boundary_diam = d;
    options.max_vertices = 6;
    const SearchResult r = exhaustive_minimizer_search(options);
    const double expected = 2.0 / static_cast<double>(d);
    const bool pass = r.sigma1_min && std::abs(*r.sigma1_min - expected) <= 1e-9 &&
                      r.reference_is_minimizer.value_or(false) &&
                      (d != 2 || r.minimizers.size() >= 2);
    suite.add("exhaustive search b = 2, d_B = " + std::to_string(d) + ", <= 6 vertices",
              "min " + human(expected) + ", path among minimizers" +
                  (d == 2 ? ", not unique" : ""),
              "min " + (r.sigma1_min ? human(*r.sigma1_min) : std::string("none")) + ", " +
                  std::to_string(r.minimizers.size()) + " minimizer(s), path " +
                  (r.reference_is_minimizer.value_or(false) ? "included" : "missing"),
              1e-9, pass);
  }
}

}  // namespace

std::vector<Check> run_verification_suite(const VerifyOptions& options,
                                          const std::function<void(const Check&)>& on_check) {
  std::vector<Check> checks;
  Suite suite(checks, on_check);
  families_checks(suite);
  bound_formula_checks(suite);
  spread_checks(suite);
  ensemble_checks(suite, options);
  search_checks(suite);
  return checks;
}

}  // namespace steklov::cli
