#include <algorithm>

#include "doctest.h"
#include "steklov/families.hpp"
#include "steklov/search.hpp"
#include "steklov/steklov.hpp"

using namespace steklov;

TEST_CASE("canonical key is invariant under relabeling") {
  // Same graph: boundary {0, 1}, interior triangle, attached differently labelled.
  const GraphWithBoundary a(5, {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}}, {0, 1});
  const GraphWithBoundary b(5, {{1, 4}, {0, 2}, {4, 2}, {2, 3}, {4, 3}}, {0, 1});
  CHECK(canonical_key(a) == canonical_key(b));
  const GraphWithBoundary c(5, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {2, 4}}, {0, 1});
  CHECK(canonical_key(a) != canonical_key(c));
  CHECK_THROWS_AS(canonical_key(GraphWithBoundary(3, {{0, 1}, {0, 2}, {1, 2}}, {0, 1})),
                  ParameterError);
}

TEST_CASE("search for b = 2, d_B = 3 finds the path") {
  SearchOptions options{2, 3, 6};
  const SearchResult r = exhaustive_minimizer_search(options);
  REQUIRE(r.sigma1_min);
  CHECK(*r.sigma1_min == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  REQUIRE(r.reference_is_minimizer);
  CHECK(*r.reference_is_minimizer);
  CHECK(r.graphs_examined > r.minimizers.size());
  const auto path_key = canonical_key(path_graph(3));
  CHECK(std::any_of(r.minimizers.begin(), r.minimizers.end(),
                    [&](const GraphWithBoundary& g) { return canonical_key(g) == path_key; }));
  for (const GraphWithBoundary& g : r.minimizers) {
    CHECK(validate(g).empty());
    CHECK(boundary_diameter(g) == 3);
    CHECK(g.vertex_count() <= 6);
    CHECK(steklov_spectrum(g).first_nonzero() == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("search for b = 2, d_B = 2 has several minimizers") {
  const SearchResult r = exhaustive_minimizer_search(SearchOptions{2, 2, 5});
  REQUIRE(r.sigma1_min);
  CHECK(*r.sigma1_min == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.minimizers.size() > 1);
  CHECK(*r.reference_is_minimizer);
}

TEST_CASE("search with b = 3 compares against the H graph") {
  const SearchResult r = exhaustive_minimizer_search(SearchOptions{3, 3, 6});
  REQUIRE(r.sigma1_min);
  CHECK(*r.sigma1_min <= h_family_sigma1(3, 3) + 1e-9);
  CHECK(*r.sigma1_min >= 3.0 / (2.0 * 3.0) - 1e-9);
  CHECK(r.reference_name.find('H') != std::string::npos);
}

TEST_CASE("budget and parameter errors") {
  CHECK_THROWS_AS(exhaustive_minimizer_search(SearchOptions{2, 2, 11}), BudgetExceeded);
  CHECK_THROWS_AS(exhaustive_minimizer_search(SearchOptions{2, 3, 9}), BudgetExceeded);
  SearchOptions tiny{3, 3, 8};
  tiny.budget = 10;
  CHECK_THROWS_AS(exhaustive_minimizer_search(tiny), BudgetExceeded);
  CHECK_THROWS_AS(exhaustive_minimizer_search(SearchOptions{1, 2, 5}), ParameterError);
  CHECK_THROWS_AS(exhaustive_minimizer_search(SearchOptions{2, 1, 5}), ParameterError);
}

TEST_CASE("no graph within the vertex budget reaches the requested diameter") {
  const SearchResult r = exhaustive_minimizer_search(SearchOptions{2, 5, 4});
  CHECK_FALSE(r.sigma1_min);
  CHECK(r.minimizers.empty());
}
