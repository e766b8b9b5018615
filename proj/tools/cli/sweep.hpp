#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "steklov/families.hpp"
#include "steklov/steklov.hpp"

namespace steklov::cli {

/// Inclusive integer range, written "lo:hi" or "x".
struct IntRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Throws ParameterError on malformed text or lo > hi.
IntRange parse_range(const std::string& text);

struct SweepSpec {
  FamilyKind family = FamilyKind::kH;
  Normalization norm = Normalization::kUnit;
  IntRange b{2, 2};
  IntRange boundary_diam{3, 3};
  IntRange n{2, 2};
  // random family only
  std::size_t count = 0;
  std::optional<std::uint64_t> seed;
  IntRange interior{1, 40};
  double edge_probability = 0.3;
  bool weighted = false;
};

struct SweepRow {
  std::string family;
  std::size_t b = 0;
  std::size_t boundary_diam = 0;
  std::optional<std::size_t> n;
  double sigma1 = 0.0;
  double thm1 = 0.0;
  double thm2 = 0.0;
  std::optional<double> weighted;
  std::optional<double> closed_form;
  double slack = 0.0;
};

inline constexpr const char* kSweepHeader = "family,b,d_B,n,sigma1,thm1,thm2,weighted,closed_form,slack";

/// One row per parameter tuple in canonical order (b outer, d_B or n inner;
/// random graphs in seed order). Rows may be computed concurrently.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace steklov::cli
