#pragma once

#include <functional>
#include <string>
#include <vector>

namespace steklov::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string got;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  /// Slack allowed in every inequality check (bounds, PSD, eigenvalue
  /// dominance, spread). Equality checks keep their own tolerances.
  double tolerance = 1e-8;
  /// Seed of the random ensembles.
  unsigned long long seed = 20180101;
};

/// STEKLOV_TOL when set and parseable, otherwise 1e-8.
double tolerance_from_env();

/// Runs every reproduction check; on_check is called as each one finishes.
std::vector<Check> run_verification_suite(const VerifyOptions& options,
                                          const std::function<void(const Check&)>& on_check = {});

}  // namespace steklov::cli
