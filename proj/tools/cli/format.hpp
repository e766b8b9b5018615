#pragma once

#include <iomanip>
#include <sstream>
#include <string>

namespace steklov::cli {

/// Human-readable number with 12 significant digits.
inline std::string human(double value) {
  std::ostringstream out;
  out << std::setprecision(12) << value;
  return out.str();
}

/// Shortest decimal that round-trips to the same double.
inline std::string round_trip(double value) {
  for (int precision = 1; precision <= 17; ++precision) {
    std::ostringstream out;
    out << std::setprecision(precision) << value;
    if (std::stod(out.str()) == value) return out.str();
  }
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

}  // namespace steklov::cli
