#ifndef PCONCAVE_NUMERIC_CHECK_HPP
#define PCONCAVE_NUMERIC_CHECK_HPP

#include "pconcave/root_system.hpp"

#include <optional>
#include <string>

namespace pconcave {

inline constexpr double kBracketTolerance = 1e-12;
inline constexpr double kConjugationTolerance = 1e-9;

/// Outcome of one numerically verified identity.
struct NumericCheck {
  std::string claim;
  double residual = 0.0;  // Frobenius norm of the difference
  double tolerance = 0.0;
  bool pass = false;      // residual < tolerance (and any side conditions)
  std::optional<int> sign;
  std::optional<int> expected_sign;
  std::optional<Root> target;
};

}  // namespace pconcave

#endif  // PCONCAVE_NUMERIC_CHECK_HPP
