#ifndef PCONCAVE_REAL_FORM_HPP
#define PCONCAVE_REAL_FORM_HPP

#include "pconcave/root_system.hpp"

#include <vector>

namespace pconcave {

/// Compact / noncompact split of the roots for a flag domain whose isotropy
/// is compact and centralizes a circle. In that setting the Cartan involution
/// is Ad of the Weil operator, so a root is compact exactly when its grading
/// value is even.
struct CompactnessTable {
  std::vector<Root> compact;
  std::vector<Root> noncompact;

  bool is_compact(const Root& a) const;
};

CompactnessTable classify_roots(const RootSystem& rs, const GradingElement& e);

/// Noncompact roots with negative grading value, in root order.
std::vector<Root> noncompact_negative_roots(const RootSystem& rs, const GradingElement& e);

}  // namespace pconcave

#endif  // PCONCAVE_REAL_FORM_HPP
