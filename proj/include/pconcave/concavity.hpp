#ifndef PCONCAVE_CONCAVITY_HPP
#define PCONCAVE_CONCAVITY_HPP

// Root-system criterion for pseudoconcavity of a flag domain.
//
// A compact root beta is a witness when, for every noncompact root alpha of
// negative grading, the beta-string through alpha is either
//   {alpha, alpha+beta}            with alpha+beta   in Delta(p), or
//   {alpha, alpha+beta, alpha+2b}  with alpha+2beta  in Delta(p).
// The domain is pseudoconcave when a witness exists. Strings running the other
// way ((r,q) = (1,0), (2,0)) are picked up by sweeping -beta as well.

#include "pconcave/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace pconcave {

enum class StringShape { TwoTerm, ThreeTerm, Fail };

const char* to_string(StringShape s);

struct StringVerdict {
  Root alpha;
  Root beta;
  int r = 0;
  int q = 0;
  Root endpoint;              // alpha + q beta
  bool endpoint_in_p = false;
  StringShape verdict = StringShape::Fail;
  std::string reason;         // empty unless Fail

  bool ok() const { return verdict != StringShape::Fail; }
};

struct ConcavityReport {
  bool satisfied = false;
  std::vector<Root> witnesses;
  std::vector<Root> targets;                          // noncompact negative roots
  std::map<Root, std::vector<StringVerdict>> detail;  // keyed by candidate beta
};

/// String condition for one (beta, alpha). Throws Error(Precondition) if beta
/// is not compact, or alpha is not a noncompact root of negative grading.
StringVerdict analyze_string_condition(const RootSystem& rs, const GradingElement& e,
                                       const Root& beta, const Root& alpha);

/// Sweeps every compact root (both signs). Requires a nonnegative, nonzero
/// grading vector.
ConcavityReport check_concavity_criterion(const RootSystem& rs, const GradingElement& e);

}  // namespace pconcave

#endif  // PCONCAVE_CONCAVITY_HPP
