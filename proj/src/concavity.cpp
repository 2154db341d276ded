#include "pconcave/concavity.hpp"

#include "pconcave/error.hpp"
#include "pconcave/real_form.hpp"

#include <algorithm>

namespace pconcave {

const char* to_string(StringShape s) {
  switch (s) {
    case StringShape::TwoTerm: return "OK_TYPE_A";
    case StringShape::ThreeTerm: return "OK_TYPE_B";
    case StringShape::Fail: return "FAIL";
  }
  return "?";
}

namespace {

bool is_odd(int v) { return v % 2 != 0; }

}  // namespace

StringVerdict analyze_string_condition(const RootSystem& rs, const GradingElement& e,
                                       const Root& beta, const Root& alpha) {
  require_root(rs, beta, "beta");
  require_root(rs, alpha, "alpha");
  if (static_cast<int>(e.coeffs.size()) != rs.rank()) {
    throw Error(ErrorCode::InvalidInput, "grading element rank mismatch");
  }
  if (is_odd(e.value(beta))) {
    throw Error(ErrorCode::Precondition, "beta " + beta.str() + " is not compact");
  }
  if (!is_odd(e.value(alpha)) || e.value(alpha) >= 0) {
    throw Error(ErrorCode::Precondition,
                "alpha " + alpha.str() + " is not a noncompact root of negative grading");
  }

  const RootString s = root_string(rs, alpha, beta);
  StringVerdict v;
  v.alpha = alpha;
  v.beta = beta;
  v.r = s.r;
  v.q = s.q;
  v.endpoint = alpha + s.q * beta;
  v.endpoint_in_p = e.value(v.endpoint) >= 0;

  if (s.r != 0) {
    v.reason = "r=" + std::to_string(s.r) + " != 0";
  } else if (s.q == 1 || s.q == 2) {
    if (v.endpoint_in_p) {
      v.verdict = s.q == 1 ? StringShape::TwoTerm : StringShape::ThreeTerm;
    } else {
      v.reason = "endpoint " + v.endpoint.str() + " not in p";
    }
  } else {
    v.reason = "q=" + std::to_string(s.q) + " not in {1,2}";
  }
  return v;
}

ConcavityReport check_concavity_criterion(const RootSystem& rs, const GradingElement& e) {
  if (static_cast<int>(e.coeffs.size()) != rs.rank()) {
    throw Error(ErrorCode::InvalidInput, "grading element rank mismatch");
  }
  if (e.is_zero()) {
    throw Error(ErrorCode::Precondition, "trivial grading element (E = 0)");
  }
  if (std::any_of(e.coeffs.begin(), e.coeffs.end(), [](int n) { return n < 0; })) {
    throw Error(ErrorCode::Precondition, "grading coefficients must be nonnegative");
  }

  ConcavityReport report;
  report.targets = noncompact_negative_roots(rs, e);
  for (const Root& beta : classify_roots(rs, e).compact) {
    auto& verdicts = report.detail[beta];
    bool all_ok = true;
    for (const Root& alpha : report.targets) {
      verdicts.push_back(analyze_string_condition(rs, e, beta, alpha));
      all_ok = all_ok && verdicts.back().ok();
    }
    if (all_ok) report.witnesses.push_back(beta);
  }
  report.satisfied = !report.witnesses.empty();
  return report;
}

}  // namespace pconcave
