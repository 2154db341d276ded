#ifndef PCONCAVE_JSON_IO_HPP
#define PCONCAVE_JSON_IO_HPP

// JSON views of the analysis results. Objects use sorted keys and roots are
// integer coefficient vectors, so equal inputs serialize to equal bytes.

#include "pconcave/concavity.hpp"
#include "pconcave/hodge.hpp"
#include "pconcave/levi_form.hpp"
#include "pconcave/numeric_check.hpp"
#include "pconcave/root_system.hpp"

#include <nlohmann/json.hpp>

namespace pconcave {

using Json = nlohmann::json;

Json root_json(const Root& a);
Json roots_json(const std::vector<Root>& roots);
Json rational_json(const Rational& q);  // "3/2", "-1", "0"

/// family, rank, cartan, lengths, positive roots and all roots.
Json describe_json(const RootSystem& rs);

Json concavity_json(const RootSystem& rs, const GradingElement& e, const ConcavityReport& report);

Json numeric_check_json(const NumericCheck& c);

Json group_json(const GroupDescriptor& g);
Json diamond_json(const DeligneDiamond& d);
Json degeneration_json(const HodgeNumbers& h, const DegenerationVerdict& v);
/// h is echoed in the input order h^{n,0}, ..., h^{0,n}.
Json period_json(const HodgeNumbers& h, const GroupDescriptor& g, const std::vector<DegenerationVerdict>& degs);

Json levi_json(const LeviReport& r);

/// {"n": 3, "terms": [{"coef": [re, im], "z": [...], "zbar": [...]}, ...],
///  "point": [[re, im], ...]}. A coefficient or point entry may also be a
/// plain number. Throws Error(MalformedJson) on missing or mistyped fields.
DefiningFunction defining_function_from_json(const Json& j);

}  // namespace pconcave

#endif  // PCONCAVE_JSON_IO_HPP
