#include "pconcave/real_form.hpp"

#include <algorithm>

namespace pconcave {

bool CompactnessTable::is_compact(const Root& a) const {
  return std::find(compact.begin(), compact.end(), a) != compact.end();
}

CompactnessTable classify_roots(const RootSystem& rs, const GradingElement& e) {
  CompactnessTable t;
  for (const auto& [level, roots] : graded_pieces(rs, e)) {
    auto& bucket = level % 2 == 0 ? t.compact : t.noncompact;
    bucket.insert(bucket.end(), roots.begin(), roots.end());
  }
  auto by_index = [&](const Root& a, const Root& b) { return rs.index_of(a) < rs.index_of(b); };
  std::sort(t.compact.begin(), t.compact.end(), by_index);
  std::sort(t.noncompact.begin(), t.noncompact.end(), by_index);
  return t;
}

std::vector<Root> noncompact_negative_roots(const RootSystem& rs, const GradingElement& e) {
  std::vector<Root> out;
  for (const Root& a : classify_roots(rs, e).noncompact) {
    if (e.value(a) < 0) out.push_back(a);
  }
  return out;
}

}  // namespace pconcave
