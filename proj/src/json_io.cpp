#include "pconcave/json_io.hpp"

#include "pconcave/error.hpp"

#include <algorithm>

namespace pconcave {

Json root_json(const Root& a) { return Json(a.coeffs()); }

Json roots_json(const std::vector<Root>& roots) {
  Json out = Json::array();
  for (const auto& a : roots) out.push_back(root_json(a));
  return out;
}

Json rational_json(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Json describe_json(const RootSystem& rs) {
  Json cartan = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  Json lengths = Json::array();
  for (int i = 0; i < rs.rank(); ++i) lengths.push_back(rational_json(rs.simple_length(i)));
  return {
      {"family", std::string(1, family_letter(rs.type().family))},
      {"rank", rs.rank()},
      {"type", rs.type().name()},
      {"cartan", cartan},
      {"simple_lengths", lengths},
      {"positive_roots", roots_json(rs.positive_roots())},
      {"roots", roots_json(rs.roots())},
      {"root_count", rs.roots().size()},
  };
}

Json concavity_json(const RootSystem& rs, const GradingElement& e, const ConcavityReport& report) {
  std::vector<Root> betas;
  for (const auto& entry : report.detail) betas.push_back(entry.first);
  std::sort(betas.begin(), betas.end(),
            [&](const Root& a, const Root& b) { return rs.index_of(a) < rs.index_of(b); });
  Json detail = Json::array();
  for (const Root& beta : betas) {
    const auto& verdicts = report.detail.at(beta);
    Json strings = Json::array();
    bool ok = true;
    for (const auto& v : verdicts) {
      Json s = {
          {"alpha", root_json(v.alpha)}, {"r", v.r}, {"q", v.q}, {"endpoint", root_json(v.endpoint)},
          {"endpoint_in_p", v.endpoint_in_p}, {"verdict", to_string(v.verdict)},
      };
      if (!v.ok()) s["reason"] = v.reason;
      ok = ok && v.ok();
      strings.push_back(s);
    }
    detail.push_back({{"beta", root_json(beta)}, {"witness", ok}, {"strings", strings}});
  }
  const ParabolicData pd = parabolic_data(rs, e);
  return {
      {"family", std::string(1, family_letter(rs.type().family))},
      {"rank", rs.rank()},
      {"grading", e.coeffs},
      {"satisfied", report.satisfied},
      {"witnesses", roots_json(report.witnesses)},
      {"noncompact_negative_roots", roots_json(report.targets)},
      {"crossed_nodes", pd.crossed},
      {"flag_dimension", pd.dim},
      {"detail", detail},
  };
}

Json numeric_check_json(const NumericCheck& c) {
  Json out = {{"claim", c.claim}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}};
  if (c.sign) out["sign"] = *c.sign;
  if (c.expected_sign) out["expected_sign"] = *c.expected_sign;
  if (c.target) out["target"] = root_json(*c.target);
  return out;
}

Json group_json(const GroupDescriptor& g) {
  return {
      {"family", to_string(g.family)}, {"parameters", g.parameters}, {"name", g.name},
      {"isotropy", g.isotropy},        {"complex_dimension", g.complex_dimension},
      {"trivial", g.trivial},          {"notes", g.notes},
  };
}

Json diamond_json(const DeligneDiamond& d) {
  Json rows = Json::array();
  for (int p = 0; p <= d.weight; ++p) {
    Json row = Json::array();
    for (int q = 0; q <= d.weight; ++q) row.push_back(d.at(p, q));
    rows.push_back(row);
  }
  return {{"weight", d.weight}, {"i", rows}, {"rank_N", d.rank_n}, {"total", d.total()}};
}

Json degeneration_json(const HodgeNumbers& h, const DegenerationVerdict& v) {
  Json clauses = Json::array();
  for (const auto& c : check_diamond_clauses(h, v.spec, v.diamond)) {
    clauses.push_back({{"clause", c.clause}, {"holds", c.holds}});
  }
  Json out = {
      {"spec", v.spec.str()},
      {"kind", to_string(v.spec.kind)},
      {"diamond", diamond_json(v.diamond)},
      {"clauses", clauses},
      {"condition_met", v.report.condition_met},
      {"witness_p", v.report.witness_p ? Json(*v.report.witness_p) : Json(nullptr)},
      {"ell", v.report.ell ? Json(*v.report.ell) : Json(nullptr)},
  };
  if (v.spec.kind == DegenerationKind::TypeI) out["p_o"] = v.spec.p_o;
  return out;
}

Json period_json(const HodgeNumbers& h, const GroupDescriptor& g, const std::vector<DegenerationVerdict>& degs) {
  Json values = Json::object();
  for (const auto& [p, q] : grading_values_on_V(h)) values[std::to_string(p)] = rational_json(q);
  Json spectrum = Json::array();
  for (const auto& q : grading_spectrum(h)) spectrum.push_back(rational_json(q));
  Json list = Json::array();
  for (const auto& v : degs) list.push_back(degeneration_json(h, v));
  return {
      {"weight", h.weight},
      {"h", std::vector<int>(h.h.rbegin(), h.h.rend())},
      {"dim_V", h.dim()},
      {"group", group_json(g)},
      {"grading_values", values},
      {"grading_spectrum", spectrum},
      {"degenerations", list},
  };
}

Json levi_json(const LeviReport& r) {
  return {
      {"n", r.n},
      {"eigenvalues", r.eigenvalues},
      {"negatives", r.negatives},
      {"zeros", r.zeros},
      {"positives", r.positives},
      {"pseudoconcave", r.pseudoconcave},
      {"gradient_norm", r.gradient_norm},
  };
}

namespace {

std::complex<double> complex_from(const Json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw Error(ErrorCode::MalformedJson, std::string(what) + " must be a number or [re, im]");
}

std::vector<int> exponents_from(const Json& j, int n, const char* what) {
  if (j.is_null()) return std::vector<int>(static_cast<std::size_t>(n), 0);
  if (!j.is_array()) throw Error(ErrorCode::MalformedJson, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw Error(ErrorCode::MalformedJson, std::string(what) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

DefiningFunction defining_function_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "levi input must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw Error(ErrorCode::MalformedJson, "levi input needs integer field 'n'");
  }
  if (!j.contains("terms") || !j["terms"].is_array()) {
    throw Error(ErrorCode::MalformedJson, "levi input needs array field 'terms'");
  }
  Polynomial p;
  p.n = j["n"].get<int>();
  if (p.n < 1) throw Error(ErrorCode::InvalidInput, "n must be positive");
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("coef")) throw Error(ErrorCode::MalformedJson, "each term needs 'coef'");
    p.terms.push_back({complex_from(t["coef"], "coef"), exponents_from(t.value("z", Json()), p.n, "z"),
                       exponents_from(t.value("zbar", Json()), p.n, "zbar")});
  }
  Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(p.n);
  if (j.contains("point")) {
    const Json& pt = j["point"];
    if (!pt.is_array() || static_cast<int>(pt.size()) != p.n) {
      throw Error(ErrorCode::MalformedJson, "'point' must be an array of n coordinates");
    }
    for (int k = 0; k < p.n; ++k) z0(k) = complex_from(pt[static_cast<std::size_t>(k)], "point coordinate");
  }
  return DefiningFunction::from_polynomial(std::move(p), z0);
}

}  // namespace pconcave
