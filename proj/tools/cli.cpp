#include "cli.hpp"

#include "pconcave/chevalley.hpp"
#include "pconcave/concavity.hpp"
#include "pconcave/error.hpp"
#include "pconcave/hodge.hpp"
#include "pconcave/json_io.hpp"
#include "pconcave/levi_form.hpp"
#include "pconcave/matrix_rep.hpp"
#include "pconcave/root_system.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pconcave::cli {

namespace {

constexpr int kMaxRank = 6;
constexpr int kMaxWeight = 10;
constexpr int kMaxDimV = 64;

// ---------------------------------------------------------------------------
// Request values arrive either as flag strings or as JSON values from --input.

int as_int(const Json& v, const std::string& key) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      const int out = std::stoi(s, &used);
      if (used == s.size()) return out;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, key + " must be an integer");
}

double as_double(const Json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      const double out = std::stod(s, &used);
      if (used == s.size()) return out;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::InvalidInput, key + " must be a number");
}

std::vector<int> split_ints(const std::string& s, char sep, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(as_int(Json(item), key));
  if (out.empty()) throw Error(ErrorCode::InvalidInput, key + " is empty");
  return out;
}

std::vector<int> as_int_list(const Json& v, const std::string& key) {
  if (v.is_string()) return split_ints(v.get<std::string>(), ',', key);
  if (v.is_array()) {
    std::vector<int> out;
    for (const auto& e : v) out.push_back(as_int(e, key));
    return out;
  }
  throw Error(ErrorCode::InvalidInput, key + " must be a list of integers");
}

std::vector<std::vector<int>> as_matrix(const Json& v, const std::string& key) {
  std::vector<std::vector<int>> rows;
  if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(split_ints(row, ',', key));
  } else if (v.is_array()) {
    for (const auto& r : v) rows.push_back(as_int_list(r, key));
  } else {
    throw Error(ErrorCode::InvalidInput, key + " must be rows 'a,b;c,d' or a nested array");
  }
  return rows;
}

bool has(const Json& req, const std::string& key) { return req.contains(key) && !req[key].is_null(); }

RootSystem resolve_system(const Json& req) {
  if (!has(req, "family")) throw Error(ErrorCode::InvalidInput, "missing --family");
  const std::string letter = req["family"].is_string() ? req["family"].get<std::string>() : "";
  if (letter.size() != 1) throw Error(ErrorCode::InvalidInput, "family must be one of A, B, C, D");
  LieType t{family_from_letter(letter[0]), 0};

  std::vector<std::vector<int>> rows;
  if (has(req, "cartan")) rows = as_matrix(req["cartan"], "cartan");
  if (has(req, "rank")) {
    t.rank = as_int(req["rank"], "rank");
  } else if (!rows.empty()) {
    t.rank = static_cast<int>(rows.size());
  } else {
    throw Error(ErrorCode::InvalidInput, "missing --rank");
  }
  if (t.rank > kMaxRank) throw Error(ErrorCode::OutOfBounds, "rank must be <= " + std::to_string(kMaxRank));
  t.validate();
  if (rows.empty()) return RootSystem::build(t);

  Eigen::MatrixXi a(t.rank, t.rank);
  if (static_cast<int>(rows.size()) != t.rank) throw Error(ErrorCode::InvalidInput, "cartan matrix must be rank x rank");
  for (int i = 0; i < t.rank; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != t.rank) {
      throw Error(ErrorCode::InvalidInput, "cartan matrix must be rank x rank");
    }
    for (int j = 0; j < t.rank; ++j) a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return RootSystem::from_cartan(t, a);
}

GradingElement resolve_grading(const Json& req, const RootSystem& rs) {
  if (!has(req, "grading")) throw Error(ErrorCode::InvalidInput, "missing --grading");
  GradingElement e{as_int_list(req["grading"], "grading")};
  if (static_cast<int>(e.coeffs.size()) != rs.rank()) {
    throw Error(ErrorCode::InvalidInput, "grading needs " + std::to_string(rs.rank()) + " entries");
  }
  return e;
}

HodgeNumbers resolve_hodge(const Json& req) {
  if (!has(req, "weight")) throw Error(ErrorCode::InvalidInput, "missing --weight");
  if (!has(req, "h")) throw Error(ErrorCode::InvalidInput, "missing --h");
  const int n = as_int(req["weight"], "weight");
  if (n < 0) throw Error(ErrorCode::InvalidInput, "weight must be nonnegative");
  if (n > kMaxWeight) throw Error(ErrorCode::OutOfBounds, "weight must be <= " + std::to_string(kMaxWeight));
  const std::vector<int> values = as_int_list(req["h"], "h");
  if (static_cast<int>(values.size()) != n + 1) {
    throw Error(ErrorCode::InvalidInput, "h needs weight + 1 = " + std::to_string(n + 1) + " entries");
  }
  long total = 0;
  for (int v : values) total += v;
  if (total > kMaxDimV) throw Error(ErrorCode::OutOfBounds, "dim V must be <= " + std::to_string(kMaxDimV));
  return HodgeNumbers::from_descending(n, values);
}

// ---------------------------------------------------------------------------
// Analyses

Json run_concavity(const Json& req) {
  const RootSystem rs = resolve_system(req);
  const GradingElement e = resolve_grading(req, rs);
  return concavity_json(rs, e, check_concavity_criterion(rs, e));
}

Json run_describe(const Json& req) { return describe_json(resolve_system(req)); }

Json run_period(const Json& req) {
  const HodgeNumbers h = resolve_hodge(req);
  const GroupDescriptor g = group_of_period_domain(h);
  std::vector<DegenerationVerdict> degs;
  if (has(req, "degeneration")) {
    if (!req["degeneration"].is_string()) throw Error(ErrorCode::InvalidInput, "degeneration must be a string");
    const DegenerationSpec d = DegenerationSpec::parse(req["degeneration"].get<std::string>());
    degs.push_back({d, limit_diamond(h, d), check_boundary_concavity(h, d)});
  } else {
    degs = enumerate_minimal_degenerations(h);
  }
  return period_json(h, g, degs);
}

Json run_levi(const Json& req) { return levi_json(levi_analyze(defining_function_from_json(req))); }

Json count_check(const std::string& claim, std::int64_t violations) {
  NumericCheck c;
  c.claim = claim;
  c.residual = static_cast<double>(violations);
  c.tolerance = 1.0;
  c.pass = violations == 0;
  return numeric_check_json(c);
}

std::vector<RootSystem> default_systems(const std::vector<LieType>& types) {
  std::vector<RootSystem> out;
  for (const auto& t : types) out.push_back(RootSystem::build(t));
  return out;
}

void suite_chevalley(const std::vector<RootSystem>& systems, std::vector<Json>& out) {
  for (const RootSystem& rs : systems) {
    const ChevalleyConstants cc = structure_constants(rs);
    const std::string t = rs.type().name() + ": ";
    out.push_back(count_check(t + "violations of c(a,b) = -c(b,a) = -c(-a,-b), |c(a,b)| = r+1",
                              static_cast<std::int64_t>(check_constant_invariants(cc).size())));
    out.push_back(count_check(t + "Jacobi violations over basis triples", jacobi_violations(BracketAlgebra(cc))));
    out.push_back(count_check(t + "violations of [x^-b,[x^b,x^a]] = q(r+1) x^a",
                              static_cast<std::int64_t>(verify_bracket_identities(cc).violations.size())));
    out.push_back(numeric_check_json(realization_residual(fundamental_rep(rs), cc)));
  }
}

void suite_cayley(const std::vector<RootSystem>& systems, std::vector<Json>& out) {
  for (const RootSystem& rs : systems) {
    const ChevalleyConstants cc = structure_constants(rs);
    const Realization rep = fundamental_rep(rs);
    for (const auto& [a, b] : cayley_pairs(rs)) {
      NumericCheck c = verify_cayley_conjugation(rep, cc, a, b);
      c.claim = rs.type().name() + ": " + c.claim;
      out.push_back(numeric_check_json(c));
    }
  }
}

void suite_sl2(std::vector<Json>& out) {
  for (auto kind : {DegenerationKind::TypeI, DegenerationKind::TypeII}) {
    const Sl2CayleyReport r = verify_sl2_cayley(kind);
    for (const auto& c : r.items) out.push_back(numeric_check_json(c));
  }
}

void fixed_point_case(const RootSystem& rs, const GradingElement& e, const Json& req, std::vector<Json>& out) {
  const Realization rep = fundamental_rep(rs);
  std::vector<double> eps = {0.01, 0.1, 1.0};
  if (has(req, "eps")) eps = {as_double(req["eps"], "eps")};
  std::vector<Root> betas;
  if (has(req, "beta")) {
    betas.emplace_back(as_int_list(req["beta"], "beta"));
  } else {
    betas = check_concavity_criterion(rs, e).witnesses;
    if (betas.empty()) throw Error(ErrorCode::Precondition, "the grading has no witness root");
  }
  for (const Root& b : betas) {
    for (double x : eps) {
      NumericCheck c = verify_cayley_fixed_point(rep, e, b, x);
      c.claim = rs.type().name() + ": " + c.claim;
      out.push_back(numeric_check_json(c));
    }
  }
}

void suite_fixed_point(const Json& req, std::vector<Json>& out) {
  if (has(req, "family")) {
    const RootSystem rs = resolve_system(req);
    fixed_point_case(rs, resolve_grading(req, rs), req, out);
    return;
  }
  Eigen::MatrixXi so5(2, 2);
  so5 << 2, -1, -2, 2;
  fixed_point_case(RootSystem::build({Family::A, 2}), GradingElement{{1, 1}}, req, out);
  fixed_point_case(RootSystem::from_cartan({Family::B, 2}, so5), GradingElement{{1, 0}}, req, out);
}

std::vector<Json> run_verify(const Json& req) {
  const std::string suite = has(req, "suite") && req["suite"].is_string() ? req["suite"].get<std::string>() : "all";
  const bool given = has(req, "family");
  auto systems = [&](const std::vector<LieType>& defaults) {
    return given ? std::vector<RootSystem>{resolve_system(req)} : default_systems(defaults);
  };
  const std::vector<LieType> chevalley_defaults = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3},
                                                   {Family::B, 2}, {Family::C, 2}, {Family::D, 4}};
  const std::vector<LieType> cayley_defaults = {{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                                {Family::C, 2}, {Family::D, 4}};

  std::vector<Json> out;
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "chevalley") {
    suite_chevalley(systems(chevalley_defaults), out);
    known = true;
  }
  if (all || suite == "prop33" || suite == "cayley") {
    suite_cayley(systems(cayley_defaults), out);
    known = true;
  }
  if (all || suite == "lemma41" || suite == "sl2") {
    suite_sl2(out);
    known = true;
  }
  if ((all && (!given || has(req, "grading"))) || suite == "fixed-point") {
    suite_fixed_point(req, out);
    known = true;
  }
  if (!known) {
    throw Error(ErrorCode::InvalidInput,
                "unknown suite '" + suite + "' (chevalley, prop33|cayley, lemma41|sl2, fixed-point, all)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// --pretty renderings, built from the same JSON as the machine output.

std::string root_text(const Json& r) {
  std::string s = "[";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i].get<int>());
  return s + "]";
}

std::string roots_text(const Json& rs) {
  std::string s;
  for (const auto& r : rs) s += (s.empty() ? "" : " ") + root_text(r);
  return s.empty() ? "(none)" : s;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void pretty_concavity(const Json& j, std::ostream& os) {
  std::string grading;
  for (const auto& v : j["grading"]) grading += (grading.empty() ? "" : ",") + std::to_string(v.get<int>());
  os << j["family"].get<std::string>() << j["rank"].get<int>() << "  grading (" << grading << ")  "
     << (j["satisfied"].get<bool>() ? "satisfied" : "not satisfied") << "\n";
  os << "witnesses: " << roots_text(j["witnesses"]) << "\n";
  os << "noncompact negative roots: " << roots_text(j["noncompact_negative_roots"]) << "\n";
  os << pad("beta", 14) << pad("alpha", 14) << pad("(r,q)", 8) << pad("endpoint", 14) << "verdict\n";
  for (const auto& d : j["detail"]) {
    for (const auto& s : d["strings"]) {
      os << pad(root_text(d["beta"]), 14) << pad(root_text(s["alpha"]), 14)
         << pad("(" + std::to_string(s["r"].get<int>()) + "," + std::to_string(s["q"].get<int>()) + ")", 8)
         << pad(root_text(s["endpoint"]), 14) << s["verdict"].get<std::string>();
      if (s.contains("reason")) os << "  " << s["reason"].get<std::string>();
      os << "\n";
    }
  }
}

void pretty_describe(const Json& j, std::ostream& os) {
  os << j["type"].get<std::string>() << "  " << j["root_count"].get<int>() << " roots\ncartan:\n";
  for (const auto& row : j["cartan"]) {
    os << " ";
    for (const auto& v : row) os << " " << pad(std::to_string(v.get<int>()), 3);
    os << "\n";
  }
  os << "positive roots: " << roots_text(j["positive_roots"]) << "\n";
}

void pretty_period(const Json& j, std::ostream& os) {
  const Json& g = j["group"];
  os << "weight " << j["weight"].get<int>() << ", dim V = " << j["dim_V"].get<int>() << "\n";
  os << "group " << g["name"].get<std::string>() << ", isotropy " << g["isotropy"].get<std::string>()
     << ", dim_C D = " << g["complex_dimension"].get<int>() << "\n";
  for (const auto& n : g["notes"]) os << "  note: " << n.get<std::string>() << "\n";
  for (const auto& d : j["degenerations"]) {
    os << d["spec"].get<std::string>() << "  rank N = " << d["diamond"]["rank_N"].get<int>() << "  "
       << (d["condition_met"].get<bool>() ? "met, witness p = " + std::to_string(d["witness_p"].get<int>())
                                          : std::string("not met"))
       << "\n";
    const Json& rows = d["diamond"]["i"];
    // Print with p increasing downwards and q to the right.
    for (const auto& row : rows) {
      os << "   ";
      for (const auto& v : row) os << " " << v.get<int>();
      os << "\n";
    }
  }
}

void pretty_levi(const Json& j, std::ostream& os) {
  os << "eigenvalues:";
  for (const auto& v : j["eigenvalues"]) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.6g", v.get<double>());
    os << buf;
  }
  os << "\nnegatives " << j["negatives"].get<int>() << ", zeros " << j["zeros"].get<int>() << ", positives "
     << j["positives"].get<int>() << "\n"
     << (j["pseudoconcave"].get<bool>() ? "pseudoconcave boundary point" : "not a pseudoconcave boundary point")
     << "\n";
}

void pretty_checks(const std::vector<Json>& checks, std::ostream& os) {
  int failed = 0;
  for (const auto& c : checks) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%10.3e", c["residual"].get<double>());
    const bool pass = c["pass"].get<bool>();
    failed += pass ? 0 : 1;
    os << (pass ? "PASS " : "FAIL ") << buf << "  " << c["claim"].get<std::string>();
    if (c.contains("sign")) os << "  sign " << c["sign"].get<int>();
    os << "\n";
  }
  os << checks.size() - static_cast<std::size_t>(failed) << "/" << checks.size() << " passed\n";
}

void write_error(std::ostream& err, ErrorCode code, const std::string& message) {
  err << Json{{"error", to_string(code)}, {"code", static_cast<int>(code)}, {"message", message}}.dump() << "\n";
}

Json load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read input file " + path);
  try {
    Json j = Json::parse(in);
    if (!j.is_object()) throw Error(ErrorCode::MalformedJson, "input file must hold a JSON object");
    return j;
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, std::string("input file: ") + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudoconcavity of flag domains and period domains", "pconcave"};
  app.require_subcommand(1);
  std::string input;
  bool pretty = false;
  bool seedless = false;
  app.add_option("--input", input, "JSON file whose keys mirror the flags; flags take precedence");
  app.add_flag("--pretty", pretty, "Human-readable table instead of JSON");
  app.add_flag("--seedless", seedless, "Accepted for pipelines; no analysis uses randomness");

  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> given;
  auto opt = [&](CLI::App* sub, const std::string& key, const std::string& help) {
    given[sub->get_name() + "/" + key] = sub->add_option("--" + key, values[key], help);
  };
  auto root_opts = [&](CLI::App* sub) {
    opt(sub, "family", "A, B, C or D");
    opt(sub, "rank", "Rank, at most 6");
    opt(sub, "cartan", "Cartan matrix override, rows separated by ';' (e.g. 2,-1;-2,2)");
  };

  CLI::App* concavity = app.add_subcommand("theorem1", "Decide the root-system concavity criterion for a grading");
  concavity->alias("concavity");
  root_opts(concavity);
  opt(concavity, "grading", "Grading coefficients n_1,...,n_r");

  CLI::App* period = app.add_subcommand("period", "Period-domain group and minimal degenerations");
  period->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  opt(period, "weight", "Weight n, at most 10");
  opt(period, "h", "Hodge numbers h^{n,0},...,h^{0,n}");
  opt(period, "degeneration", "Only this degeneration: I:<p_o> or II");

  CLI::App* verify = app.add_subcommand("verify", "Numeric checks as JSON lines");
  opt(verify, "suite", "chevalley, prop33 (cayley), lemma41 (sl2), fixed-point or all");
  root_opts(verify);
  opt(verify, "grading", "Grading for the fixed-point suite");
  opt(verify, "eps", "Single eps in [0,1] for the fixed-point suite");
  opt(verify, "beta", "Witness root for the fixed-point suite");

  CLI::App* levi = app.add_subcommand("levi", "Levi form of a polynomial defining function (--input)");

  CLI::App* describe = app.add_subcommand("describe", "Dump a root system");
  root_opts(describe);

  for (CLI::App* sub : {concavity, period, verify, levi, describe}) sub->fallthrough();

  std::vector<const char*> argv = {"pconcave"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    write_error(err, ErrorCode::InvalidInput, e.what());
    return static_cast<int>(ErrorCode::InvalidInput);
  }

  try {
    Json req = input.empty() ? Json::object() : load_input(input);
    CLI::App* sub = app.get_subcommands().front();
    for (const auto& [key, option] : given) {
      if (key.rfind(sub->get_name() + "/", 0) == 0 && option->count() > 0) {
        req[key.substr(sub->get_name().size() + 1)] = values[key.substr(sub->get_name().size() + 1)];
      }
    }

    if (sub == verify) {
      const std::vector<Json> checks = run_verify(req);
      if (pretty) {
        pretty_checks(checks, out);
      } else {
        for (const auto& c : checks) out << c.dump() << "\n";
      }
      return 0;
    }

    if (sub == levi && input.empty()) throw Error(ErrorCode::InvalidInput, "levi needs --input with a polynomial");
    Json report;
    if (sub == concavity) report = run_concavity(req);
    if (sub == period) report = run_period(req);
    if (sub == levi) report = run_levi(req);
    if (sub == describe) report = run_describe(req);

    if (!pretty) {
      out << report.dump() << "\n";
    } else if (sub == concavity) {
      pretty_concavity(report, out);
    } else if (sub == period) {
      pretty_period(report, out);
    } else if (sub == levi) {
      pretty_levi(report, out);
    } else {
      pretty_describe(report, out);
    }
    return 0;
  } catch (const Error& e) {
    write_error(err, e.code(), e.what());
    return static_cast<int>(e.code());
  } catch (const Json::exception& e) {
    write_error(err, ErrorCode::MalformedJson, e.what());
    return static_cast<int>(ErrorCode::MalformedJson);
  }
}

}  // namespace pconcave::cli
