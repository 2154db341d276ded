#include "pconcave/hodge.hpp"

#include "pconcave/error.hpp"
#include "pconcave/matrix_exp.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>

namespace pconcave {

int HodgeNumbers::at(int p) const {
  if (p < 0 || p > weight || p >= static_cast<int>(h.size())) return 0;
  return h[static_cast<std::size_t>(p)];
}

int HodgeNumbers::dim() const { return std::accumulate(h.begin(), h.end(), 0); }

void HodgeNumbers::validate() const {
  if (weight < 0) throw Error(ErrorCode::InvalidInput, "weight must be nonnegative");
  if (static_cast<int>(h.size()) != weight + 1) {
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(weight + 1) + " Hodge numbers for weight " +
                                             std::to_string(weight) + ", got " + std::to_string(h.size()));
  }
  for (int p = 0; p <= weight; ++p) {
    if (at(p) < 0) throw Error(ErrorCode::InvalidInput, "Hodge numbers must be nonnegative");
    if (at(p) != at(weight - p)) {
      throw Error(ErrorCode::InvalidInput, "Hodge numbers violate h^{p,q} = h^{q,p} at p=" + std::to_string(p));
    }
  }
  if (dim() == 0) throw Error(ErrorCode::InvalidInput, "dim V must be positive");
}

HodgeNumbers HodgeNumbers::from_descending(int weight, const std::vector<int>& values) {
  HodgeNumbers out{weight, std::vector<int>(values.rbegin(), values.rend())};
  out.validate();
  return out;
}

const char* to_string(GroupFamily f) {
  return f == GroupFamily::Symplectic ? "symplectic" : "indefinite-orthogonal";
}

GroupDescriptor group_of_period_domain(const HodgeNumbers& h) {
  h.validate();
  const int n = h.weight;
  const int dim_v = h.dim();
  GroupDescriptor g;
  std::vector<std::string> factors;
  int isotropy_dim = 0;
  int group_dim = 0;

  if (n % 2 == 1) {
    if (dim_v % 2 != 0) throw Error(ErrorCode::InvalidInput, "odd weight needs even dim V");
    const int m = dim_v / 2;
    g.family = GroupFamily::Symplectic;
    g.parameters = {m};
    g.name = "Sp(" + std::to_string(m) + ",R)";
    group_dim = m * (2 * m + 1);
    for (int p = 0; 2 * p < n; ++p) {
      if (h.at(p) == 0) continue;
      factors.push_back("U(" + std::to_string(h.at(p)) + ")");
      isotropy_dim += h.at(p) * h.at(p);
    }
    g.notes.push_back("Sp(m,R) acts on V of dimension 2m = " + std::to_string(dim_v));
  } else {
    const int k = n / 2;
    int m_ev = 0;
    int m_od = 0;
    int half_ev = 0;
    int half_od = 0;
    for (int p = 0; p <= n; ++p) {
      (p % 2 == 0 ? m_ev : m_od) += h.at(p);
      if (p <= k) (p % 2 == 0 ? half_ev : half_od) += h.at(p);
    }
    g.family = GroupFamily::IndefiniteOrthogonal;
    g.parameters = {m_ev, m_od};
    g.name = "SO(" + std::to_string(m_ev) + "," + std::to_string(m_od) + ")";
    group_dim = dim_v * (dim_v - 1) / 2;
    for (int p = 0; p < k; ++p) {
      if (h.at(p) == 0) continue;
      factors.push_back("U(" + std::to_string(h.at(p)) + ")");
      isotropy_dim += h.at(p) * h.at(p);
    }
    if (h.at(k) > 0) {
      factors.push_back("SO(" + std::to_string(h.at(k)) + ")");
      isotropy_dim += h.at(k) * (h.at(k) - 1) / 2;
    }
    if (half_ev != m_ev || half_od != m_od) {
      g.notes.push_back("m_ev and m_od sum h^{p,q} over all p, conjugates included; counting only p <= n/2 would give SO(" +
                        std::to_string(half_ev) + "," + std::to_string(half_od) + ")");
    }
  }

  if (factors.empty()) {
    g.isotropy = "{1}";
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) g.isotropy += (i ? "x" : "") + factors[i];
  }
  g.complex_dimension = (group_dim - isotropy_dim) / 2;
  const auto nonzero = std::count_if(h.h.begin(), h.h.end(), [](int v) { return v > 0; });
  g.trivial = nonzero <= 1;
  if (g.trivial) g.notes.push_back("single Hodge type: the period domain is a point");
  return g;
}

std::map<int, Rational> grading_values_on_V(const HodgeNumbers& h) {
  std::map<int, Rational> out;
  for (int p = 0; p <= h.weight; ++p) out[p] = Rational(2 * p - h.weight, 2);
  return out;
}

std::vector<Rational> grading_spectrum(const HodgeNumbers& h) {
  std::vector<Rational> out;
  for (int p = h.weight; p >= 0; --p) {
    for (int j = 0; j < h.at(p); ++j) out.emplace_back(2 * p - h.weight, 2);
  }
  return out;
}

const char* to_string(DegenerationKind k) { return k == DegenerationKind::TypeI ? "TypeI" : "TypeII"; }

std::string DegenerationSpec::str() const {
  if (kind == DegenerationKind::TypeII) return "TypeII";
  return "TypeI(p_o=" + std::to_string(p_o) + ")";
}

DegenerationSpec DegenerationSpec::parse(const std::string& text) {
  if (text == "II" || text == "TypeII") return {DegenerationKind::TypeII, 0};
  for (const std::string prefix : {"I:", "TypeI:"}) {
    if (text.rfind(prefix, 0) == 0) {
      const std::string rest = text.substr(prefix.size());
      char* end = nullptr;
      const long v = std::strtol(rest.c_str(), &end, 10);
      if (!rest.empty() && *end == '\0') return {DegenerationKind::TypeI, static_cast<int>(v)};
    }
  }
  throw Error(ErrorCode::InvalidInput, "degeneration must be I:<p_o> or II, got '" + text + "'");
}

std::optional<std::string> degeneration_obstruction(const HodgeNumbers& h, const DegenerationSpec& d) {
  const int n = h.weight;
  if (d.kind == DegenerationKind::TypeI) {
    const int p = d.p_o;
    if (p < 0 || 2 * p >= n) return "TypeI needs 0 <= p_o and 2 p_o < n";
    if (h.at(p) < 1) return "TypeI needs h^{p_o,n-p_o} >= 1";
    if (h.at(p + 1) < 1) return "TypeI needs h^{p_o+1,n-p_o-1} >= 1";
    // For n = 2p_o + 2 both N-chains pass through the self-conjugate centre.
    if (n == 2 * p + 2 && h.at(p + 1) < 2) return "TypeI with n = 2p_o+2 needs h^{p_o+1,p_o+1} >= 2";
    return std::nullopt;
  }
  if (n % 2 != 0 || n < 2) return "TypeII needs even weight n >= 2";
  const int m = n / 2;
  if (h.at(m - 1) < 1) return "TypeII needs h^{m-1,m+1} >= 1";
  if (h.at(m) < 1) return "TypeII needs h^{m,m} >= 1";
  return std::nullopt;
}

int DeligneDiamond::at(int p, int q) const {
  if (p < 0 || q < 0 || p > weight || q > weight) return 0;
  return i(p, q);
}

int DeligneDiamond::total() const { return i.sum(); }

DeligneDiamond limit_diamond(const HodgeNumbers& h, const DegenerationSpec& d) {
  h.validate();
  if (auto why = degeneration_obstruction(h, d)) {
    throw Error(ErrorCode::InfeasibleDegeneration, d.str() + ": " + *why);
  }
  const int n = h.weight;
  DeligneDiamond out;
  out.weight = n;
  out.i = Eigen::MatrixXi::Zero(n + 1, n + 1);
  for (int p = 0; p <= n; ++p) out.i(p, n - p) = h.at(p);

  auto chain = [&](int p, int q) {
    out.i(p, q) += 1;
    if (p != q) out.i(q, p) += 1;
  };
  auto row = [&](int p) {
    out.i(p, n - p) -= 1;
    if (2 * p != n) out.i(n - p, p) -= 1;
  };

  if (d.kind == DegenerationKind::TypeI) {
    const int p = d.p_o;
    chain(p + 1, n - p);
    chain(p, n - p - 1);
    row(p);
    if (n == 2 * p + 1) {
      // (p_o+1, n-p_o-1) is the conjugate of (p_o, n-p_o), already adjusted
      out.rank_n = 1;
    } else {
      row(p + 1);
      if (n == 2 * p + 2) out.i(p + 1, p + 1) -= 1;
      out.rank_n = 2;
    }
  } else {
    const int m = n / 2;
    chain(m + 1, m + 1);
    chain(m - 1, m - 1);
    row(m - 1);
    out.rank_n = 2;
  }
  return out;
}

std::vector<ClauseCheck> check_diamond_clauses(const HodgeNumbers& h, const DegenerationSpec& d,
                                               const DeligneDiamond& diamond) {
  const int n = h.weight;
  std::vector<ClauseCheck> out;
  auto add = [&](std::string clause, bool holds) { out.push_back({std::move(clause), holds}); };

  std::vector<int> special;  // p with 2p < n that the kind adjusts
  if (d.kind == DegenerationKind::TypeI) {
    const int p = d.p_o;
    add("i^{p_o+1,n-p_o} = 1", diamond.at(p + 1, n - p) == 1);
    add("i^{p_o,n-p_o-1} = 1", diamond.at(p, n - p - 1) == 1);
    add("i^{p_o,n-p_o} = h^{p_o,n-p_o} - 1", diamond.at(p, n - p) == h.at(p) - 1);
    if (n == 2 * p + 2) {
      add("i^{p_o+1,p_o+1} = h^{p_o+1,p_o+1} - 2 (self-conjugate centre)",
          diamond.at(p + 1, p + 1) == h.at(p + 1) - 2);
    } else {
      add("i^{p_o+1,n-p_o-1} = h^{p_o+1,n-p_o-1} - 1", diamond.at(p + 1, n - p - 1) == h.at(p + 1) - 1);
    }
    special = {p, p + 1};
  } else {
    const int m = n / 2;
    add("i^{m-1,m-1} = 1", diamond.at(m - 1, m - 1) == 1);
    add("i^{m+1,m+1} = 1", diamond.at(m + 1, m + 1) == 1);
    add("i^{m-1,m+1} = h^{m-1,m+1} - 1", diamond.at(m - 1, m + 1) == h.at(m - 1) - 1);
    add("i^{m+1,m-1} = h^{m+1,m-1} - 1", diamond.at(m + 1, m - 1) == h.at(m + 1) - 1);
    special = {m - 1};
  }
  bool others = true;
  for (int p = 0; 2 * p < n; ++p) {
    if (std::find(special.begin(), special.end(), p) != special.end()) continue;
    others = others && diamond.at(p, n - p) == h.at(p);
  }
  add("i^{p,n-p} = h^{p,n-p} for all other p with 2p < n", others);

  bool sym = true;
  bool nchain = true;
  bool nonneg = true;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      sym = sym && diamond.at(p, q) == diamond.at(q, p);
      nchain = nchain && diamond.at(p, q) == diamond.at(n - q, n - p);
      nonneg = nonneg && diamond.at(p, q) >= 0;
    }
  }
  add("i^{p,q} = i^{q,p}", sym);
  add("i^{p,q} = i^{n-q,n-p}", nchain);
  add("i^{p,q} >= 0", nonneg);
  add("sum i^{p,q} = dim V", diamond.total() == h.dim());
  return out;
}

std::optional<int> admissible_offset(const DegenerationSpec& d, int weight, int p) {
  if (d.kind == DegenerationKind::TypeI) {
    const int up = p - d.p_o;
    if (up >= 2 && up % 2 == 0) return up / 2;
    const int down = d.p_o + 1 - p;
    if (down >= 2 && down % 2 == 0) return down / 2;
    return std::nullopt;
  }
  if (weight % 2 != 0) return std::nullopt;
  const int off = p - weight / 2 - 1;
  if (off % 2 != 0) return std::nullopt;
  return off / 2;
}

BoundaryConcavityReport check_boundary_concavity(const HodgeNumbers& h, const DegenerationSpec& d) {
  const DeligneDiamond diamond = limit_diamond(h, d);
  const int n = h.weight;
  auto row = [&](int p) { return 2 * p <= n ? diamond.at(p, n - p) : diamond.at(n - p, p); };

  std::vector<int> order;  // candidate p by increasing |l|, the larger p first on ties
  if (d.kind == DegenerationKind::TypeI) {
    for (int l = 1; l <= n + 1; ++l) {
      order.push_back(d.p_o + 2 * l);
      order.push_back(d.p_o - 2 * l + 1);
    }
  } else {
    const int m = n / 2;
    order.push_back(m + 1);
    for (int l = 1; l <= n; ++l) {
      order.push_back(m + 2 * l + 1);
      order.push_back(m - 2 * l + 1);
    }
  }

  BoundaryConcavityReport out;
  for (int p : order) {
    if (p < 0 || p > n || row(p) == 0) continue;
    out.condition_met = true;
    out.witness_p = p;
    out.ell = admissible_offset(d, n, p);
    break;
  }
  return out;
}

std::vector<DegenerationVerdict> enumerate_minimal_degenerations(const HodgeNumbers& h) {
  h.validate();
  std::vector<DegenerationSpec> specs;
  for (int p = 0; 2 * p < h.weight; ++p) specs.push_back({DegenerationKind::TypeI, p});
  specs.push_back({DegenerationKind::TypeII, 0});

  std::vector<DegenerationVerdict> out;
  for (const auto& d : specs) {
    if (degeneration_obstruction(h, d)) continue;
    out.push_back({d, limit_diamond(h, d), check_boundary_concavity(h, d)});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Cmat = Eigen::MatrixXcd;
using Cvec = Eigen::VectorXcd;
constexpr std::complex<double> kI{0.0, 1.0};

NumericCheck item(std::string claim, double residual) {
  NumericCheck c;
  c.claim = std::move(claim);
  c.residual = residual;
  c.tolerance = kBracketTolerance;
  c.pass = residual < c.tolerance;
  return c;
}

}  // namespace

Sl2CayleyReport verify_sl2_cayley(DegenerationKind kind) {
  const int dim = kind == DegenerationKind::TypeI ? 2 : 3;
  Cmat n = Cmat::Zero(dim, dim);
  Cmat np = Cmat::Zero(dim, dim);
  Cmat y = Cmat::Zero(dim, dim);
  std::vector<double> weights;
  if (kind == DegenerationKind::TypeI) {
    n(1, 0) = 1.0;
    np(0, 1) = 1.0;
    weights = {1.0, -1.0};
  } else {
    n(1, 0) = 1.0;
    n(2, 1) = 1.0;
    np(0, 1) = 2.0;
    np(1, 2) = 2.0;
    weights = {2.0, 0.0, -2.0};
  }
  for (int k = 0; k < dim; ++k) y(k, k) = weights[static_cast<std::size_t>(k)];

  const Cmat d = expm(kI * (std::numbers::pi / 4.0) * (np + n));
  const Cmat d_inv = d.inverse();
  auto ad = [&](const Cmat& x) -> Cmat { return d * x * d_inv; };

  const Cvec v = Cvec::Unit(dim, 0);
  const Cvec nv = n * v;
  const Cvec dv = d * v;
  const Cvec dnv = d * nv;

  Sl2CayleyReport out;
  const std::string tag = std::string(to_string(kind)) + ": ";
  auto push = [&](const std::string& claim, double r) { out.items.push_back(item(tag + claim, r)); };

  push("[N+, N] = Y", (np * n - n * np - y).norm());
  if (kind == DegenerationKind::TypeI) {
    const double s = 1.0 / std::sqrt(2.0);
    // v is real here, so v-bar = v and N v-bar = N v.
    push("d_N(v) = (v + iNv)/sqrt2", (dv - s * (v + kI * nv)).norm());
    push("d_N(Nv) = i/sqrt2 (v - iNv)", (dnv - kI * s * (v - kI * nv)).norm());
    push("d_N(v-bar) = i conj(d_N(Nv))", (d * v.conjugate() - kI * dnv.conjugate()).norm());
    push("d_N(N v-bar) = i conj(d_N(v))", (d * (n * v.conjugate()) - kI * dv.conjugate()).norm());
    push("d_N(v) = i conj(d_N(Nv)) when v is real", (dv - kI * dnv.conjugate()).norm());
  } else {
    const Cvec n2v = n * nv;
    push("d_N(v) = v/2 + iNv/2 - N^2v/4", (dv - (0.5 * v + 0.5 * kI * nv - 0.25 * n2v)).norm());
    push("d_N(Nv) = i(v + N^2v/2)", (dnv - kI * (v + 0.5 * n2v)).norm());
    push("d_N(N^2v) = -2 conj(d_N(v))", (d * n2v + 2.0 * dv.conjugate()).norm());
  }
  push("Ad(d_N) N+ = (N + N+ - iY)/2", (ad(np) - 0.5 * (n + np - kI * y)).norm());
  push("Ad(d_N) Y = i(N - N+)", (ad(y) - kI * (n - np)).norm());
  push("Ad(d_N) N = (N + N+ + iY)/2", (ad(n) - 0.5 * (n + np + kI * y)).norm());

  const Cmat z = ad(y);
  double eig = 0.0;
  Cvec w = v;
  for (int k = 0; k < dim; ++k) {
    const Cvec dw = d * w;
    eig = std::max(eig, (z * dw - weights[static_cast<std::size_t>(k)] * dw).norm());
    w = n * w;
  }
  push("Ad(d_N) Y acts on d_N(N^k v) by the Y-weight of N^k v", eig);

  out.summary.claim = tag + "Cayley transform d_N = exp(i pi/4 (N+ + N)) on the sl2 triple";
  out.summary.tolerance = kBracketTolerance;
  out.summary.residual = 0.0;
  out.summary.pass = true;
  for (const auto& c : out.items) {
    out.summary.residual = std::max(out.summary.residual, c.residual);
    out.summary.pass = out.summary.pass && c.pass;
  }
  return out;
}

}  // namespace pconcave
