#include "pconcave/chevalley.hpp"

#include "pconcave/error.hpp"

#include <cstdlib>

namespace pconcave {

namespace {

int to_int(const Rational& v, const char* context) {
  if (v.denominator() != 1) {
    throw Error(ErrorCode::NumericFailure, std::string("non-integral structure constant in ") + context);
  }
  return static_cast<int>(v.numerator());
}

}  // namespace

int ChevalleyConstants::lookup_positive(const Root& a, const Root& b) const {
  auto it = table_.find({a, b});
  if (it == table_.end()) {
    throw Error(ErrorCode::NumericFailure, "missing structure constant for " + a.str() + ", " + b.str());
  }
  return it->second;
}

int ChevalleyConstants::operator()(const Root& a, const Root& b) const {
  if (a.rank() != rs_.rank() || b.rank() != rs_.rank()) return 0;
  if (!rs_.contains(a) || !rs_.contains(b) || !rs_.contains(a + b)) return 0;
  if (a.is_positive() && b.is_positive()) return lookup_positive(a, b);
  if (a.is_negative() && b.is_negative()) return -(*this)(-a, -b);
  if (a.is_negative()) return -(*this)(b, a);

  // a > 0 > b. With g = -(a+b): c(a,b)/(g,g) = c(b,g)/(a,a) = c(g,a)/(b,b).
  const Root g = -(a + b);
  if (g.is_positive()) {
    return to_int(rs_.inner(g, g) / rs_.inner(b, b) * (*this)(g, a), "mixed-sign rotation");
  }
  return to_int(rs_.inner(g, g) / rs_.inner(a, a) * (*this)(b, g), "mixed-sign rotation");
}

ChevalleyConstants structure_constants(const RootSystem& rs) {
  ChevalleyConstants cc(rs);
  const auto& pos = rs.positive_roots();

  for (const Root& xi : pos) {
    if (xi.height() == 1) continue;

    // Extraspecial pair: the first simple root rho with xi - rho positive.
    Root rho, sigma;
    for (int i = 0; i < rs.rank(); ++i) {
      const Root s = rs.simple_root(i);
      if (rs.contains(xi - s)) {
        rho = s;
        sigma = xi - s;
        break;
      }
    }
    int down = 0;
    while (rs.contains(sigma - (down + 1) * rho)) ++down;
    const int n_rs = down + 1;
    cc.table_[{rho, sigma}] = n_rs;
    cc.table_[{sigma, rho}] = -n_rs;
    cc.extraspecial_.emplace(xi, std::make_pair(rho, sigma));

    // Remaining special pairs from the four-root identity applied to
    // alpha + beta + (-rho) + (-sigma) = 0.
    const Rational len_xi = rs.inner(xi, xi);
    for (const Root& alpha : pos) {
      const Root beta = xi - alpha;
      if (!rs.contains(beta) || !beta.is_positive()) continue;
      if (!root_order_less(alpha, beta) || alpha == rho) continue;

      Rational sum = 0;
      const Root b_minus_rho = beta - rho;
      if (rs.contains(b_minus_rho)) {
        sum += Rational(cc(beta, -rho) * cc(alpha, -sigma)) / rs.inner(b_minus_rho, b_minus_rho);
      }
      const Root a_minus_rho = alpha - rho;
      if (rs.contains(a_minus_rho)) {
        sum += Rational(cc(-rho, alpha) * cc(beta, -sigma)) / rs.inner(a_minus_rho, a_minus_rho);
      }
      const int n_ab = to_int(len_xi / n_rs * sum, "special pair");
      cc.table_[{alpha, beta}] = n_ab;
      cc.table_[{beta, alpha}] = -n_ab;
    }
  }
  return cc;
}

std::vector<int> coroot_coefficients(const RootSystem& rs, const Root& a) {
  require_root(rs, a, "coroot of");
  const Rational len = rs.inner(a, a);
  std::vector<int> k(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) {
    k[static_cast<std::size_t>(i)] = to_int(Rational(a[i]) * rs.simple_length(i) / len, "coroot");
  }
  return k;
}

// ---------------------------------------------------------------------------

BracketAlgebra::BracketAlgebra(const ChevalleyConstants& cc) : rs_(cc.system()) {
  const auto& roots = rs_.roots();
  const int nroots = static_cast<int>(roots.size());
  const int r = rs_.rank();
  dim_ = nroots + r;
  table_.assign(static_cast<std::size_t>(dim_ * dim_), Element::Zero(dim_));

  auto pairing = [&](const Root& a, int i) {  // <a, sigma_i>
    int v = 0;
    for (int j = 0; j < r; ++j) v += a[j] * rs_.cartan()(j, i);
    return v;
  };

  for (int i = 0; i < nroots; ++i) {
    const Root& a = roots[static_cast<std::size_t>(i)];
    for (int j = 0; j < nroots; ++j) {
      const Root& b = roots[static_cast<std::size_t>(j)];
      Element& out = table_[static_cast<std::size_t>(i * dim_ + j)];
      const Root s = a + b;
      if (s.is_zero()) {
        const auto k = coroot_coefficients(rs_, a);
        for (int l = 0; l < r; ++l) out(nroots + l) = k[static_cast<std::size_t>(l)];
      } else if (rs_.contains(s)) {
        out(rs_.index_of(s)) = cc(a, b);
      }
    }
    for (int l = 0; l < r; ++l) {
      const int h = nroots + l;
      table_[static_cast<std::size_t>(h * dim_ + i)](i) = pairing(a, l);
      table_[static_cast<std::size_t>(i * dim_ + h)](i) = -pairing(a, l);
    }
  }
}

BracketAlgebra::Element BracketAlgebra::basis(int k) const {
  Element e = Element::Zero(dim_);
  e(k) = 1;
  return e;
}

BracketAlgebra::Element BracketAlgebra::bracket(const Element& u, const Element& v) const {
  Element out = Element::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u(i) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v(j) == 0) continue;
      out += u(i) * v(j) * bracket_basis(i, j);
    }
  }
  return out;
}

std::int64_t jacobi_violations(const BracketAlgebra& g) {
  const int n = g.dim();
  // [e_i, w] for sparse w
  auto ad = [&](int i, const BracketAlgebra::Element& w) {
    BracketAlgebra::Element out = BracketAlgebra::Element::Zero(n);
    for (int l = 0; l < n; ++l) {
      if (w(l) != 0) out += w(l) * g.bracket_basis(i, l);
    }
    return out;
  };
  std::int64_t bad = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const BracketAlgebra::Element sum = ad(i, g.bracket_basis(j, k)) + ad(j, g.bracket_basis(k, i)) +
                         ad(k, g.bracket_basis(i, j));
        if (!sum.isZero()) ++bad;
      }
    }
  }
  return bad;
}

BracketReport verify_bracket_identities(const ChevalleyConstants& cc) {
  const RootSystem& rs = cc.system();
  const BracketAlgebra g(cc);
  BracketReport report;

  for (const Root& a : rs.roots()) {
    for (const Root& b : rs.roots()) {
      if (!linearly_independent(a, b)) continue;
      const RootString s = root_string(rs, a, b);
      const auto w = g.bracket(g.x(-b), g.bracket(g.x(b), g.x(a)));
      const std::int64_t expected = static_cast<std::int64_t>(s.q) * (s.r + 1);
      const int ia = g.root_basis(a);

      DoubleBracketEntry entry{a, b, s.r, s.q, w(ia)};
      auto rest = w;
      rest(ia) = 0;
      if (w(ia) != expected || !rest.isZero()) {
        report.violations.push_back({"double bracket = q(r+1)", a, b, expected, w(ia)});
      }
      report.entries.push_back(std::move(entry));

      if (s.r == 0 && s.q == 2) {
        const std::int64_t chain = static_cast<std::int64_t>(cc(b, a + b)) * cc(-b, a + 2 * b);
        if (chain != 2) report.violations.push_back({"double-bracket chain", a, b, 2, chain});
      }
    }
  }
  return report;
}

std::vector<BracketViolation> check_constant_invariants(const ChevalleyConstants& cc) {
  const RootSystem& rs = cc.system();
  std::vector<BracketViolation> out;
  for (const Root& a : rs.roots()) {
    for (const Root& b : rs.roots()) {
      if (!rs.contains(a + b)) continue;
      const int c = cc(a, b);
      if (c != -cc(b, a)) out.push_back({"antisymmetry", a, b, -cc(b, a), c});
      if (c != -cc(-a, -b)) out.push_back({"negation", a, b, -cc(-a, -b), c});
      const RootString s_ab = root_string(rs, a, b);  // b-string through a
      const RootString s_ba = root_string(rs, b, a);  // a-string through b
      if (std::abs(c) != s_ab.r + 1) out.push_back({"|c|=r+1 (b-string)", a, b, s_ab.r + 1, c});
      if (std::abs(c) != s_ba.r + 1) out.push_back({"|c|=r+1 (a-string)", a, b, s_ba.r + 1, c});
    }
  }
  return out;
}

}  // namespace pconcave
