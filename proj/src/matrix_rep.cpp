#include "pconcave/matrix_rep.hpp"

#include "pconcave/concavity.hpp"
#include "pconcave/error.hpp"
#include "pconcave/matrix_exp.hpp"
#include "pconcave/real_form.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace pconcave {

namespace {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
Mat<Scalar> unit(int n, int i, int j) {
  Mat<Scalar> m = Mat<Scalar>::Zero(n, n);
  m(i, j) = Scalar(1);
  return m;
}

int defining_dim(LieType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C:
    case Family::D: return 2 * t.rank;
  }
  return 0;
}

// Raising operator for the k-th simple root in the standard labeling.
template <typename Scalar>
Mat<Scalar> simple_raising(LieType t, int k) {
  const int r = t.rank;
  const int n = defining_dim(t);
  if (t.family == Family::A) return unit<Scalar>(n, k, k + 1);

  // e_i - e_{i+1} for i < r-1 in the symplectic / orthogonal families
  if (k < r - 1) {
    return unit<Scalar>(n, k, k + 1) - unit<Scalar>(n, r + k + 1, r + k);
  }
  switch (t.family) {
    case Family::B:  // e_r, short; index 2r is e_0
      return Scalar(std::sqrt(2.0)) * (unit<Scalar>(n, r - 1, 2 * r) - unit<Scalar>(n, 2 * r, 2 * r - 1));
    case Family::C:  // 2e_r
      return unit<Scalar>(n, r - 1, 2 * r - 1);
    case Family::D: {  // e_{r-1} + e_r
      const int i = r - 2;
      const int j = r - 1;
      return unit<Scalar>(n, i, r + j) - unit<Scalar>(n, j, r + i);
    }
    case Family::A:
      break;
  }
  return {};
}

}  // namespace

template <typename Scalar>
typename MatrixRealization<Scalar>::Matrix MatrixRealization<Scalar>::coroot(const Root& a) const {
  const auto k = coroot_coefficients(rs_, a);
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < rs_.rank(); ++i) out += Scalar(k[static_cast<std::size_t>(i)]) * h(i);
  return out;
}

template <typename Scalar>
typename MatrixRealization<Scalar>::Matrix MatrixRealization<Scalar>::grading(const GradingElement& e) const {
  if (static_cast<int>(e.coeffs.size()) != rs_.rank()) {
    throw Error(ErrorCode::InvalidInput, "grading element rank mismatch");
  }
  // E = sum_k w_k H^{sigma_k} with A w = n, so that [E, x^a] = a(E) x^a.
  const Eigen::MatrixXd a = rs_.cartan().cast<double>();
  Eigen::VectorXd n(rs_.rank());
  for (int i = 0; i < rs_.rank(); ++i) n(i) = e.coeffs[static_cast<std::size_t>(i)];
  const Eigen::VectorXd w = a.partialPivLu().solve(n);
  Matrix out = Matrix::Zero(dim_, dim_);
  for (int k = 0; k < rs_.rank(); ++k) out += Scalar(w(k)) * h(k);
  return out;
}

template <typename Scalar>
MatrixRealization<Scalar> fundamental_rep(const RootSystem& rs, int max_rank) {
  if (rs.rank() > max_rank) {
    throw Error(ErrorCode::InvalidInput, "fundamental_rep supports rank <= " + std::to_string(max_rank));
  }
  const LieType t = rs.type();
  const int n = defining_dim(t);
  const auto& roots = rs.roots();
  const std::size_t npos = rs.positive_roots().size();
  const ChevalleyConstants cc = structure_constants(rs);

  std::vector<Mat<Scalar>> x(roots.size());
  for (int i = 0; i < rs.rank(); ++i) {
    const Mat<Scalar> e = simple_raising<Scalar>(t, rs.labeling()[static_cast<std::size_t>(i)]);
    x[static_cast<std::size_t>(rs.index_of(rs.simple_root(i)))] = e;
    x[static_cast<std::size_t>(rs.index_of(-rs.simple_root(i)))] = e.transpose();
  }
  // Positive roots are in height order, so both halves of an extraspecial
  // pair are available when xi is reached.
  for (std::size_t k = 0; k < npos; ++k) {
    const Root& xi = roots[k];
    if (xi.height() == 1) continue;
    const auto& [rho, sigma] = cc.extraspecial().at(xi);
    const auto& xr = x[static_cast<std::size_t>(rs.index_of(rho))];
    const auto& xs = x[static_cast<std::size_t>(rs.index_of(sigma))];
    const auto& yr = x[static_cast<std::size_t>(rs.index_of(-rho))];
    const auto& ys = x[static_cast<std::size_t>(rs.index_of(-sigma))];
    x[k] = commutator<Scalar>(xr, xs) / Scalar(cc(rho, sigma));
    x[static_cast<std::size_t>(rs.index_of(-xi))] = commutator<Scalar>(yr, ys) / Scalar(cc(-rho, -sigma));
  }

  std::vector<Mat<Scalar>> h;
  for (int i = 0; i < rs.rank(); ++i) {
    const Root s = rs.simple_root(i);
    h.push_back(commutator<Scalar>(x[static_cast<std::size_t>(rs.index_of(s))],
                                   x[static_cast<std::size_t>(rs.index_of(-s))]));
  }
  return MatrixRealization<Scalar>(rs, n, std::move(x), std::move(h));
}

template class MatrixRealization<double>;
template class MatrixRealization<std::complex<double>>;
template MatrixRealization<double> fundamental_rep<double>(const RootSystem&, int);
template MatrixRealization<std::complex<double>> fundamental_rep<std::complex<double>>(const RootSystem&, int);

// ---------------------------------------------------------------------------

NumericCheck realization_residual(const Realization& rep, const ChevalleyConstants& cc) {
  const RootSystem& rs = rep.system();
  if (!(rs == cc.system())) {
    throw Error(ErrorCode::InvalidInput, "realization and constants describe different root systems");
  }
  double worst = 0.0;
  const int n = rep.dim();
  for (const Root& a : rs.roots()) {
    worst = std::max(worst, (commutator<double>(rep.x(a), rep.x(-a)) - rep.coroot(a)).norm());
    for (int i = 0; i < rs.rank(); ++i) {
      const int pairing = cartan_integer(rs, a, rs.simple_root(i));
      worst = std::max(worst, (commutator<double>(rep.h(i), rep.x(a)) - pairing * rep.x(a)).norm());
    }
    for (const Root& b : rs.roots()) {
      if ((a + b).is_zero()) continue;
      const Eigen::MatrixXd expected =
          rs.contains(a + b) ? Eigen::MatrixXd(cc(a, b) * rep.x(a + b)) : Eigen::MatrixXd::Zero(n, n);
      worst = std::max(worst, (commutator<double>(rep.x(a), rep.x(b)) - expected).norm());
    }
  }
  NumericCheck c;
  c.claim = "chevalley relations in " + rs.type().name() + " defining representation";
  c.residual = worst;
  c.tolerance = kBracketTolerance;
  c.pass = worst < c.tolerance;
  return c;
}

Realization::Matrix cayley_matrix(const Realization& rep, const Root& a) {
  require_root(rep.system(), a, "Cayley transform root");
  return expm(std::numbers::pi / 4.0 * (rep.x(-a) - rep.x(a)));
}

std::vector<std::pair<Root, Root>> cayley_pairs(const RootSystem& rs) {
  std::vector<std::pair<Root, Root>> out;
  for (const Root& a : rs.roots()) {
    for (const Root& b : rs.roots()) {
      if (!linearly_independent(a, b)) continue;
      const RootString s = root_string(rs, a, b);
      if (s.r == 0 && (s.q == 1 || s.q == 2)) out.emplace_back(a, b);
    }
  }
  return out;
}

NumericCheck verify_cayley_conjugation(const Realization& rep, const ChevalleyConstants& cc,
                                       const Root& a, const Root& b) {
  const RootSystem& rs = rep.system();
  require_root(rs, a, "alpha");
  require_root(rs, b, "beta");
  if (!linearly_independent(a, b)) {
    throw Error(ErrorCode::Precondition, "alpha and beta are linearly dependent");
  }
  const RootString s = root_string(rs, a, b);
  if (s.r != 0 || (s.q != 1 && s.q != 2)) {
    throw Error(ErrorCode::Precondition, "string shape (" + std::to_string(s.r) + "," + std::to_string(s.q) +
                                             ") is neither (0,1) nor (0,2)");
  }
  const Root expected_target = a + s.q * b;

  const Eigen::MatrixXd c = cayley_matrix(rep, -b);
  const Eigen::MatrixXd c2 = c * c;
  const Eigen::MatrixXd conj = c2 * rep.x(a) * c2.inverse();

  NumericCheck out;
  out.claim = "Ad(c_{-b}^2) x^a = +-x^{a+" + std::to_string(s.q) + "b} for a=" + a.str() + ", b=" + b.str();
  out.tolerance = kConjugationTolerance;
  out.residual = std::numeric_limits<double>::infinity();
  for (const Root& g : rs.roots()) {
    for (int sign : {1, -1}) {
      const double res = (conj - sign * rep.x(g)).norm();
      if (res < out.residual) {
        out.residual = res;
        out.sign = sign;
        out.target = g;
      }
    }
  }
  if (s.q == 1) {
    out.expected_sign = cc(b, a);
  } else {
    out.expected_sign = cc(b, a + b) * cc(b, a) / 2;
  }
  out.pass = out.residual < out.tolerance && out.target == expected_target;
  return out;
}

double parabolic_residual(const Realization& rep, const GradingElement& e, const Realization::Matrix& m) {
  const Eigen::VectorXd level = rep.grading(e).diagonal();
  double sum = 0.0;
  for (int u = 0; u < rep.dim(); ++u) {
    for (int v = 0; v < rep.dim(); ++v) {
      if (level(u) < level(v) - 1e-9) sum += m(u, v) * m(u, v);
    }
  }
  return std::sqrt(sum);
}

NumericCheck verify_cayley_fixed_point(const Realization& rep, const GradingElement& e, const Root& beta,
                                       double eps) {
  const RootSystem& rs = rep.system();
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::Precondition, "eps must lie in [0, 1]");
  }
  const ConcavityReport report = check_concavity_criterion(rs, e);
  if (std::find(report.witnesses.begin(), report.witnesses.end(), beta) == report.witnesses.end()) {
    throw Error(ErrorCode::Precondition, beta.str() + " is not a witness for this grading");
  }

  Eigen::MatrixXd xi = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
  for (const Root& a : report.targets) xi = xi * expm(eps * rep.x(a));

  const Eigen::MatrixXd c = cayley_matrix(rep, -beta);
  const Eigen::MatrixXd c2 = c * c;
  const Eigen::MatrixXd moved = c2 * xi * c2.inverse();

  NumericCheck out;
  out.claim = "Ad(c_{-b}^2) xi in P for b=" + beta.str() + ", eps=" + std::to_string(eps);
  out.target = beta;
  out.tolerance = kConjugationTolerance;
  out.residual = parabolic_residual(rep, e, moved);
  out.pass = out.residual < out.tolerance;
  return out;
}

}  // namespace pconcave
