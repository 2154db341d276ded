#include "pconcave/levi_form.hpp"

#include "pconcave/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>

namespace pconcave {

void Polynomial::validate() const {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "polynomial needs n >= 1");
  for (const auto& t : terms) {
    if (static_cast<int>(t.z.size()) != n || static_cast<int>(t.zbar.size()) != n) {
      throw Error(ErrorCode::InvalidInput, "exponent vectors must have length n = " + std::to_string(n));
    }
    auto negative = [](int e) { return e < 0; };
    if (std::any_of(t.z.begin(), t.z.end(), negative) || std::any_of(t.zbar.begin(), t.zbar.end(), negative)) {
      throw Error(ErrorCode::InvalidInput, "exponents must be nonnegative");
    }
  }
}

double Polynomial::operator()(const Eigen::VectorXcd& z) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms) {
    std::complex<double> m = t.coef;
    for (int k = 0; k < n; ++k) {
      const auto zk = z(k);
      for (int e = 0; e < t.z[static_cast<std::size_t>(k)]; ++e) m *= zk;
      for (int e = 0; e < t.zbar[static_cast<std::size_t>(k)]; ++e) m *= std::conj(zk);
    }
    sum += m;
  }
  return sum.real();
}

DefiningFunction DefiningFunction::from_polynomial(Polynomial p, Eigen::VectorXcd z0) {
  p.validate();
  DefiningFunction f;
  f.n = p.n;
  f.z0 = std::move(z0);
  f.eval = [poly = std::move(p)](const Eigen::VectorXcd& z) { return poly(z); };
  return f;
}

double fd_step(const Eigen::VectorXcd& z0) { return 1e-4 * (1.0 + z0.norm()); }

namespace {

void require_shape(const DefiningFunction& f) {
  if (f.n < 1) throw Error(ErrorCode::InvalidInput, "defining function needs n >= 1");
  if (f.z0.size() != f.n) throw Error(ErrorCode::InvalidInput, "reference point has the wrong dimension");
  if (!f.eval) throw Error(ErrorCode::InvalidInput, "defining function has no evaluator");
}

// Real coordinate j < n moves Re z_j, j >= n moves Im z_{j-n}.
Eigen::VectorXcd shifted(const Eigen::VectorXcd& z, int n, int j, double s) {
  Eigen::VectorXcd out = z;
  if (j < n) {
    out(j) += s;
  } else {
    out(j - n) += std::complex<double>(0.0, s);
  }
  return out;
}

}  // namespace

Eigen::VectorXcd complex_gradient(const DefiningFunction& f) {
  require_shape(f);
  const int n = f.n;
  const double h = fd_step(f.z0);
  Eigen::VectorXd d(2 * n);
  for (int j = 0; j < 2 * n; ++j) {
    d(j) = (f.eval(shifted(f.z0, n, j, h)) - f.eval(shifted(f.z0, n, j, -h))) / (2 * h);
  }
  Eigen::VectorXcd g(n);
  for (int k = 0; k < n; ++k) g(k) = 0.5 * std::complex<double>(d(k), -d(n + k));
  return g;
}

Eigen::MatrixXcd complex_hessian(const DefiningFunction& f) {
  require_shape(f);
  const int n = f.n;
  const int m = 2 * n;
  const double h = fd_step(f.z0);
  const double f0 = f.eval(f.z0);
  Eigen::MatrixXd r(m, m);
  for (int a = 0; a < m; ++a) {
    r(a, a) = (f.eval(shifted(f.z0, n, a, h)) - 2 * f0 + f.eval(shifted(f.z0, n, a, -h))) / (h * h);
    for (int b = a + 1; b < m; ++b) {
      const auto pp = f.eval(shifted(shifted(f.z0, n, a, h), n, b, h));
      const auto pm = f.eval(shifted(shifted(f.z0, n, a, h), n, b, -h));
      const auto mp = f.eval(shifted(shifted(f.z0, n, a, -h), n, b, h));
      const auto mm = f.eval(shifted(shifted(f.z0, n, a, -h), n, b, -h));
      r(a, b) = r(b, a) = (pp - pm - mp + mm) / (4 * h * h);
    }
  }
  Eigen::MatrixXcd out(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      out(k, l) = 0.25 * std::complex<double>(r(k, l) + r(n + k, n + l), r(k, n + l) - r(n + k, l));
    }
  }
  return out;
}

LeviReport levi_analyze(const DefiningFunction& f) {
  require_shape(f);
  const Eigen::VectorXcd g = complex_gradient(f);
  const Eigen::MatrixXcd h = complex_hessian(f);

  LeviReport rep;
  rep.n = f.n;
  rep.gradient_norm = g.norm();
  rep.hessian_norm = h.norm();
  if (rep.gradient_norm < 1e-8) {
    throw Error(ErrorCode::Precondition, "gradient vanishes at the reference point");
  }

  // L(w) = sum H_kl w_k conj(w_l) = w^* H^T w on {w : conj(g)^* w = 0}.
  const int n = f.n;
  if (n > 1) {
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g.conjugate()).householderQ();
    const Eigen::MatrixXcd basis = q.rightCols(n - 1);
    Eigen::MatrixXcd restricted = basis.adjoint() * h.transpose() * basis;
    restricted = 0.5 * (restricted + restricted.adjoint()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(restricted, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "eigenvalue solver failed");
    const double cutoff = 1e-6 * rep.hessian_norm;
    for (int k = 0; k < n - 1; ++k) {
      double lam = es.eigenvalues()(k);
      if (std::abs(lam) < cutoff) lam = 0.0;
      rep.eigenvalues.push_back(lam);
    }
  }
  for (double lam : rep.eigenvalues) {
    if (lam < 0) {
      ++rep.negatives;
    } else if (lam > 0) {
      ++rep.positives;
    } else {
      ++rep.zeros;
    }
  }
  rep.pseudoconcave = rep.negatives >= 1;
  return rep;
}

}  // namespace pconcave
