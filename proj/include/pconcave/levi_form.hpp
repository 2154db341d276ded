#ifndef PCONCAVE_LEVI_FORM_HPP
#define PCONCAVE_LEVI_FORM_HPP

// Levi form of a real hypersurface {phi = phi(z0)} in C^n, estimated by
// central finite differences.

#include <Eigen/Core>

#include <complex>
#include <functional>
#include <vector>

namespace pconcave {

/// phi(z) = Re( sum coef * z^a * conj(z)^b ).
struct PolynomialTerm {
  std::complex<double> coef;
  std::vector<int> z;     // exponents a, one per coordinate
  std::vector<int> zbar;  // exponents b
};

struct Polynomial {
  int n = 0;
  std::vector<PolynomialTerm> terms;

  /// Throws Error(InvalidInput) on exponent vectors of the wrong length or
  /// negative exponents.
  void validate() const;
  double operator()(const Eigen::VectorXcd& z) const;
};

struct DefiningFunction {
  int n = 0;
  std::function<double(const Eigen::VectorXcd&)> eval;
  Eigen::VectorXcd z0;

  static DefiningFunction from_polynomial(Polynomial p, Eigen::VectorXcd z0);
};

/// Step used for all finite differences at z0.
double fd_step(const Eigen::VectorXcd& z0);

/// g_k = d phi / d z_k at z0.
Eigen::VectorXcd complex_gradient(const DefiningFunction& f);

/// H(k, l) = d^2 phi / d z_k d conj(z_l) at z0.
Eigen::MatrixXcd complex_hessian(const DefiningFunction& f);

struct LeviReport {
  int n = 0;
  std::vector<double> eigenvalues;  // ascending, n-1 of them
  int negatives = 0;
  int zeros = 0;
  int positives = 0;
  bool pseudoconcave = false;       // negatives >= 1
  double gradient_norm = 0.0;
  double hessian_norm = 0.0;
};

/// Levi form restricted to the analytic tangent plane
/// { w : sum_k g_k w_k = 0 }. Eigenvalues with |l| < 1e-6 ||H|| are reported
/// as zero. Throws Error(Precondition) when the gradient vanishes at z0 and
/// Error(InvalidInput) for n < 1 or a point of the wrong size.
LeviReport levi_analyze(const DefiningFunction& f);

}  // namespace pconcave

#endif  // PCONCAVE_LEVI_FORM_HPP
