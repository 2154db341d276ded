#ifndef PCONCAVE_MATRIX_EXP_HPP
#define PCONCAVE_MATRIX_EXP_HPP

#include <Eigen/Core>

#include <cmath>

namespace pconcave {

/// Matrix exponential by scaling and squaring with a Taylor kernel.
///
/// A is scaled by 2^-s so that ||A 2^-s||_1 <= 1/2, the series is summed
/// until the next term is below machine epsilon relative to the partial sum,
/// and the result is squared s times. For ||B||_1 <= 1/2 the truncation error
/// after the k-th term T_k is at most ||T_k|| ||B|| / (k+1 - ||B||) < ||T_k||,
/// so the kernel is accurate to a few ulps. Squaring multiplies the relative
/// error by at most 2^s times the conditioning of exp at A; the generators
/// used here have small norm so s stays below 4.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(
    const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_assert(a.rows() == a.cols());

  const Eigen::Index n = a.rows();
  const Real norm1 = n == 0 ? Real(0) : a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Real(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm1 / Real(0.5))));

  const Matrix b = a / Scalar(std::ldexp(Real(1), squarings));
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  const Real eps = Eigen::NumTraits<Real>::epsilon();
  for (int k = 1; k <= 60; ++k) {
    term = (term * b) / Scalar(Real(k));
    result += term;
    if (term.cwiseAbs().colwise().sum().maxCoeff() <= eps * result.cwiseAbs().colwise().sum().maxCoeff()) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace pconcave

#endif  // PCONCAVE_MATRIX_EXP_HPP
