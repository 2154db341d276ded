#ifndef PCONCAVE_MATRIX_REP_HPP
#define PCONCAVE_MATRIX_REP_HPP

// Chevalley bases realized on the defining representation of each classical
// family.
//
//   A_r  sl(r+1)   traceless (r+1)x(r+1)
//   B_r  so(2r+1)  preserving S = [[0,I,0],[I,0,0],[0,0,1]]   (basis e_1..e_r, e_-1..e_-r, e_0)
//   C_r  sp(2r)    preserving J = [[0,I],[-I,0]]
//   D_r  so(2r)    preserving S = [[0,I],[I,0]]
//
// Simple root vectors are fixed per family; every other root vector is built
// by bracketing along extraspecial pairs and dividing by the table constant,
// so [x^a, x^b] = c(a,b) x^{a+b} holds with the table's own signs. Negative
// root vectors are transposes of the positive ones, making x^-a - x^a real
// skew-symmetric and every Cayley transform orthogonal. The short simple root
// of B_r carries a factor sqrt(2); all other entries are 0 or +-1.

#include "pconcave/chevalley.hpp"
#include "pconcave/numeric_check.hpp"
#include "pconcave/root_system.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace pconcave {

template <typename Scalar>
class MatrixRealization {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  MatrixRealization(RootSystem rs, int dim, std::vector<Matrix> x, std::vector<Matrix> h)
      : rs_(std::move(rs)), dim_(dim), x_(std::move(x)), h_(std::move(h)) {}

  const RootSystem& system() const { return rs_; }
  int dim() const { return dim_; }

  const Matrix& x(const Root& a) const { return x_[static_cast<std::size_t>(rs_.index_of(a))]; }
  /// H^{sigma_i}
  const Matrix& h(int i) const { return h_[static_cast<std::size_t>(i)]; }
  /// H^a as the coroot combination of the H^{sigma_i}.
  Matrix coroot(const Root& a) const;

  /// The grading element E acting on the representation space (diagonal).
  Matrix grading(const GradingElement& e) const;

 private:
  RootSystem rs_;
  int dim_;
  std::vector<Matrix> x_;
  std::vector<Matrix> h_;
};

using Realization = MatrixRealization<double>;

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> commutator(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b) {
  return a * b - b * a;
}

/// Throws Error(InvalidInput) when rank > max_rank.
template <typename Scalar = double>
MatrixRealization<Scalar> fundamental_rep(const RootSystem& rs, int max_rank = 6);

/// Worst residual over the Chevalley relations:
/// [x^a,x^-a] = H^a, [H^sigma_i, x^a] = <a,sigma_i> x^a, [x^a,x^b] = c(a,b) x^{a+b}.
NumericCheck realization_residual(const Realization& rep, const ChevalleyConstants& cc);

/// c_a = exp(pi/4 (x^-a - x^a)).
Realization::Matrix cayley_matrix(const Realization& rep, const Root& a);

/// Ad(c_{-b}^2) x^a compared against +-x^g for every root g; reports the best
/// match. Requires a, b independent with the b-string through a of shape
/// (0,1) or (0,2); passes when the best match is a+b resp. a+2b with residual
/// below kConjugationTolerance. expected_sign is the sign the structure
/// constants predict: c(b,a) for (0,1), c(b,a+b) c(b,a) / 2 for (0,2).
/// Every ordered pair (a, b) of independent roots whose b-string through a
/// has shape (0,1) or (0,2), in root order.
std::vector<std::pair<Root, Root>> cayley_pairs(const RootSystem& rs);

NumericCheck verify_cayley_conjugation(const Realization& rep, const ChevalleyConstants& cc,
                                       const Root& a, const Root& b);

/// Norm of the entries of m that map an E-eigenvector into strictly lower
/// E-eigenvalues; zero exactly when m preserves the E-filtration (m in P).
double parabolic_residual(const Realization& rep, const GradingElement& e, const Realization::Matrix& m);

/// xi = prod_i exp(eps x^{a_i}) over the noncompact roots of negative grading;
/// checks Ad(c_{-beta}^2) xi lies in P. beta must be a witness of the
/// concavity criterion for e; 0 <= eps <= 1.
NumericCheck verify_cayley_fixed_point(const Realization& rep, const GradingElement& e, const Root& beta,
                                       double eps);

}  // namespace pconcave

#endif  // PCONCAVE_MATRIX_REP_HPP
