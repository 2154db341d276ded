#include "pconcave/chevalley.hpp"
#include "pconcave/concavity.hpp"
#include "pconcave/error.hpp"
#include "pconcave/matrix_exp.hpp"
#include "pconcave/matrix_rep.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace pconcave;

namespace {

RootSystem so5() {
  Eigen::MatrixXi m(2, 2);
  m << 2, -1, -2, 2;
  return RootSystem::from_cartan({Family::B, 2}, m);
}

std::vector<RootSystem> systems() {
  std::vector<RootSystem> out;
  for (const LieType t : {LieType{Family::A, 1}, LieType{Family::A, 2}, LieType{Family::A, 3}, LieType{Family::B, 2},
                          LieType{Family::B, 3}, LieType{Family::C, 2}, LieType{Family::C, 3}, LieType{Family::D, 4}}) {
    out.push_back(RootSystem::build(t));
  }
  out.push_back(so5());
  return out;
}

}  // namespace

TEST_CASE("expm agrees with Eigen's matrix exponential") {
  std::mt19937 gen(7);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int n : {1, 2, 3, 5, 8}) {
    for (double scale : {0.01, 0.5, 2.0, 6.0}) {
      Eigen::MatrixXd a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = scale * nd(gen);
      const Eigen::MatrixXd ref = a.exp();
      CHECK((expm(a) - ref).norm() <= 1e-11 * std::max(1.0, ref.norm()));
    }
  }
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Random(4, 4);
  const Eigen::MatrixXcd cref = c.exp();
  CHECK((expm(c) - cref).norm() < 1e-12 * std::max(1.0, cref.norm()));
}

TEST_CASE("expm(A) expm(-A) = I and expm(0) = I") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> ud(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd a(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) a(i, j) = ud(gen);
    CHECK((expm(a) * expm(-a) - Eigen::MatrixXd::Identity(5, 5)).norm() < 1e-11);
  }
  CHECK((expm(Eigen::MatrixXd::Zero(3, 3)) - Eigen::MatrixXd::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("defining representations satisfy the Chevalley relations") {
  for (const RootSystem& rs : systems()) {
    CAPTURE(rs.type().name());
    const ChevalleyConstants cc = structure_constants(rs);
    const Realization rep = fundamental_rep(rs);
    const NumericCheck c = realization_residual(rep, cc);
    CHECK(c.pass);
    CHECK(c.residual < 1e-12);
    for (const Root& a : rs.roots()) {
      CHECK((rep.x(-a) - rep.x(a).transpose()).norm() == 0.0);
      CHECK(rep.x(a).trace() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("realizations preserve the family's bilinear form") {
  const RootSystem c3 = RootSystem::build({Family::C, 3});
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(6, 6);
  j.topRightCorner(3, 3).setIdentity();
  j.bottomLeftCorner(3, 3) = -Eigen::MatrixXd::Identity(3, 3);
  const Realization rc = fundamental_rep(c3);
  for (const Root& a : c3.roots()) CHECK((rc.x(a).transpose() * j + j * rc.x(a)).norm() == 0.0);

  const RootSystem b3 = RootSystem::build({Family::B, 3});
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(7, 7);
  s.block(0, 3, 3, 3).setIdentity();
  s.block(3, 0, 3, 3).setIdentity();
  s(6, 6) = 1;
  const Realization rb = fundamental_rep(b3);
  for (const Root& a : b3.roots()) CHECK((rb.x(a).transpose() * s + s * rb.x(a)).norm() < 1e-14);
}

TEST_CASE("complex realization matches the real one") {
  const RootSystem rs = RootSystem::build({Family::B, 2});
  const Realization r = fundamental_rep(rs);
  const auto c = fundamental_rep<std::complex<double>>(rs);
  for (const Root& a : rs.roots()) CHECK((c.x(a).real() - r.x(a)).norm() == 0.0);
}

TEST_CASE("rank bound on realizations") {
  CHECK_THROWS_AS(fundamental_rep(RootSystem::build({Family::A, 7})), Error);
}

TEST_CASE("A1 Cayley transform") {
  const Realization rep = fundamental_rep(RootSystem::build({Family::A, 1}));
  const Eigen::MatrixXd c = cayley_matrix(rep, Root{1});
  Eigen::MatrixXd expected(2, 2);
  expected << 1, -1, 1, 1;
  expected /= std::sqrt(2.0);
  CHECK((c - expected).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(((c * c) - Eigen::MatrixXd{{0, -1}, {1, 0}}).norm() < 1e-12);
}

TEST_CASE("Cayley conjugation moves x^a to +-x^{a+qb} with the predicted sign") {
  for (const RootSystem& rs : systems()) {
    CAPTURE(rs.type().name());
    const ChevalleyConstants cc = structure_constants(rs);
    const Realization rep = fundamental_rep(rs);
    for (const auto& [a, b] : cayley_pairs(rs)) {
      const NumericCheck c = verify_cayley_conjugation(rep, cc, a, b);
      const RootString s = root_string(rs, a, b);
      CHECK(c.pass);
      CHECK(c.residual < 1e-9);
      REQUIRE(c.sign.has_value());
      CHECK(std::abs(*c.sign) == 1);
      CHECK(c.sign == c.expected_sign);
      CHECK(c.target == a + s.q * b);
    }
  }
}

TEST_CASE("Cayley conjugation preconditions") {
  const RootSystem rs = RootSystem::build({Family::A, 2});
  const ChevalleyConstants cc = structure_constants(rs);
  const Realization rep = fundamental_rep(rs);
  CHECK_THROWS_AS(verify_cayley_conjugation(rep, cc, Root{1, 0}, Root{-1, 0}), Error);
  // (1,0) string: a - b is a root
  CHECK_THROWS_AS(verify_cayley_conjugation(rep, cc, Root{1, 1}, Root{1, 0}), Error);
  CHECK(cayley_pairs(rs).size() == 12);
}

TEST_CASE("grading matrix grades the root vectors and P is block triangular") {
  for (const RootSystem& rs : systems()) {
    const Realization rep = fundamental_rep(rs);
    GradingElement e;
    for (int i = 0; i < rs.rank(); ++i) e.coeffs.push_back(i % 2 == 0 ? 1 : 0);
    const Eigen::MatrixXd g = rep.grading(e);
    CHECK((g - Eigen::MatrixXd(g.diagonal().asDiagonal())).norm() < 1e-12);
    for (const Root& a : rs.roots()) {
      CHECK((g * rep.x(a) - rep.x(a) * g - e.value(a) * rep.x(a)).norm() < 1e-12);
      const Eigen::MatrixXd group_element = expm(0.7 * rep.x(a));
      if (e.value(a) >= 0) {
        CHECK(parabolic_residual(rep, e, group_element) < 1e-12);
      } else {
        CHECK(parabolic_residual(rep, e, group_element) > 0.1);
      }
    }
    // P is a group: products of elements of P stay in P.
    Eigen::MatrixXd p = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
    for (const Root& a : rs.roots()) {
      if (e.value(a) >= 0) p = p * expm(0.3 * rep.x(a));
    }
    CHECK(parabolic_residual(rep, e, p) < 1e-12);
  }
}

TEST_CASE("Cayley fixed point for the witnesses") {
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const Realization ra2 = fundamental_rep(a2);
  const RootSystem b2 = so5();
  const Realization rb2 = fundamental_rep(b2);
  for (double eps : {0.0, 0.01, 0.1, 1.0}) {
    CHECK(verify_cayley_fixed_point(ra2, GradingElement{{1, 1}}, Root{1, 1}, eps).pass);
    CHECK(verify_cayley_fixed_point(rb2, GradingElement{{1, 0}}, Root{2, 1}, eps).pass);
  }
  // Without the Cayley transform the same element leaves P.
  const Eigen::MatrixXd xi = expm(0.1 * ra2.x(Root{-1, 0})) * expm(0.1 * ra2.x(Root{0, -1}));
  CHECK(parabolic_residual(ra2, GradingElement{{1, 1}}, xi) > 1e-3);

  CHECK_THROWS_AS(verify_cayley_fixed_point(ra2, GradingElement{{1, 1}}, Root{-1, -1}, 0.1), Error);
  CHECK_THROWS_AS(verify_cayley_fixed_point(ra2, GradingElement{{1, 1}}, Root{1, 1}, 1.5), Error);
  CHECK_THROWS_AS(verify_cayley_fixed_point(ra2, GradingElement{{1, 1}}, Root{1, 1}, -0.1), Error);
}
