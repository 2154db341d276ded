#include "pconcave/error.hpp"
#include "pconcave/json_io.hpp"
#include "pconcave/levi_form.hpp"

#include <Eigen/QR>

#include <doctest.h>

#include <random>

using namespace pconcave;

namespace {

using Cd = std::complex<double>;

std::vector<int> unit_exponent(int n, int k) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

// phi(z) = Re(sum_kl a_kl z_k conj(z_l) + sum_k b_k z_k) + c
Polynomial quadratic(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double c) {
  const int n = static_cast<int>(a.rows());
  Polynomial p;
  p.n = n;
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if (a(k, l) != Cd(0)) p.terms.push_back({a(k, l), unit_exponent(n, k), unit_exponent(n, l)});
    }
    if (b(k) != Cd(0)) p.terms.push_back({b(k), unit_exponent(n, k), std::vector<int>(static_cast<std::size_t>(n), 0)});
  }
  if (c != 0.0) {
    p.terms.push_back({Cd(c), std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)});
  }
  return p;
}

Eigen::VectorXcd e1(int n) { return Eigen::VectorXcd::Unit(n, 0); }

Eigen::MatrixXcd random_unitary(int n, std::mt19937& gen) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Cd(nd(gen), nd(gen));
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(m).householderQ();
}

}  // namespace

TEST_CASE("ball boundary is not pseudoconcave") {
  const LeviReport r =
      levi_analyze(DefiningFunction::from_polynomial(quadratic(Eigen::MatrixXcd::Identity(3, 3), Eigen::VectorXcd::Zero(3), -1.0), e1(3)));
  REQUIRE(r.eigenvalues.size() == 2);
  CHECK(r.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.positives == 2);
  CHECK_FALSE(r.pseudoconcave);
}

TEST_CASE("complement of a ball is pseudoconcave") {
  const LeviReport r = levi_analyze(
      DefiningFunction::from_polynomial(quadratic(-Eigen::MatrixXcd::Identity(3, 3), Eigen::VectorXcd::Zero(3), 1.0), e1(3)));
  CHECK(r.negatives == 2);
  CHECK(r.pseudoconcave);
}

TEST_CASE("normal form Re(z1) + l2|z2|^2 + l3|z3|^2") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
  a(1, 1) = -0.7;
  a(2, 2) = 2.5;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(3);
  b(0) = 1.0;
  const LeviReport r = levi_analyze(DefiningFunction::from_polynomial(quadratic(a, b, 0.0), Eigen::VectorXcd::Zero(3)));
  REQUIRE(r.eigenvalues.size() == 2);
  CHECK(std::abs(r.eigenvalues[0] + 0.7) < 1e-6);
  CHECK(std::abs(r.eigenvalues[1] - 2.5) < 1e-6);
  CHECK(r.pseudoconcave);
}

TEST_CASE("degenerate directions report zero") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
  a(1, 1) = 1.0;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(3);
  b(0) = 1.0;
  const LeviReport r = levi_analyze(DefiningFunction::from_polynomial(quadratic(a, b, 0.0), Eigen::VectorXcd::Zero(3)));
  CHECK(r.zeros == 1);
  CHECK(r.positives == 1);
  CHECK_FALSE(r.pseudoconcave);
}

TEST_CASE("finite-difference Hessian is exact on quadratics") {
  std::mt19937 gen(3);
  std::normal_distribution<double> nd;
  for (int n : {1, 2, 4}) {
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Cd(nd(gen), nd(gen));
    const Eigen::MatrixXcd a = 0.5 * (m + m.adjoint());
    Eigen::VectorXcd b(n);
    for (int i = 0; i < n; ++i) b(i) = Cd(nd(gen), nd(gen));
    Eigen::VectorXcd z0(n);
    for (int i = 0; i < n; ++i) z0(i) = Cd(nd(gen), nd(gen));
    const DefiningFunction f = DefiningFunction::from_polynomial(quadratic(a, b, 0.3), z0);
    CHECK((complex_hessian(f) - a).cwiseAbs().maxCoeff() < 1e-6);
    // d/dz_k of sum a_ij z_i conj(z_j) + Re(b z) is (A conj(z))_k + b_k / 2
    const Eigen::VectorXcd g = a * z0.conjugate() + 0.5 * b;
    CHECK((complex_gradient(f) - g).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("signature is invariant under positive scaling and unitary changes of coordinates") {
  std::mt19937 gen(5);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
  a.diagonal() << 0.0, -1.3, 0.8, 2.0;
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(4);
  b(0) = 2.0;
  const Polynomial p = quadratic(a, b, 0.0);
  const LeviReport base = levi_analyze(DefiningFunction::from_polynomial(p, Eigen::VectorXcd::Zero(4)));
  CHECK(base.negatives == 1);
  CHECK(base.positives == 2);

  for (double c : {0.1, 3.0, 100.0}) {
    DefiningFunction f = DefiningFunction::from_polynomial(p, Eigen::VectorXcd::Zero(4));
    auto inner = f.eval;
    f.eval = [inner, c](const Eigen::VectorXcd& z) { return c * inner(z); };
    const LeviReport r = levi_analyze(f);
    CHECK(r.negatives == base.negatives);
    CHECK(r.positives == base.positives);
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
      CHECK(std::abs(r.eigenvalues[k] - c * base.eigenvalues[k]) < 1e-6 * std::max(1.0, c));
    }
  }

  for (int trial = 0; trial < 5; ++trial) {
    const Eigen::MatrixXcd u = random_unitary(4, gen);
    Eigen::VectorXcd w0(4);
    w0 << Cd(0.3, -0.2), Cd(0.1, 0.4), Cd(-0.5, 0.0), Cd(0.2, 0.2);
    DefiningFunction f = DefiningFunction::from_polynomial(p, Eigen::VectorXcd::Zero(4));
    auto inner = f.eval;
    // phi'(z) = phi(U (z - w0)) has the same boundary geometry at w0.
    f.eval = [inner, u, w0](const Eigen::VectorXcd& z) { return inner(u * (z - w0)); };
    f.z0 = w0;
    const LeviReport r = levi_analyze(f);
    CHECK(r.negatives == base.negatives);
    CHECK(r.positives == base.positives);
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) CHECK(std::abs(r.eigenvalues[k] - base.eigenvalues[k]) < 1e-6);
  }
}

TEST_CASE("errors") {
  const Polynomial sq = quadratic(Eigen::MatrixXcd::Identity(2, 2), Eigen::VectorXcd::Zero(2), 0.0);
  try {
    levi_analyze(DefiningFunction::from_polynomial(sq, Eigen::VectorXcd::Zero(2)));
    FAIL("expected vanishing gradient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
  Polynomial bad = sq;
  bad.terms[0].z = {1};
  CHECK_THROWS_AS(DefiningFunction::from_polynomial(bad, Eigen::VectorXcd::Zero(2)), Error);
  CHECK_THROWS_AS(levi_analyze(DefiningFunction::from_polynomial(sq, Eigen::VectorXcd::Zero(3))), Error);
}

TEST_CASE("polynomial JSON") {
  const Json j = Json::parse(R"({
    "n": 2,
    "terms": [{"coef": [-1, 0], "z": [1, 0], "zbar": [1, 0]},
              {"coef": -1, "z": [0, 1], "zbar": [0, 1]},
              {"coef": 1}],
    "point": [[0, 1], 0]
  })");
  const DefiningFunction f = defining_function_from_json(j);
  CHECK(f.z0(0) == Cd(0, 1));
  CHECK(f.eval(f.z0) == doctest::Approx(0.0));
  const LeviReport r = levi_analyze(f);
  CHECK(r.negatives == 1);
  CHECK_THROWS_AS(defining_function_from_json(Json::parse(R"({"terms": []})")), Error);
  CHECK_THROWS_AS(defining_function_from_json(Json::parse(R"({"n": 1, "terms": [{"coef": "x"}]})")), Error);
  CHECK_THROWS_AS(defining_function_from_json(Json::parse(R"({"n": 2, "terms": [], "point": [0]})")), Error);
}
