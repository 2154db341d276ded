#ifndef PCONCAVE_ROOT_SYSTEM_HPP
#define PCONCAVE_ROOT_SYSTEM_HPP

// Classical root systems in simple-root coordinates.
//
// Every root is an integer vector over the simple roots sigma_1..sigma_r.
// Inner products come from the symmetrized Cartan matrix, normalized so that
// long roots have squared length 2. Everything in this header is exact.

#include <Eigen/Core>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace pconcave {

using Rational = boost::rational<std::int64_t>;

enum class Family { A, B, C, D };

char family_letter(Family f);
Family family_from_letter(char c);

struct LieType {
  Family family = Family::A;
  int rank = 1;

  /// Throws Error(InvalidInput) unless rank >= 1 (rank >= 3 for D).
  void validate() const;
  std::string name() const;  // e.g. "B2"
  auto operator<=>(const LieType&) const = default;
};

/// Integer vector over the simple roots. Arithmetic is closed over the root
/// lattice; whether a value is actually a root is answered by RootSystem.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  Root(std::initializer_list<int> coeffs) : c_(coeffs) {}

  int rank() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coeffs() const { return c_; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero, all coefficients >= 0
  bool is_negative() const;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& a);

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  std::string str() const;  // "[1,0,1]"

 private:
  std::vector<int> c_;
};

std::ostream& operator<<(std::ostream& os, const Root& r);

/// True when a and b are not proportional.
bool linearly_independent(const Root& a, const Root& b);

/// Order used everywhere roots are listed: by height, then sigma_1 before
/// sigma_2 (lexicographically larger coefficient vector first).
bool root_order_less(const Root& a, const Root& b);

class RootSystem {
 public:
  /// Standard Cartan matrix of the family (Bourbaki labeling).
  static RootSystem build(LieType t);

  /// Same family with an explicit Cartan matrix. The matrix must be a
  /// relabeling of the family's standard one; this is how the so(5) labeling
  /// with roots sigma1, sigma2, sigma1+sigma2, 2sigma1+sigma2 is obtained.
  static RootSystem from_cartan(LieType t, const Eigen::MatrixXi& cartan);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// cartan(i, j) = <sigma_i, sigma_j> = 2 (sigma_i, sigma_j) / (sigma_j, sigma_j).
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  /// Squared length of the i-th simple root; long roots have length 2.
  Rational simple_length(int i) const { return lengths_[static_cast<std::size_t>(i)]; }

  Rational inner(const Root& a, const Root& b) const;

  /// Positive roots in root order, then their negatives in the same order.
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  bool contains(const Root& a) const { return index_.count(a) != 0; }
  /// Position of a in roots(); throws Error(InvalidInput) when a is not a root.
  int index_of(const Root& a) const;
  Root simple_root(int i) const;

  /// labeling()[i] is the index of sigma_i in the family's standard labeling.
  const std::vector<int>& labeling() const { return labeling_; }

  bool operator==(const RootSystem& o) const {
    return type_ == o.type_ && cartan_ == o.cartan_;
  }

 private:
  RootSystem(LieType t, Eigen::MatrixXi cartan, std::vector<int> labeling);
  void enumerate();

  LieType type_;
  Eigen::MatrixXi cartan_;
  std::vector<Rational> lengths_;
  std::vector<Root> positive_;
  std::vector<Root> roots_;
  std::map<Root, int> index_;
  std::vector<int> labeling_;
};

Eigen::MatrixXi standard_cartan(LieType t);

/// Closed-form |Delta| for the family.
int expected_root_count(LieType t);

/// Throws Error(InvalidInput) when a is not in rs.
void require_root(const RootSystem& rs, const Root& a, const char* what);

/// 2(a,b)/(b,b); always an integer for roots.
int cartan_integer(const RootSystem& rs, const Root& a, const Root& b);

struct RootString {
  int r = 0;  // largest n with a - n b in the system
  int q = 0;  // largest n with a + n b in the system
  std::vector<Root> members;  // a - r b, ..., a + q b
};

/// The b-string through a. Requires a, b roots with a != +-b.
RootString root_string(const RootSystem& rs, const Root& a, const Root& b);

/// Integer combination E = sum_j n_j S^j of the dual basis to the simple roots.
struct GradingElement {
  std::vector<int> coeffs;

  int value(const Root& a) const;
  bool is_zero() const;
};

/// Delta(g^l) for every l that occurs.
std::map<int, std::vector<Root>> graded_pieces(const RootSystem& rs, const GradingElement& e);

struct ParabolicData {
  std::vector<Root> roots;  // Delta(p): grading value >= 0
  std::vector<int> crossed;  // I(p), 1-based simple-root labels with n_i > 0
  int dim = 0;               // complex dimension of G/P = |Delta(g^{<0})|
};

ParabolicData parabolic_data(const RootSystem& rs, const GradingElement& e);

}  // namespace pconcave

#endif  // PCONCAVE_ROOT_SYSTEM_HPP
