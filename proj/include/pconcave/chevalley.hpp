#ifndef PCONCAVE_CHEVALLEY_HPP
#define PCONCAVE_CHEVALLEY_HPP

// Structure constants of a Chevalley basis {x^a} u {H^sigma_i}:
//
//   [x^a, x^b]   = c(a,b) x^{a+b}       when a+b is a root
//   [x^a, x^-a]  = H^a = sum_i k_i H^sigma_i   (coroot expansion)
//   [H^b, x^a]   = <a,b> x^a
//
// with c(a,b) = -c(b,a) = -c(-a,-b) and |c(a,b)| = r+1.
//
// Signs are fixed on extraspecial pairs and propagated to every other pair,
// so the table is deterministic for a given labeling.

#include "pconcave/root_system.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pconcave {

class ChevalleyConstants {
 public:
  /// c(a, b) for any two roots; 0 when a + b is not a root.
  int operator()(const Root& a, const Root& b) const;

  const RootSystem& system() const { return rs_; }

  /// Stored entries: ordered pairs of positive roots whose sum is a root.
  const std::map<std::pair<Root, Root>, int>& positive_table() const { return table_; }

  /// (first, second) of the extraspecial pair for each non-simple positive root.
  const std::map<Root, std::pair<Root, Root>>& extraspecial() const { return extraspecial_; }

 private:
  friend ChevalleyConstants structure_constants(const RootSystem& rs);
  explicit ChevalleyConstants(RootSystem rs) : rs_(std::move(rs)) {}

  int lookup_positive(const Root& a, const Root& b) const;

  RootSystem rs_;
  std::map<std::pair<Root, Root>, int> table_;
  std::map<Root, std::pair<Root, Root>> extraspecial_;
};

ChevalleyConstants structure_constants(const RootSystem& rs);

/// Coefficients of the coroot H^a in the basis H^sigma_1..H^sigma_r.
std::vector<int> coroot_coefficients(const RootSystem& rs, const Root& a);

/// The Lie algebra assembled from a constants table, as an integer structure
/// tensor over the basis x^a (a in rs.roots() order) followed by H^sigma_i.
class BracketAlgebra {
 public:
  using Element = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

  explicit BracketAlgebra(const ChevalleyConstants& cc);

  int dim() const { return dim_; }
  int root_basis(const Root& a) const { return rs_.index_of(a); }
  int cartan_basis(int i) const { return static_cast<int>(rs_.roots().size()) + i; }

  Element basis(int k) const;
  Element x(const Root& a) const { return basis(root_basis(a)); }
  Element bracket(const Element& u, const Element& v) const;
  const Element& bracket_basis(int i, int j) const {
    return table_[static_cast<std::size_t>(i * dim_ + j)];
  }

 private:
  RootSystem rs_;
  int dim_ = 0;
  std::vector<Element> table_;
};

struct BracketViolation {
  std::string identity;
  Root alpha;
  Root beta;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct DoubleBracketEntry {
  Root alpha;
  Root beta;
  int r = 0;
  int q = 0;
  std::int64_t coefficient = 0;  // computed multiple of x^alpha
};

struct BracketReport {
  std::vector<DoubleBracketEntry> entries;
  std::vector<BracketViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// For every independent pair: [x^-b, [x^b, x^a]] = q(r+1) x^a in the
/// assembled algebra, plus c(b, a+b) c(-b, a+2b) = 2 on (0,2) strings.
BracketReport verify_bracket_identities(const ChevalleyConstants& cc);

/// c(a,b) = -c(b,a), c(a,b) = -c(-a,-b), |c(a,b)| = r+1 (both string
/// directions) over every summable pair.
std::vector<BracketViolation> check_constant_invariants(const ChevalleyConstants& cc);

/// Jacobi identity over every triple of basis elements. Returns the number of
/// failing triples.
std::int64_t jacobi_violations(const BracketAlgebra& g);

}  // namespace pconcave

#endif  // PCONCAVE_CHEVALLEY_HPP
