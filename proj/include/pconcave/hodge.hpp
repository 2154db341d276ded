#ifndef PCONCAVE_HODGE_HPP
#define PCONCAVE_HODGE_HPP

// Period domains of polarized Hodge structures and their minimal
// degenerations, at the level of Hodge numbers and Hodge-Deligne diamonds.

#include "pconcave/numeric_check.hpp"
#include "pconcave/root_system.hpp"

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pconcave {

/// h[p] = h^{p, n-p} for p = 0..n.
struct HodgeNumbers {
  int weight = 0;
  std::vector<int> h;

  /// h^{p, n-p}; zero outside [0, n].
  int at(int p) const;
  int dim() const;

  /// Throws Error(InvalidInput) on negative entries, wrong length, asymmetry
  /// or dim V = 0.
  void validate() const;

  /// From the order h^{n,0}, h^{n-1,1}, ..., h^{0,n}.
  static HodgeNumbers from_descending(int weight, const std::vector<int>& values);
};

enum class GroupFamily { Symplectic, IndefiniteOrthogonal };

const char* to_string(GroupFamily f);

struct GroupDescriptor {
  GroupFamily family = GroupFamily::Symplectic;
  std::vector<int> parameters;   // (m) or (m_ev, m_od)
  std::string name;              // "Sp(2,R)", "SO(4,1)"
  std::string isotropy;          // "U(1)xU(1)", "U(2)xSO(1)"
  int complex_dimension = 0;     // dim_C of G_R / isotropy
  bool trivial = false;          // at most one nonzero h^{p,q}
  std::vector<std::string> notes;
};

/// Sp(m,R) with 2m = dim V for odd weight, SO(m_ev, m_od) for even weight.
/// Throws Error(InvalidInput) for odd weight with odd dim V.
GroupDescriptor group_of_period_domain(const HodgeNumbers& h);

/// p -> (2p - n)/2, the eigenvalue of the grading element on V^{p,n-p}.
std::map<int, Rational> grading_values_on_V(const HodgeNumbers& h);

/// The same eigenvalues listed with multiplicity h^{p,n-p}, largest first.
std::vector<Rational> grading_spectrum(const HodgeNumbers& h);

enum class DegenerationKind { TypeI, TypeII };

const char* to_string(DegenerationKind k);

struct DegenerationSpec {
  DegenerationKind kind = DegenerationKind::TypeI;
  int p_o = 0;  // TypeI only

  std::string str() const;  // "TypeI(p_o=1)", "TypeII"
  /// Accepts "I:<p_o>", "TypeI:<p_o>", "II", "TypeII".
  static DegenerationSpec parse(const std::string& text);
  bool operator==(const DegenerationSpec&) const = default;
};

/// Empty when d is realizable for h, otherwise the reason it is not.
std::optional<std::string> degeneration_obstruction(const HodgeNumbers& h, const DegenerationSpec& d);

struct DeligneDiamond {
  int weight = 0;
  Eigen::MatrixXi i;  // i(p, q) = i^{p,q}, 0 <= p, q <= n
  int rank_n = 0;

  int at(int p, int q) const;  // zero outside the square
  int total() const;
};

/// Throws Error(InfeasibleDegeneration) when d is not realizable for h.
DeligneDiamond limit_diamond(const HodgeNumbers& h, const DegenerationSpec& d);

struct ClauseCheck {
  std::string clause;
  bool holds = false;
};

/// Independent pass over the defining clauses of the degeneration kind,
/// the symmetries and dimension conservation.
std::vector<ClauseCheck> check_diamond_clauses(const HodgeNumbers& h, const DegenerationSpec& d,
                                               const DeligneDiamond& diamond);

/// Whether p is an admissible index for the boundary-concavity condition
/// (p = p_o + 2l or p_o - 2l + 1 with l >= 1 for TypeI; p = m + 2l + 1 with
/// l in Z for TypeII), returning l.
std::optional<int> admissible_offset(const DegenerationSpec& d, int weight, int p);

struct BoundaryConcavityReport {
  bool condition_met = false;
  std::optional<int> witness_p;
  std::optional<int> ell;
};

/// Looks for an admissible p with i^{p,n-p} != 0 on the diamond's weight-n
/// row; the row is read through i^{p,n-p} = i^{n-p,p}. Returns the witness of
/// smallest |l|, preferring p_o + 2l (TypeI) and l > 0 (TypeII) on ties.
BoundaryConcavityReport check_boundary_concavity(const HodgeNumbers& h, const DegenerationSpec& d);

struct DegenerationVerdict {
  DegenerationSpec spec;
  DeligneDiamond diamond;
  BoundaryConcavityReport report;
};

/// Every realizable TypeI p_o (ascending) followed by TypeII when realizable.
std::vector<DegenerationVerdict> enumerate_minimal_degenerations(const HodgeNumbers& h);

struct Sl2CayleyReport {
  NumericCheck summary;              // worst residual over all items
  std::vector<NumericCheck> items;
};

/// Builds the standard sl2 triple (N+, Y, N) on the 2-dimensional (TypeI) or
/// 3-dimensional (TypeII) representation, forms d_N = exp(i pi/4 (N+ + N)),
/// and checks the closed forms of d_N on v, Nv (and N^2 v), the conjugate
/// relations, the images of the triple under Ad(d_N), and that Ad(d_N) Y acts
/// on d_N(w) by the Y-weight of w.
Sl2CayleyReport verify_sl2_cayley(DegenerationKind kind);

}  // namespace pconcave

#endif  // PCONCAVE_HODGE_HPP
