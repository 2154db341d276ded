#include "pconcave/root_system.hpp"

#include "pconcave/error.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace pconcave {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
    default: break;
  }
  throw Error(ErrorCode::InvalidInput, std::string("unknown Lie family '") + c + "'");
}

void LieType::validate() const {
  const int min_rank = family == Family::D ? 3 : 1;
  if (rank < min_rank) {
    throw Error(ErrorCode::InvalidInput, "rank " + std::to_string(rank) + " is invalid for family " +
                                             family_letter(family) + " (minimum " +
                                             std::to_string(min_rank) + ")");
  }
}

std::string LieType::name() const { return family_letter(family) + std::to_string(rank); }

// ---------------------------------------------------------------------------
// Root

int Root::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(c_.begin(), c_.end(), [](int v) { return v >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(c_.begin(), c_.end(), [](int v) { return v <= 0; });
}

Root Root::operator-() const {
  std::vector<int> out(c_.size());
  std::transform(c_.begin(), c_.end(), out.begin(), [](int v) { return -v; });
  return Root(std::move(out));
}

Root operator+(const Root& a, const Root& b) {
  std::vector<int> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.c_[i] + b.c_[i];
  return Root(std::move(out));
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

Root operator*(int k, const Root& a) {
  std::vector<int> out(a.c_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = k * a.c_[i];
  return Root(std::move(out));
}

std::string Root::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Root& r) { return os << r.str(); }

bool linearly_independent(const Root& a, const Root& b) {
  // 2x2 minors all vanish iff proportional (or one is zero)
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = i + 1; j < a.rank(); ++j) {
      if (a[i] * b[j] - a[j] * b[i] != 0) return true;
    }
  }
  return false;
}

bool root_order_less(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coeffs() > b.coeffs();
}

// ---------------------------------------------------------------------------
// RootSystem

Eigen::MatrixXi standard_cartan(LieType t) {
  t.validate();
  const int r = t.rank;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(r, r);
  for (int i = 0; i < r; ++i) a(i, i) = 2;
  for (int i = 0; i + 1 < r; ++i) {
    a(i, i + 1) = -1;
    a(i + 1, i) = -1;
  }
  switch (t.family) {
    case Family::A:
      break;
    case Family::B:  // sigma_r short
      if (r >= 2) a(r - 2, r - 1) = -2;
      break;
    case Family::C:  // sigma_r long
      if (r >= 2) a(r - 1, r - 2) = -2;
      break;
    case Family::D:  // sigma_{r-1}, sigma_r both attached to sigma_{r-2}
      a(r - 2, r - 1) = 0;
      a(r - 1, r - 2) = 0;
      a(r - 3, r - 1) = -1;
      a(r - 1, r - 3) = -1;
      break;
  }
  return a;
}

int expected_root_count(LieType t) {
  const int r = t.rank;
  switch (t.family) {
    case Family::A: return r * (r + 1);
    case Family::B:
    case Family::C: return 2 * r * r;
    case Family::D: return 2 * r * (r - 1);
  }
  return 0;
}

RootSystem::RootSystem(LieType t, Eigen::MatrixXi cartan, std::vector<int> labeling)
    : type_(t), cartan_(std::move(cartan)), labeling_(std::move(labeling)) {
  const int r = type_.rank;

  // Symmetrizer d_j = (sigma_j, sigma_j) / 2 with a_ij d_j = a_ji d_i, found by
  // walking the (connected) Dynkin diagram.
  std::vector<Rational> d(static_cast<std::size_t>(r), Rational(0));
  d[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int i = todo.front();
    todo.pop();
    for (int j = 0; j < r; ++j) {
      if (j == i || cartan_(i, j) == 0 || d[static_cast<std::size_t>(j)].numerator() != 0) continue;
      d[static_cast<std::size_t>(j)] = d[static_cast<std::size_t>(i)] * cartan_(j, i) / cartan_(i, j);
      todo.push(j);
    }
  }
  const Rational longest = *std::max_element(d.begin(), d.end());
  lengths_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) lengths_[static_cast<std::size_t>(i)] = 2 * d[static_cast<std::size_t>(i)] / longest;

  enumerate();
}

void RootSystem::enumerate() {
  const int r = type_.rank;
  const int expected = expected_root_count(type_);

  std::vector<Root> level;
  std::map<Root, int> seen;
  for (int i = 0; i < r; ++i) {
    level.push_back(simple_root(i));
    seen.emplace(level.back(), 0);
  }

  // Grow by simple roots: alpha + sigma_i is a root iff q > 0 in the
  // sigma_i-string through alpha, and q = r - <alpha, sigma_i>.
  while (!level.empty()) {
    positive_.insert(positive_.end(), level.begin(), level.end());
    std::vector<Root> next;
    for (const Root& a : level) {
      for (int i = 0; i < r; ++i) {
        const Root s = simple_root(i);
        if (a == s) continue;
        int down = 0;
        while (seen.count(a - (down + 1) * s)) ++down;
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += a[j] * cartan_(j, i);
        if (down - pairing > 0) {
          Root b = a + s;
          if (seen.emplace(b, 0).second) next.push_back(std::move(b));
        }
      }
    }
    if (2 * static_cast<int>(positive_.size() + next.size()) > expected) {
      throw Error(ErrorCode::InvalidInput,
                  "Cartan matrix generates more roots than " + type_.name() + " allows");
    }
    level = std::move(next);
  }

  std::sort(positive_.begin(), positive_.end(), root_order_less);
  roots_ = positive_;
  for (const Root& a : positive_) roots_.push_back(-a);
  for (std::size_t i = 0; i < roots_.size(); ++i) index_.emplace(roots_[i], static_cast<int>(i));

  if (static_cast<int>(roots_.size()) != expected) {
    throw Error(ErrorCode::InvalidInput, "root enumeration for " + type_.name() + " produced " +
                                             std::to_string(roots_.size()) + " roots, expected " +
                                             std::to_string(expected));
  }
}

RootSystem RootSystem::build(LieType t) {
  t.validate();
  std::vector<int> identity(static_cast<std::size_t>(t.rank));
  std::iota(identity.begin(), identity.end(), 0);
  return RootSystem(t, standard_cartan(t), std::move(identity));
}

RootSystem RootSystem::from_cartan(LieType t, const Eigen::MatrixXi& cartan) {
  t.validate();
  if (cartan.rows() != t.rank || cartan.cols() != t.rank) {
    throw Error(ErrorCode::InvalidInput, "Cartan matrix must be " + std::to_string(t.rank) + "x" +
                                             std::to_string(t.rank));
  }
  if (t.rank > 8) {
    throw Error(ErrorCode::InvalidInput, "Cartan override supports rank <= 8");
  }
  const Eigen::MatrixXi standard = standard_cartan(t);
  std::vector<int> perm(static_cast<std::size_t>(t.rank));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int i = 0; i < t.rank && match; ++i) {
      for (int j = 0; j < t.rank && match; ++j) {
        match = cartan(i, j) == standard(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      }
    }
    if (match) return RootSystem(t, cartan, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorCode::InvalidInput,
              "Cartan matrix is not a relabeling of the standard " + t.name() + " matrix");
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational sum = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      // (sigma_i, sigma_j) = a_ij (sigma_j, sigma_j) / 2
      sum += Rational(a[i] * b[j] * cartan_(i, j)) * lengths_[static_cast<std::size_t>(j)] / 2;
    }
  }
  return sum;
}

int RootSystem::index_of(const Root& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) {
    throw Error(ErrorCode::InvalidInput, a.str() + " is not a root of " + type_.name());
  }
  return it->second;
}

Root RootSystem::simple_root(int i) const {
  std::vector<int> c(static_cast<std::size_t>(rank()), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Root(std::move(c));
}

// ---------------------------------------------------------------------------
// Combinatorics

void require_root(const RootSystem& rs, const Root& a, const char* what) {
  if (a.rank() != rs.rank() || !rs.contains(a)) {
    throw Error(ErrorCode::InvalidInput,
                std::string(what) + " " + a.str() + " is not a root of " + rs.type().name());
  }
}

int cartan_integer(const RootSystem& rs, const Root& a, const Root& b) {
  require_root(rs, a, "root");
  require_root(rs, b, "root");
  const Rational v = 2 * rs.inner(a, b) / rs.inner(b, b);
  if (v.denominator() != 1) {
    throw Error(ErrorCode::NumericFailure, "non-integral Cartan integer for " + a.str() + ", " + b.str());
  }
  return static_cast<int>(v.numerator());
}

RootString root_string(const RootSystem& rs, const Root& a, const Root& b) {
  require_root(rs, a, "string base");
  require_root(rs, b, "string direction");
  if (!linearly_independent(a, b)) {
    throw Error(ErrorCode::Precondition, "root string undefined for a = +-b (" + a.str() + ", " + b.str() + ")");
  }
  RootString s;
  while (rs.contains(a - (s.r + 1) * b)) ++s.r;
  while (rs.contains(a + (s.q + 1) * b)) ++s.q;
  for (int n = -s.r; n <= s.q; ++n) s.members.push_back(a + n * b);
  return s;
}

int GradingElement::value(const Root& a) const {
  int v = 0;
  for (int i = 0; i < a.rank(); ++i) v += coeffs[static_cast<std::size_t>(i)] * a[i];
  return v;
}

bool GradingElement::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int v) { return v == 0; });
}

namespace {

void require_grading(const RootSystem& rs, const GradingElement& e) {
  if (static_cast<int>(e.coeffs.size()) != rs.rank()) {
    throw Error(ErrorCode::InvalidInput, "grading element has " + std::to_string(e.coeffs.size()) +
                                             " coefficients, rank is " + std::to_string(rs.rank()));
  }
}

}  // namespace

std::map<int, std::vector<Root>> graded_pieces(const RootSystem& rs, const GradingElement& e) {
  require_grading(rs, e);
  std::map<int, std::vector<Root>> out;
  for (const Root& a : rs.roots()) out[e.value(a)].push_back(a);
  return out;
}

ParabolicData parabolic_data(const RootSystem& rs, const GradingElement& e) {
  require_grading(rs, e);
  ParabolicData p;
  for (const Root& a : rs.roots()) {
    if (e.value(a) >= 0) {
      p.roots.push_back(a);
    } else {
      ++p.dim;
    }
  }
  for (int i = 0; i < rs.rank(); ++i) {
    if (e.coeffs[static_cast<std::size_t>(i)] > 0) p.crossed.push_back(i + 1);
  }
  return p;
}

}  // namespace pconcave
