#ifndef CATFUSE_SHEAF_HPP
#define CATFUSE_SHEAF_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "catfuse/asc.hpp"
#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse {

// ---------------------------------------------------------------------------
// Bundles over finite index sets

/// (A, p, X): stalk space A projecting onto base X.
class Bundle {
public:
  Bundle(SetObject base, SetObject stalk_space, FiniteMap projection)
      : base_(std::move(base)), stalk_space_(std::move(stalk_space)), p_(std::move(projection)) {
    check_total(p_, stalk_space_.size(), base_.size());
  }

  const SetObject& base() const noexcept { return base_; }
  const SetObject& stalk_space() const noexcept { return stalk_space_; }
  const FiniteMap& projection() const noexcept { return p_; }

  /// p^{-1}(x) in stalk-space order.
  std::vector<std::size_t> stalk(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < p_.image.size(); ++a)
      if (p_(a) == x) out.push_back(a);
    return out;
  }

private:
  SetObject base_;
  SetObject stalk_space_;
  FiniteMap p_;
};

/// Every e : X -> A with p(e(x)) = x, one stalk element per base point.
inline std::vector<FiniteMap> bundle_sections(const Bundle& b, std::size_t bound = 1'000'000) {
  const std::size_t n = b.base().size();
  std::vector<std::vector<std::size_t>> stalks;
  double count = 1;
  for (std::size_t x = 0; x < n; ++x) {
    stalks.push_back(b.stalk(x));
    count *= static_cast<double>(stalks.back().size());
  }
  if (count == 0) return {};
  if (count > static_cast<double>(bound)) throw BoundError("too many bundle sections to enumerate");
  std::vector<FiniteMap> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    FiniteMap e;
    for (std::size_t x = 0; x < n; ++x) e.image.push_back(stalks[x][digits[x]]);
    out.push_back(std::move(e));
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == stalks[i - 1].size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Brute force over all |X|^|A| maps f : A -> X, keeping those with id . f = p.
inline std::vector<FiniteMap> bundle_morphisms_to_identity(const Bundle& b) {
  const std::size_t na = b.stalk_space().size(), nx = b.base().size();
  std::vector<FiniteMap> out;
  if (nx == 0 && na > 0) return out;
  std::vector<std::size_t> digits(na, 0);
  while (true) {
    FiniteMap f{digits};
    if (compose(FiniteMap::identity(nx), f) == b.projection()) out.push_back(f);
    std::size_t i = na;
    while (i > 0 && ++digits[i - 1] == nx) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// The identity bundle is terminal: exactly one morphism into it, namely p.
inline bool bundle_terminality_check(const Bundle& b) {
  auto ms = bundle_morphisms_to_identity(b);
  return ms.size() == 1 && ms.front() == b.projection();
}

// ---------------------------------------------------------------------------
// Sheaves of vector spaces over the face category

using FacePair = std::pair<Simplex, Simplex>;

/// Stalk per face and restriction per attachment (subface -> face).
/// Identity attachments may be omitted; they default to identity matrices.
template <Scalar S>
struct SheafOfSpaces {
  SimplicialComplex complex;
  std::map<Simplex, VectorSpace> stalks;
  std::map<FacePair, LinearMap<S>> restrictions;

  const VectorSpace& stalk(const Simplex& x) const {
    auto it = stalks.find(x);
    if (it == stalks.end()) throw IncompleteSheafError("no stalk on face " + x.to_string());
    return it->second;
  }

  LinearMap<S> restriction(const Simplex& x, const Simplex& y) const {
    auto it = restrictions.find({x, y});
    if (it != restrictions.end()) return it->second;
    if (x == y) return LinearMap<S>::identity(stalk(x));
    throw IncompleteSheafError("no restriction map for " + x.to_string() + " -> " + y.to_string());
  }
};

struct SheafViolation {
  std::string kind;  // "shape", "identity", "composition"
  std::string where;
  friend bool operator==(const SheafViolation&, const SheafViolation&) = default;
};

struct SheafReport {
  std::vector<SheafViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

namespace detail {
template <Scalar S>
bool matrices_equal(const Matrix<S>& a, const Matrix<S>& b, double tol) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)tol;
    return a == b;
  } else {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_difference(a, b) <= tol;
  }
}
}  // namespace detail

/// Checks shapes, identity restrictions, and that every 2-chain x -> y -> z
/// commutes with x -> z. Missing stalks or restrictions throw.
template <Scalar S>
SheafReport validate_sheaf(const SheafOfSpaces<S>& s, double tol = 0.0) {
  SheafReport report;
  const auto fc = face_category(s.complex);
  const auto& faces = fc.objects();
  for (const auto& f : faces) s.stalk(f);
  for (const auto& [key, map] : s.restrictions) {
    if (!s.complex.contains(key.first) || !s.complex.contains(key.second) || !key.first.is_subface_of(key.second))
      report.violations.push_back({"shape", key.first.to_string() + "->" + key.second.to_string() +
                                                " is not an attachment of the complex"});
  }
  for (const auto& a : fc.morphisms()) {
    const auto& x = faces[a.from];
    const auto& y = faces[a.to];
    auto r = s.restriction(x, y);
    if (!(r.domain() == s.stalk(x)) || !(r.codomain() == s.stalk(y))) {
      report.violations.push_back({"shape", x.to_string() + "->" + y.to_string()});
      continue;
    }
    if (a.is_identity() && !detail::matrices_equal(r.matrix(), Matrix<S>::identity(s.stalk(x).dim()), tol))
      report.violations.push_back({"identity", x.to_string() + "->" + x.to_string()});
  }
  if (!report.valid()) return report;
  for (const auto& c : attachment_chains(fc)) {
    const auto& x = faces[c.first.from];
    const auto& y = faces[c.first.to];
    const auto& z = faces[c.second.to];
    auto via = compose(s.restriction(y, z), s.restriction(x, y));
    if (!detail::matrices_equal(via.matrix(), s.restriction(x, z).matrix(), tol))
      report.violations.push_back(
          {"composition", x.to_string() + "->" + y.to_string() + "->" + z.to_string()});
  }
  return report;
}

/// One vector per face, in that face's stalk.
template <Scalar S>
using Assignment = std::map<Simplex, Vector<S>>;

struct SectionViolation {
  Simplex from;
  Simplex to;
  double distance = 0.0;
};

struct SectionReport {
  bool is_section = true;
  std::vector<SectionViolation> violations;  // sorted in face order of (from, to)
  double max_violation = 0.0;                // largest distance over all attachments
};

/// For each non-identity attachment x -> y, compares F(x->y)(a[x]) with a[y]
/// under the stalk pseudo-metric. A section iff every distance is <= tol.
template <Scalar S>
SectionReport is_global_section(const SheafOfSpaces<S>& s, const Assignment<S>& a, double tol = 0.0) {
  if (!(tol >= 0)) throw InvalidObject("tolerance must be nonnegative");
  for (const auto& f : s.complex.faces()) {
    auto it = a.find(f);
    if (it == a.end()) throw IncompleteAssignmentError("no value assigned to face " + f.to_string());
    if (!(it->second.space() == s.stalk(f)))
      throw SpaceError("value on face " + f.to_string() + " is not in its stalk");
  }
  SectionReport report;
  const auto fc = face_category(s.complex);
  for (const auto& att : fc.non_identity()) {
    const auto& x = fc.source(att);
    const auto& y = fc.target(att);
    const double d = pseudo_distance(apply(s.restriction(x, y), a.at(x)), a.at(y));
    report.max_violation = std::max(report.max_violation, d);
    if (d > tol) report.violations.push_back({x, y, d});
  }
  report.is_section = report.violations.empty();
  return report;
}

/// Every assignment with coordinates drawn from `grid` that satisfies the
/// section condition exactly. Brute force; intended as a test oracle.
template <Scalar S>
std::vector<Assignment<S>> enumerate_sections_over_grid(const SheafOfSpaces<S>& s, const std::vector<S>& grid,
                                                        std::size_t bound = 1'000'000) {
  const auto& faces = s.complex.faces();
  std::size_t total_dim = 0;
  for (const auto& f : faces) total_dim += s.stalk(f).dim();
  if (std::pow(static_cast<double>(grid.size()), static_cast<double>(total_dim)) > static_cast<double>(bound))
    throw BoundError("grid enumeration of " + std::to_string(grid.size()) + "^" + std::to_string(total_dim) +
                     " assignments exceeds bound");
  std::vector<Assignment<S>> out;
  if (grid.empty() && total_dim > 0) return out;
  const auto fc = face_category(s.complex);
  std::vector<std::size_t> digits(total_dim, 0);
  while (true) {
    Assignment<S> a;
    std::size_t k = 0;
    for (const auto& f : faces) {
      const auto& v = s.stalk(f);
      std::vector<S> c;
      for (std::size_t i = 0; i < v.dim(); ++i) c.push_back(grid[digits[k++]]);
      a.emplace(f, Vector<S>(v, std::move(c)));
    }
    bool ok = true;
    for (const auto& att : fc.non_identity()) {
      const auto& x = fc.source(att);
      const auto& y = fc.target(att);
      if (!(apply(s.restriction(x, y), a.at(x)) == a.at(y))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(a));
    std::size_t i = total_dim;
    while (i > 0 && ++digits[i - 1] == grid.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace catfuse

#endif  // CATFUSE_SHEAF_HPP
