#ifndef CATFUSE_ASC_HPP
#define CATFUSE_ASC_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"

namespace catfuse {

/// A nonempty face. Vertices are opaque strings kept sorted and distinct.
class Simplex {
public:
  Simplex() = default;
  Simplex(std::initializer_list<std::string> vs) : Simplex(std::vector<std::string>(vs)) {}
  explicit Simplex(std::vector<std::string> vs) : vertices_(std::move(vs)) {
    if (vertices_.empty()) throw InvalidObject("the empty simplex is not a face");
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end()) throw InvalidObject("repeated vertex '" + *dup + "' in simplex");
  }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }

  bool is_subface_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
  }

  /// Face order: lower dimension first, then lexicographic on vertices.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) out += ",";
      out += vertices_[i];
    }
    return out + "]";
  }

private:
  std::vector<std::string> vertices_;
};

/// Every nonempty proper subset of a face.
inline std::vector<Simplex> proper_subfaces(const Simplex& s) {
  std::vector<Simplex> out;
  const auto& v = s.vertices();
  const std::size_t n = v.size();
  if (n > 20) throw BoundError("face too large to enumerate subfaces");
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    std::vector<std::string> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) sub.push_back(v[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

/// Downward-closed face set, stored in face order.
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  const std::vector<Simplex>& faces() const noexcept { return faces_; }
  std::size_t size() const noexcept { return faces_.size(); }
  bool empty() const noexcept { return faces_.empty(); }

  bool contains(const Simplex& s) const { return std::binary_search(faces_.begin(), faces_.end(), s); }

  std::optional<std::size_t> index_of(const Simplex& s) const {
    auto it = std::lower_bound(faces_.begin(), faces_.end(), s);
    if (it == faces_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - faces_.begin());
  }

  std::vector<std::string> vertices() const {
    std::vector<std::string> out;
    for (const auto& f : faces_)
      if (f.size() == 1) out.push_back(f.vertices().front());
    return out;
  }

  /// Faces not contained in any other face.
  std::vector<Simplex> maximal_faces() const {
    std::vector<Simplex> out;
    for (const auto& f : faces_) {
      bool maximal = std::none_of(faces_.begin(), faces_.end(),
                                  [&](const Simplex& g) { return !(g == f) && f.is_subface_of(g); });
      if (maximal) out.push_back(f);
    }
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
  friend SimplicialComplex validate_complex(const std::vector<Simplex>& faces);
  std::vector<Simplex> faces_;
};

/// Accepts the face set iff it is downward closed; otherwise throws a
/// ClosureError naming every missing subface.
inline SimplicialComplex validate_complex(const std::vector<Simplex>& faces) {
  std::set<Simplex> present(faces.begin(), faces.end());
  std::set<Simplex> missing;
  for (const auto& f : present)
    for (auto& sub : proper_subfaces(f))
      if (!present.count(sub)) missing.insert(std::move(sub));
  if (!missing.empty()) {
    std::vector<std::vector<std::string>> names;
    for (const auto& m : missing) names.push_back(m.vertices());
    throw ClosureError(std::move(names));
  }
  SimplicialComplex x;
  x.faces_.assign(present.begin(), present.end());
  return x;
}

/// Downward closure of a list of (maximal) faces.
inline SimplicialComplex closure_of(const std::vector<Simplex>& maximal) {
  std::set<Simplex> all;
  for (const auto& f : maximal) {
    all.insert(f);
    for (auto& sub : proper_subfaces(f)) all.insert(std::move(sub));
  }
  return validate_complex(std::vector<Simplex>(all.begin(), all.end()));
}

/// Attachment x -> y between face indices; identity when from == to.
struct Attachment {
  std::size_t from = 0;
  std::size_t to = 0;
  bool is_identity() const noexcept { return from == to; }
  friend auto operator<=>(const Attachment&, const Attachment&) = default;
};

/// x -> y -> z together with the composite x -> z.
struct AttachmentChain {
  Attachment first;
  Attachment second;
  Attachment composite;
};

/// FACE(X): faces as objects, one morphism x -> y whenever x is a subface of y.
class FaceCategory {
public:
  const std::vector<Simplex>& objects() const noexcept { return objects_; }
  /// All morphisms including identities, sorted by (from, to) in face order.
  const std::vector<Attachment>& morphisms() const noexcept { return morphisms_; }

  std::vector<Attachment> non_identity() const {
    std::vector<Attachment> out;
    for (const auto& a : morphisms_)
      if (!a.is_identity()) out.push_back(a);
    return out;
  }

  std::optional<Attachment> hom(std::size_t x, std::size_t y) const {
    auto it = std::lower_bound(morphisms_.begin(), morphisms_.end(), Attachment{x, y});
    if (it == morphisms_.end() || it->from != x || it->to != y) return std::nullopt;
    return *it;
  }

  const Simplex& source(const Attachment& a) const { return objects_.at(a.from); }
  const Simplex& target(const Attachment& a) const { return objects_.at(a.to); }

private:
  friend FaceCategory face_category(const SimplicialComplex& x);
  std::vector<Simplex> objects_;
  std::vector<Attachment> morphisms_;
};

inline FaceCategory face_category(const SimplicialComplex& x) {
  FaceCategory fc;
  fc.objects_ = x.faces();
  for (std::size_t i = 0; i < fc.objects_.size(); ++i)
    for (std::size_t j = 0; j < fc.objects_.size(); ++j)
      if (fc.objects_[i].is_subface_of(fc.objects_[j])) fc.morphisms_.push_back({i, j});
  return fc;
}

/// Every composable pair with its composite. By default only pairs of
/// non-identity attachments, which is what functoriality checks need.
inline std::vector<AttachmentChain> attachment_chains(const FaceCategory& fc, bool include_identities = false) {
  std::vector<AttachmentChain> out;
  for (const auto& f : fc.morphisms()) {
    if (!include_identities && f.is_identity()) continue;
    for (const auto& g : fc.morphisms()) {
      if (g.from != f.to) continue;
      if (!include_identities && g.is_identity()) continue;
      auto c = fc.hom(f.from, g.to);
      if (!c) throw CompositionError("face category is not closed under composition");
      out.push_back({f, g, *c});
    }
  }
  return out;
}

}  // namespace catfuse

#endif  // CATFUSE_ASC_HPP
