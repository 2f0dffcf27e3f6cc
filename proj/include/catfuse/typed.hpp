#ifndef CATFUSE_TYPED_HPP
#define CATFUSE_TYPED_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse {

/// Payload of a typed object. MEAS and PROB objects are both carried by the
/// underlying finite space: the family of (probability) measures on it.
using ObjectPayload = std::variant<SetObject, BoolObject, RelObject, PosetObject, TotalOrderObject, SemiringObject,
                                   FiniteMeasurableSpace, RandomVariable, StochasticProcess>;

class TypedObject {
public:
  TypedObject() = default;
  TypedObject(Category c, ObjectPayload p) : cat_(c), payload_(std::move(p)) { check_shape(); }

  static TypedObject set(SetObject s) { return {Category::set, std::move(s)}; }
  static TypedObject boolean(BoolObject b) { return {Category::boolean, b}; }
  static TypedObject bi_rel(RelObject r) { return {Category::bi_rel, std::move(r)}; }
  static TypedObject k_rel(RelObject r) { return {Category::k_rel, std::move(r)}; }
  static TypedObject n_rel(RelObject r) { return {Category::n_rel, std::move(r)}; }
  static TypedObject pordinal(PosetObject p) { return {Category::pordinal, std::move(p)}; }
  static TypedObject ordinal(TotalOrderObject o) { return {Category::ordinal, std::move(o)}; }
  static TypedObject interval(SemiringObject r) { return {Category::interval, std::move(r)}; }
  static TypedObject scalar(SemiringObject r) { return {Category::scalar, std::move(r)}; }
  static TypedObject meas(FiniteMeasurableSpace x) { return {Category::meas, std::move(x)}; }
  static TypedObject prob(FiniteMeasurableSpace x) { return {Category::prob, std::move(x)}; }
  static TypedObject rv(RandomVariable r) { return {Category::rv, std::move(r)}; }
  static TypedObject sto(StochasticProcess p) { return {Category::sto, std::move(p)}; }

  Category category() const noexcept { return cat_; }
  const ObjectPayload& payload() const noexcept { return payload_; }

  template <class T>
  const T& as() const {
    if (auto p = std::get_if<T>(&payload_)) return *p;
    throw InvalidObject("object of category " + std::string(category_name(cat_)) + " has a different payload");
  }

  friend bool operator==(const TypedObject&, const TypedObject&) = default;

private:
  void check_shape() const {
    auto need = [&](bool ok) {
      if (!ok)
        throw InvalidObject("payload does not match category " + std::string(category_name(cat_)));
    };
    switch (cat_) {
      case Category::set: need(std::holds_alternative<SetObject>(payload_)); break;
      case Category::boolean: need(std::holds_alternative<BoolObject>(payload_)); break;
      case Category::bi_rel:
        need(std::holds_alternative<RelObject>(payload_));
        if (std::get<RelObject>(payload_).arity() != 2) throw InvalidObject("BI-REL objects are binary relations");
        break;
      case Category::k_rel:
      case Category::n_rel: need(std::holds_alternative<RelObject>(payload_)); break;
      case Category::pordinal: need(std::holds_alternative<PosetObject>(payload_)); break;
      case Category::ordinal: need(std::holds_alternative<TotalOrderObject>(payload_)); break;
      case Category::interval: need(std::holds_alternative<SemiringObject>(payload_)); break;
      case Category::scalar:
        need(std::holds_alternative<SemiringObject>(payload_));
        if (!std::get<SemiringObject>(payload_).totally_ordered())
          throw InvalidObject("SCALAR objects are totally ordered semirings");
        break;
      case Category::meas:
      case Category::prob: need(std::holds_alternative<FiniteMeasurableSpace>(payload_)); break;
      case Category::rv: need(std::holds_alternative<RandomVariable>(payload_)); break;
      case Category::sto: need(std::holds_alternative<StochasticProcess>(payload_)); break;
    }
  }

  Category cat_ = Category::set;
  ObjectPayload payload_;
};

using MorphismPayload = std::variant<FiniteMap, SemiringHom, Kernel<Rational>, RvMorphism, StoMorphism>;

/// A morphism that passed check_morphism for its category.
class TypedMorphism {
public:
  Category category() const noexcept { return cat_; }
  const TypedObject& source() const noexcept { return source_; }
  const TypedObject& target() const noexcept { return target_; }
  const MorphismPayload& payload() const noexcept { return payload_; }

  template <class T>
  const T& as() const {
    if (auto p = std::get_if<T>(&payload_)) return *p;
    throw InvalidObject("morphism of category " + std::string(category_name(cat_)) + " has a different payload");
  }

private:
  friend TypedMorphism check_morphism(Category, MorphismPayload, const TypedObject&, const TypedObject&);
  Category cat_ = Category::set;
  TypedObject source_;
  TypedObject target_;
  MorphismPayload payload_;
};

/// Underlying relation of any relation-like object (k-REL, posets, orders).
inline const RelObject& relation_of(const TypedObject& a) {
  switch (a.category()) {
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel: return a.as<RelObject>();
    case Category::pordinal: return a.as<PosetObject>().relation();
    case Category::ordinal: return a.as<TotalOrderObject>().relation();
    default: throw InvalidObject(std::string(category_name(a.category())) + " objects carry no relation");
  }
}

/// Underlying set of SET and BOOL objects.
inline SetObject set_of(const TypedObject& a) {
  if (a.category() == Category::set) return a.as<SetObject>();
  if (a.category() == Category::boolean) return a.as<BoolObject>().as_set();
  throw InvalidObject(std::string(category_name(a.category())) + " objects are not plain sets");
}

/// Validates `f` as a morphism A -> B of category `cat`. Throws
/// ViolationError (or CommutationError for RV/STO) with a witness.
inline TypedMorphism check_morphism(Category cat, MorphismPayload f, const TypedObject& a, const TypedObject& b) {
  if (a.category() != cat || b.category() != cat)
    throw CompositionError("endpoints are not objects of " + std::string(category_name(cat)));
  auto need = [&]<class T>(std::type_identity<T>) -> const T& {
    if (auto p = std::get_if<T>(&f)) return *p;
    throw InvalidObject("morphism payload does not match category " + std::string(category_name(cat)));
  };
  switch (cat) {
    case Category::set:
    case Category::boolean: {
      const auto& m = need(std::type_identity<FiniteMap>{});
      check_total(m, set_of(a).size(), set_of(b).size());
      break;
    }
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel:
    case Category::pordinal:
    case Category::ordinal:
      check_relation_map(relation_of(a), relation_of(b), need(std::type_identity<FiniteMap>{}));
      break;
    case Category::interval:
    case Category::scalar:
      check_semiring_hom(a.as<SemiringObject>(), b.as<SemiringObject>(), need(std::type_identity<SemiringHom>{}));
      break;
    case Category::meas:
    case Category::prob: {
      const auto& k = need(std::type_identity<Kernel<Rational>>{});
      if (!(k.source() == a.as<FiniteMeasurableSpace>()) || !(k.target() == b.as<FiniteMeasurableSpace>()))
        throw ViolationError("kernel spaces do not match the endpoints", "-");
      if (cat == Category::prob)
        for (std::size_t x = 0; x < k.source().size(); ++x) {
          Rational row(0);
          for (std::size_t y = 0; y < k.target().size(); ++y) row += k(x, y);
          if (row != 1)
            throw ViolationError("PROB morphisms are stochastic kernels",
                                 "row " + k.source().points().at(x) + " sums to " + row.get_str());
        }
      break;
    }
    case Category::rv: {
      const auto& m = need(std::type_identity<RvMorphism>{});
      check_rv_morphism(m.omega_map, m.state_map, a.as<RandomVariable>(), b.as<RandomVariable>());
      break;
    }
    case Category::sto: {
      const auto& m = need(std::type_identity<StoMorphism>{});
      check_sto_morphism(m.omega_maps, m.state_maps, a.as<StochasticProcess>(), b.as<StochasticProcess>());
      break;
    }
  }
  TypedMorphism out;
  out.cat_ = cat;
  out.source_ = a;
  out.target_ = b;
  out.payload_ = std::move(f);
  return out;
}

inline TypedMorphism identity_morphism(const TypedObject& a) {
  switch (a.category()) {
    case Category::set:
    case Category::boolean: return check_morphism(a.category(), FiniteMap::identity(set_of(a).size()), a, a);
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel:
    case Category::pordinal:
    case Category::ordinal:
      return check_morphism(a.category(), FiniteMap::identity(relation_of(a).base().size()), a, a);
    case Category::interval:
    case Category::scalar: return check_morphism(a.category(), SemiringHom::identity(), a, a);
    case Category::meas:
    case Category::prob:
      return check_morphism(a.category(), Kernel<Rational>::identity(a.as<FiniteMeasurableSpace>()), a, a);
    case Category::rv: {
      const auto& r = a.as<RandomVariable>();
      return check_morphism(a.category(),
                            RvMorphism{FiniteMap::identity(r.omega().size()), FiniteMap::identity(r.state().size())},
                            a, a);
    }
    case Category::sto: {
      const auto& p = a.as<StochasticProcess>();
      StoMorphism m{std::vector<FiniteMap>(p.index().size(), FiniteMap::identity(p.omega().size())),
                    std::vector<FiniteMap>(p.index().size(), FiniteMap::identity(p.state().size()))};
      return check_morphism(a.category(), std::move(m), a, a);
    }
  }
  throw InvalidObject("unknown category");
}

/// g after f; the composite is re-validated.
inline TypedMorphism compose_morphism(const TypedMorphism& g, const TypedMorphism& f) {
  if (g.category() != f.category()) throw CompositionError("morphisms live in different categories");
  if (!(f.target() == g.source())) throw CompositionError("target of the first morphism is not the source of the second");
  MorphismPayload c = std::visit(
      [&](const auto& fp) -> MorphismPayload {
        using T = std::decay_t<decltype(fp)>;
        const auto& gp = std::get<T>(g.payload());
        if constexpr (std::is_same_v<T, Kernel<Rational>>) return compose_kernels(gp, fp);
        else return compose(gp, fp);
      },
      f.payload());
  return check_morphism(f.category(), std::move(c), f.source(), g.target());
}

/// Equality of morphisms: pointwise on the source window for semiring
/// homomorphisms, structural otherwise.
inline bool same_morphism(const TypedMorphism& f, const TypedMorphism& g) {
  if (f.category() != g.category() || !(f.source() == g.source()) || !(f.target() == g.target())) return false;
  if (f.payload().index() != g.payload().index()) return false;
  if (auto fp = std::get_if<SemiringHom>(&f.payload()))
    return same_on_window(f.source().as<SemiringObject>(), *fp, std::get<SemiringHom>(g.payload()));
  return std::visit(
      [&](const auto& fp) {
        using T = std::decay_t<decltype(fp)>;
        if constexpr (std::is_same_v<T, SemiringHom>) return false;
        else return fp == std::get<T>(g.payload());
      },
      f.payload());
}

struct ElementOptions {
  std::optional<Window> window;
  std::vector<Rational> grid;
  std::size_t bound = 1'000'000;
};

namespace detail {
inline std::string weights_label(const std::vector<Rational>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += w[i].get_str();
  }
  return s + ")";
}
}  // namespace detail

/// Elements of A: morphisms out of the category's terminal-like object.
inline std::vector<Element> elements(const TypedObject& a, const ElementOptions& opt = {}) {
  switch (a.category()) {
    case Category::set:
    case Category::boolean: return set_elements(set_of(a));
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel: return relation_elements(a.as<RelObject>());
    case Category::pordinal:
    case Category::ordinal: return order_elements(relation_of(a));
    case Category::interval:
    case Category::scalar: {
      auto r = a.as<SemiringObject>();
      if (opt.window) r = r.with_window(*opt.window);
      return semiring_elements(r);
    }
    case Category::meas:
    case Category::prob: {
      if (opt.grid.empty()) throw WindowRequired("the measure cone is uncountable; supply a weight grid (--grid)");
      const auto& x = a.as<FiniteMeasurableSpace>();
      std::vector<Element> out;
      auto emit = [&](const Measure<Rational>& m) {
        // Read the weights back through the picking kernel mu~(x) = mu(0, x).
        std::string w = detail::weights_label(element_of_kernel(element_kernel(m)).weights());
        out.push_back({w, "kernel {0} -> X with row " + w});
      };
      if (a.category() == Category::meas)
        for (const auto& m : meas_elements(x, opt.grid, opt.bound)) emit(m);
      else
        for (const auto& p : prob_elements(x, opt.grid, opt.bound)) emit(p.measure());
      return out;
    }
    case Category::rv: {
      const auto& r = a.as<RandomVariable>();
      std::vector<Element> out;
      for (const auto& e : rv_elements(r)) {
        std::string v = "(" + r.omega().points().at(e.omega) + "," + r.state().points().at(e.state) + ")";
        out.push_back({v, "X(" + r.omega().points().at(e.omega) + ") = " + r.state().points().at(e.state)});
      }
      return out;
    }
    case Category::sto: {
      const auto& p = a.as<StochasticProcess>();
      std::vector<Element> out;
      for (const auto& fam : sto_elements(p, opt.bound)) {
        std::string v = "{";
        for (std::size_t t = 0; t < fam.size(); ++t) {
          if (t) v += ",";
          v += p.index().at(t) + ":(" + p.omega().points().at(fam[t].omega) + "," +
               p.state().points().at(fam[t].state) + ")";
        }
        out.push_back({v + "}", "X_t(x_t) = s_t for every t"});
      }
      return out;
    }
  }
  return {};
}

}  // namespace catfuse

#endif  // CATFUSE_TYPED_HPP
