#ifndef CATFUSE_HIERARCHY_HPP
#define CATFUSE_HIERARCHY_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/laws.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse {

enum class FunctorId {
  bool_set,
  pordinal_bi_rel,
  ordinal_pordinal,
  k_rel_n_rel,
  scalar_interval,
  f_so,
  f_ip,
  f_ns,
  f_pm,
  f_ms,
  f_rp,
  f_sp,
};

inline constexpr FunctorId kAllFunctors[] = {
    FunctorId::bool_set, FunctorId::pordinal_bi_rel, FunctorId::ordinal_pordinal, FunctorId::k_rel_n_rel,
    FunctorId::scalar_interval, FunctorId::f_so, FunctorId::f_ip, FunctorId::f_ns,
    FunctorId::f_pm, FunctorId::f_ms, FunctorId::f_rp, FunctorId::f_sp,
};

inline std::string_view functor_name(FunctorId id) {
  switch (id) {
    case FunctorId::bool_set: return "BOOL->SET";
    case FunctorId::pordinal_bi_rel: return "PORDINAL->BI-REL";
    case FunctorId::ordinal_pordinal: return "ORDINAL->PORDINAL";
    case FunctorId::k_rel_n_rel: return "k-REL->N-REL";
    case FunctorId::scalar_interval: return "SCALAR->INTERVAL";
    case FunctorId::f_so: return "F_SO";
    case FunctorId::f_ip: return "F_IP";
    case FunctorId::f_ns: return "F_NS";
    case FunctorId::f_pm: return "F_PM";
    case FunctorId::f_ms: return "F_MS";
    case FunctorId::f_rp: return "F_RP";
    case FunctorId::f_sp: return "F_SP";
  }
  return "?";
}

inline std::optional<FunctorId> parse_functor_id(std::string_view s) {
  for (auto id : kAllFunctors)
    if (functor_name(id) == s) return id;
  return std::nullopt;
}

inline bool is_inclusion(FunctorId id) {
  switch (id) {
    case FunctorId::bool_set:
    case FunctorId::pordinal_bi_rel:
    case FunctorId::ordinal_pordinal:
    case FunctorId::k_rel_n_rel:
    case FunctorId::scalar_interval: return true;
    default: return false;
  }
}

struct HierarchyConfig {
  /// Largest |S|^|T| for which F_SP materializes the product state space.
  std::size_t product_bound = 4096;
  /// F_MS represents a measure family by its nonnegative integer measures of
  /// total mass at most this value.
  long mass_bound = 2;
};

/// Nonnegative integer-weight measures on X with total mass <= bound,
/// lexicographic in the weight vector.
inline std::vector<Measure<Rational>> integer_measures(const FiniteMeasurableSpace& x, long bound) {
  std::vector<Measure<Rational>> out;
  std::vector<long> w(x.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i == w.size()) {
      std::vector<Rational> q;
      for (auto v : w) q.emplace_back(v);
      out.emplace_back(x, std::move(q));
      return;
    }
    for (long v = 0; v <= left; ++v) {
      w[i] = v;
      rec(i + 1, left - v);
    }
    w[i] = 0;
  };
  rec(0, bound);
  return out;
}

/// S^T with points labelled "(s_t1,s_t2,...)" in lexicographic order.
inline FiniteMeasurableSpace product_space(const FiniteMeasurableSpace& s, std::size_t t, std::size_t bound) {
  if (std::pow(static_cast<double>(s.size()), static_cast<double>(t)) > static_cast<double>(bound))
    throw BoundError("product state space |S|^|T| = " + std::to_string(s.size()) + "^" + std::to_string(t) +
                     " exceeds the configured bound " + std::to_string(bound));
  std::vector<std::string> labels;
  std::vector<std::size_t> digits(t, 0);
  if (s.size() == 0 && t > 0) return FiniteMeasurableSpace(SetObject(labels));
  while (true) {
    std::string l = "(";
    for (std::size_t k = 0; k < t; ++k) l += (k ? "," : "") + s.points().at(digits[k]);
    labels.push_back(l + ")");
    std::size_t i = t;
    while (i > 0 && ++digits[i - 1] == s.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return FiniteMeasurableSpace(SetObject(std::move(labels)));
}

/// One arrow of the type hierarchy. The object and morphism maps are plain
/// callables so tests can substitute corrupted ones.
struct HierarchyFunctor {
  FunctorId id;
  Category source;
  Category target;
  std::function<TypedObject(const TypedObject&)> object_map;
  std::function<MorphismPayload(const TypedMorphism&)> morphism_map;

  std::string name() const { return std::string(functor_name(id)); }
};

namespace detail {

inline SemiringObject windowed(const TypedObject& a) {
  const auto& r = a.as<SemiringObject>();
  if (!r.window()) throw WindowRequired("order extraction needs a finite window on the semiring");
  return r;
}

/// (window values, induced order pairs).
inline RelObject order_on_window(const SemiringObject& r) {
  const auto vals = r.enumerate();
  std::vector<std::string> labels;
  for (const auto& v : vals) labels.push_back(r.label(v));
  std::vector<Tuple> pairs;
  for (std::size_t i = 0; i < vals.size(); ++i)
    for (std::size_t j = 0; j < vals.size(); ++j)
      if (r.leq(vals[i], vals[j])) pairs.push_back({i, j});
  return RelObject::from_indices(SetObject(std::move(labels)), 2, pairs);
}

inline FiniteMap hom_on_window(const TypedMorphism& f) {
  const auto a = windowed(f.source());
  const auto b = windowed(f.target());
  const auto& h = f.as<SemiringHom>();
  const auto targets = b.enumerate();
  FiniteMap m;
  for (const auto& v : a.enumerate()) {
    auto img = h(v);
    auto it = std::lower_bound(targets.begin(), targets.end(), img);
    if (it == targets.end() || !(*it == img))
      throw BoundError("image " + b.label(img) + " of " + a.label(v) + " leaves the target window");
    m.image.push_back(static_cast<std::size_t>(it - targets.begin()));
  }
  return m;
}

inline std::vector<std::string> measure_labels(const std::vector<Measure<Rational>>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(weights_label(m.weights()));
  return out;
}

inline FiniteMap product_map(const std::vector<FiniteMap>& maps, std::size_t from, std::size_t to) {
  const std::size_t t = maps.size();
  std::size_t n = 1;
  for (std::size_t k = 0; k < t; ++k) n *= from;
  FiniteMap m;
  m.image.reserve(n);
  std::vector<std::size_t> digits(t, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t img = 0;
    for (std::size_t k = 0; k < t; ++k) img = img * to + maps[k](digits[k]);
    m.image.push_back(img);
    std::size_t i = t;
    while (i > 0 && ++digits[i - 1] == from) digits[--i] = 0;
  }
  return m;
}

}  // namespace detail

inline HierarchyFunctor make_functor(FunctorId id, HierarchyConfig cfg = {}) {
  HierarchyFunctor f{id, Category::set, Category::set, nullptr, nullptr};
  auto same_map = [](const TypedMorphism& m) { return m.payload(); };
  switch (id) {
    case FunctorId::bool_set:
      f.source = Category::boolean;
      f.target = Category::set;
      f.object_map = [](const TypedObject& a) { return TypedObject::set(a.as<BoolObject>().as_set()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::pordinal_bi_rel:
      f.source = Category::pordinal;
      f.target = Category::bi_rel;
      f.object_map = [](const TypedObject& a) { return TypedObject::bi_rel(a.as<PosetObject>().relation()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::ordinal_pordinal:
      f.source = Category::ordinal;
      f.target = Category::pordinal;
      f.object_map = [](const TypedObject& a) { return TypedObject::pordinal(a.as<TotalOrderObject>().as_poset()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::k_rel_n_rel:
      f.source = Category::k_rel;
      f.target = Category::n_rel;
      f.object_map = [](const TypedObject& a) { return TypedObject::n_rel(a.as<RelObject>()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::scalar_interval:
      f.source = Category::scalar;
      f.target = Category::interval;
      f.object_map = [](const TypedObject& a) { return TypedObject::interval(a.as<SemiringObject>()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::f_so:
      f.source = Category::scalar;
      f.target = Category::ordinal;
      f.object_map = [](const TypedObject& a) {
        return TypedObject::ordinal(TotalOrderObject(detail::order_on_window(detail::windowed(a))));
      };
      f.morphism_map = [](const TypedMorphism& m) -> MorphismPayload { return detail::hom_on_window(m); };
      break;
    case FunctorId::f_ip:
      f.source = Category::interval;
      f.target = Category::pordinal;
      f.object_map = [](const TypedObject& a) {
        return TypedObject::pordinal(PosetObject(detail::order_on_window(detail::windowed(a))));
      };
      f.morphism_map = [](const TypedMorphism& m) -> MorphismPayload { return detail::hom_on_window(m); };
      break;
    case FunctorId::f_ns:
      f.source = Category::n_rel;
      f.target = Category::set;
      f.object_map = [](const TypedObject& a) { return TypedObject::set(a.as<RelObject>().base()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::f_pm:
      f.source = Category::prob;
      f.target = Category::meas;
      f.object_map = [](const TypedObject& a) { return TypedObject::meas(a.as<FiniteMeasurableSpace>()); };
      f.morphism_map = same_map;
      break;
    case FunctorId::f_ms:
      f.source = Category::meas;
      f.target = Category::set;
      f.object_map = [cfg](const TypedObject& a) {
        return TypedObject::set(
            SetObject(detail::measure_labels(integer_measures(a.as<FiniteMeasurableSpace>(), cfg.mass_bound))));
      };
      f.morphism_map = [cfg](const TypedMorphism& m) -> MorphismPayload {
        const auto& k = m.as<Kernel<Rational>>();
        const auto from = integer_measures(k.source(), cfg.mass_bound);
        const auto to = integer_measures(k.target(), cfg.mass_bound);
        FiniteMap out;
        for (const auto& meas : from) {
          auto img = push_measure(k, meas);
          auto it = std::find(to.begin(), to.end(), img);
          if (it == to.end())
            throw BoundError("pushed measure " + detail::weights_label(img.weights()) +
                             " is outside the integer grid of mass <= " + std::to_string(cfg.mass_bound));
          out.image.push_back(static_cast<std::size_t>(it - to.begin()));
        }
        return out;
      };
      break;
    case FunctorId::f_rp:
      f.source = Category::rv;
      f.target = Category::prob;
      f.object_map = [](const TypedObject& a) { return TypedObject::prob(a.as<RandomVariable>().state()); };
      f.morphism_map = [](const TypedMorphism& m) -> MorphismPayload {
        const auto& y = m.source().as<RandomVariable>();
        const auto& z = m.target().as<RandomVariable>();
        return Kernel<Rational>::dirac(y.state(), z.state(), m.as<RvMorphism>().state_map);
      };
      break;
    case FunctorId::f_sp:
      f.source = Category::sto;
      f.target = Category::prob;
      f.object_map = [cfg](const TypedObject& a) {
        const auto& p = a.as<StochasticProcess>();
        return TypedObject::prob(product_space(p.state(), p.index().size(), cfg.product_bound));
      };
      f.morphism_map = [cfg](const TypedMorphism& m) -> MorphismPayload {
        const auto& y = m.source().as<StochasticProcess>();
        const auto& z = m.target().as<StochasticProcess>();
        const auto t = y.index().size();
        auto from = product_space(y.state(), t, cfg.product_bound);
        auto to = product_space(z.state(), t, cfg.product_bound);
        return Kernel<Rational>::dirac(
            from, to, detail::product_map(m.as<StoMorphism>().state_maps, y.state().size(), z.state().size()));
      };
      break;
  }
  return f;
}

inline TypedObject apply_object(const HierarchyFunctor& f, const TypedObject& a) {
  if (a.category() != f.source)
    throw FunctorError(f.name() + " expects a " + std::string(category_name(f.source)) + " object, got " +
                       std::string(category_name(a.category())));
  return f.object_map(a);
}

/// Image of a validated morphism, re-validated in the target category.
inline TypedMorphism apply_morphism(const HierarchyFunctor& f, const TypedMorphism& m) {
  if (m.category() != f.source)
    throw FunctorError(f.name() + " expects a " + std::string(category_name(f.source)) + " morphism, got " +
                       std::string(category_name(m.category())));
  auto src = apply_object(f, m.source());
  auto tgt = apply_object(f, m.target());
  auto payload = f.morphism_map(m);
  try {
    return check_morphism(f.target, std::move(payload), src, tgt);
  } catch (const ViolationError& e) {
    throw FunctorError(f.name() + " image is not a " + std::string(category_name(f.target)) +
                       " morphism: " + e.what() + " (witness " + e.witness() + ")");
  } catch (const CommutationError& e) {
    throw FunctorError(f.name() + " image is not a " + std::string(category_name(f.target)) +
                       " morphism: " + e.what() + " (witness " + e.omega() + ")");
  } catch (const CompositionError& e) {
    throw FunctorError(f.name() + " image has mismatched endpoints: " + e.what());
  }
}

namespace detail {
inline std::string map_label(const FiniteMap& f, const std::vector<std::string>& from,
                             const std::vector<std::string>& to) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    if (i) s += ",";
    s += (i < from.size() ? from[i] : std::to_string(i)) + "->" +
         (f(i) < to.size() ? to[f(i)] : std::to_string(f(i)));
  }
  return s + "}";
}

inline std::vector<std::string> carrier_labels(const TypedObject& a) {
  switch (a.category()) {
    case Category::set:
    case Category::boolean: return set_of(a).elements();
    case Category::meas:
    case Category::prob: return a.as<FiniteMeasurableSpace>().points().elements();
    case Category::interval:
    case Category::scalar:
    case Category::rv:
    case Category::sto: return {};
    default: return relation_of(a).base().elements();
  }
}
}  // namespace detail

/// Short human-readable rendering used in law-violation witnesses.
inline std::string describe(const TypedMorphism& m) {
  std::string cat(category_name(m.category()));
  return std::visit(
      [&](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FiniteMap>) {
          return cat + " " +
                 detail::map_label(p, detail::carrier_labels(m.source()), detail::carrier_labels(m.target()));
        } else if constexpr (std::is_same_v<T, SemiringHom>) {
          return cat + " hom " + p.name;
        } else if constexpr (std::is_same_v<T, Kernel<Rational>>) {
          std::string s = cat + " kernel [";
          for (std::size_t i = 0; i < p.entries().rows(); ++i) {
            s += i ? ";" : "";
            for (std::size_t j = 0; j < p.entries().cols(); ++j) s += (j ? " " : "") + p(i, j).get_str();
          }
          return s + "]";
        } else if constexpr (std::is_same_v<T, RvMorphism>) {
          const auto& y = m.source().as<RandomVariable>();
          const auto& z = m.target().as<RandomVariable>();
          return cat + " (" + detail::map_label(p.omega_map, y.omega().points().elements(), z.omega().points().elements()) +
                 ", " + detail::map_label(p.state_map, y.state().points().elements(), z.state().points().elements()) + ")";
        } else {
          return cat + " family of " + std::to_string(p.omega_maps.size()) + " map pairs";
        }
      },
      m.payload());
}

inline FunctorHarness<TypedObject, TypedMorphism, TypedObject, TypedMorphism> hierarchy_harness(
    const HierarchyFunctor& f) {
  FunctorHarness<TypedObject, TypedMorphism, TypedObject, TypedMorphism> h;
  h.name = f.name();
  h.identity = [](const TypedObject& a) { return identity_morphism(a); };
  h.compose = [](const TypedMorphism& g, const TypedMorphism& m) { return compose_morphism(g, m); };
  h.composable = [](const TypedMorphism& m, const TypedMorphism& g) {
    return m.category() == g.category() && m.target() == g.source();
  };
  h.on_object = [f](const TypedObject& a) { return apply_object(f, a); };
  h.on_morphism = [f](const TypedMorphism& m) { return apply_morphism(f, m); };
  h.target_identity = [](const TypedObject& a) { return identity_morphism(a); };
  h.target_compose = [](const TypedMorphism& g, const TypedMorphism& m) { return compose_morphism(g, m); };
  h.target_equal = [](const TypedMorphism& a, const TypedMorphism& b) { return same_morphism(a, b); };
  h.describe_object = [](const TypedObject& a) { return std::string(category_name(a.category())) + " object"; };
  h.describe_morphism = [](const TypedMorphism& m) { return describe(m); };
  return h;
}

inline LawReport verify_functor_laws(const HierarchyFunctor& f, const std::vector<TypedObject>& objects,
                                     const std::vector<TypedMorphism>& morphisms) {
  return check_functor_laws(hierarchy_harness(f), objects, morphisms);
}

inline LawReport verify_functor_laws(const HierarchyFunctor& f, const std::vector<TypedObject>& objects,
                                     const std::vector<std::pair<TypedMorphism, TypedMorphism>>& pairs) {
  return check_functor_laws(hierarchy_harness(f), objects, pairs);
}

}  // namespace catfuse

#endif  // CATFUSE_HIERARCHY_HPP
