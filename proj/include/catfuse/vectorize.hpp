#ifndef CATFUSE_VECTORIZE_HPP
#define CATFUSE_VECTORIZE_HPP

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/hierarchy.hpp"
#include "catfuse/laws.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse {

// ---------------------------------------------------------------------------
// SET: the free vector space

/// R[S]: one basis label per element.
inline VectorSpace set_to_fvect(const SetObject& s) { return VectorSpace(s.elements()); }

/// s |-> 1*s.
inline Vector<Rational> element_vector(const VectorSpace& v, std::string_view label) {
  return Vector<Rational>::basis(v, label);
}

/// Entry (t, s) = 1 iff f(s) = t, so a vector's coefficients are summed over preimages.
inline LinearMap<Rational> set_map_to_linear(const SetObject& from, const SetObject& to, const FiniteMap& f) {
  check_total(f, from.size(), to.size());
  Matrix<Rational> m(to.size(), from.size());
  for (std::size_t s = 0; s < from.size(); ++s) m(f(s), s) = 1;
  return LinearMap<Rational>(set_to_fvect(from), set_to_fvect(to), std::move(m));
}

// ---------------------------------------------------------------------------
// k-REL: span of indicator vectors over the reflexively extended relation

/// R together with every diagonal tuple <s,...,s>. Input tuples come first in
/// input order, then the missing diagonals in base order.
struct RHat {
  RelObject relation;
  std::vector<Tuple> tuples;

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& t : tuples) out.push_back(relation.tuple_label(t));
    return out;
  }
};

inline RHat rhat(const RelObject& r) {
  RHat out{r, r.tuples()};
  for (std::size_t i = 0; i < r.base().size(); ++i) {
    Tuple diag(r.arity(), i);
    if (!r.contains(diag)) out.tuples.push_back(std::move(diag));
  }
  return out;
}

struct KRelImage {
  RHat extended;
  VectorSpace ambient;                      // R[R-hat]
  std::vector<Vector<Rational>> indicators; // one per base element, in base order
  Subspace<Rational> subspace;
  VectorSpace space;                        // abstract image, basis labelled by base elements
};

/// Indicator of R-hat(s_i) = {r in R-hat : s_i occurs in r} for every s_i.
inline KRelImage krel_to_fvect(const RelObject& r) {
  KRelImage img;
  img.extended = rhat(r);
  img.ambient = VectorSpace(img.extended.labels());
  for (std::size_t i = 0; i < r.base().size(); ++i) {
    std::vector<Rational> c(img.extended.tuples.size(), Rational(0));
    for (std::size_t j = 0; j < img.extended.tuples.size(); ++j)
      for (auto e : img.extended.tuples[j])
        if (e == i) c[j] = 1;
    img.indicators.emplace_back(img.ambient, std::move(c));
  }
  img.subspace = span(img.ambient, img.indicators);
  if (img.subspace.rank() != r.base().size())
    throw InvalidObject("indicator vectors are dependent; the diagonal extension should prevent this");
  img.space = VectorSpace(r.base().elements());
  return img;
}

/// Sends the indicator of R-hat_1(s_i) to the indicator of R-hat_2(f(s_i)),
/// written in the indicator bases of the two subspaces.
inline LinearMap<Rational> krel_map_to_linear(const RelObject& a, const RelObject& b, const FiniteMap& f) {
  check_relation_map(a, b, f);
  const auto ia = krel_to_fvect(a);
  const auto ib = krel_to_fvect(b);
  Matrix<Rational> m(ib.space.dim(), ia.space.dim());
  for (std::size_t i = 0; i < a.base().size(); ++i) {
    auto coords = ib.subspace.coordinates(ib.indicators[f(i)]);
    for (std::size_t k = 0; k < coords.size(); ++k) m(ib.subspace.basis_indices()[k], i) = coords[k];
  }
  return LinearMap<Rational>(ia.space, ib.space, std::move(m));
}

inline KRelImage pordinal_to_fvect(const PosetObject& p) { return krel_to_fvect(p.relation()); }
inline KRelImage ordinal_to_fvect(const TotalOrderObject& o) { return pordinal_to_fvect(o.as_poset()); }

/// Order-forgetting route for windowed semirings: F_IP (or F_SO), then the
/// binary-relation construction.
inline KRelImage semiring_to_fvect(const SemiringObject& r) {
  return krel_to_fvect(detail::order_on_window(r));
}

// ---------------------------------------------------------------------------
// MEAS / PROB: signed measures

/// R^X: signed measures on X, basis labelled by points.
inline VectorSpace meas_to_fvect(const FiniteMeasurableSpace& x) { return VectorSpace(x.points().elements()); }

/// PROB objects go through F_PM first, so they land in the same R^X.
inline VectorSpace prob_to_fvect(const FiniteMeasurableSpace& x) {
  auto meas = apply_object(make_functor(FunctorId::f_pm), TypedObject::prob(x));
  return meas_to_fvect(meas.as<FiniteMeasurableSpace>());
}

template <Scalar S>
Vector<S> measure_vector(const Measure<S>& m) {
  return Vector<S>(meas_to_fvect(m.space()), m.weights());
}

/// Entry (y, x) = mu(x, y): the transpose of the kernel matrix.
template <Scalar S>
LinearMap<S> kernel_to_linear(const Kernel<S>& k) {
  const auto& e = k.entries();
  Matrix<S> m(e.cols(), e.rows());
  for (std::size_t x = 0; x < e.rows(); ++x)
    for (std::size_t y = 0; y < e.cols(); ++y) m(y, x) = e(x, y);
  return LinearMap<S>(meas_to_fvect(k.source()), meas_to_fvect(k.target()), std::move(m));
}

// ---------------------------------------------------------------------------
// RV / STO: graph sets

/// Labels "(w,s)" of the graph {(w, X(w))}.
inline SetObject rv_graph(const RandomVariable& r) {
  std::vector<std::string> out;
  for (std::size_t w = 0; w < r.omega().size(); ++w)
    out.push_back("(" + r.omega().points().at(w) + "," + r.state().points().at(r.x_map()(w)) + ")");
  return SetObject(std::move(out));
}

/// Labels "(t,w,s)" of {(t, w, X_t(w))}, t-major.
inline SetObject sto_graph(const StochasticProcess& p) {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < p.index().size(); ++t)
    for (std::size_t w = 0; w < p.omega().size(); ++w)
      out.push_back("(" + p.index().at(t) + "," + p.omega().points().at(w) + "," +
                    p.state().points().at(p.x_maps()[t](w)) + ")");
  return SetObject(std::move(out));
}

inline VectorSpace rv_to_fvect(const RandomVariable& r) { return set_to_fvect(rv_graph(r)); }
inline VectorSpace sto_to_fvect(const StochasticProcess& p) { return set_to_fvect(sto_graph(p)); }

/// (w, X_Y(w)) |-> (phi1(w), X_Z(phi1(w))), which equals (phi1(w), phi2(X_Y(w))) by commutativity.
inline LinearMap<Rational> rv_map_to_linear(const RandomVariable& y, const RandomVariable& z, const RvMorphism& m) {
  check_rv_morphism(m.omega_map, m.state_map, y, z);
  return set_map_to_linear(rv_graph(y), rv_graph(z), m.omega_map);
}

inline LinearMap<Rational> sto_map_to_linear(const StochasticProcess& y, const StochasticProcess& z,
                                              const StoMorphism& m) {
  check_sto_morphism(m.omega_maps, m.state_maps, y, z);
  const std::size_t ny = y.omega().size(), nz = z.omega().size();
  FiniteMap f;
  for (std::size_t t = 0; t < y.index().size(); ++t)
    for (std::size_t w = 0; w < ny; ++w) f.image.push_back(t * nz + m.omega_maps[t](w));
  return set_map_to_linear(sto_graph(y), sto_graph(z), f);
}

// ---------------------------------------------------------------------------
// Dispatch over typed objects

/// The FVECT image of any typed object.
inline VectorSpace vectorize_object(const TypedObject& a) {
  switch (a.category()) {
    case Category::set:
    case Category::boolean: return set_to_fvect(set_of(a));
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel:
    case Category::pordinal:
    case Category::ordinal: return krel_to_fvect(relation_of(a)).space;
    case Category::interval:
    case Category::scalar: return semiring_to_fvect(detail::windowed(a)).space;
    case Category::meas: return meas_to_fvect(a.as<FiniteMeasurableSpace>());
    case Category::prob: return prob_to_fvect(a.as<FiniteMeasurableSpace>());
    case Category::rv: return rv_to_fvect(a.as<RandomVariable>());
    case Category::sto: return sto_to_fvect(a.as<StochasticProcess>());
  }
  throw InvalidObject("unknown category");
}

inline LinearMap<Rational> vectorize_morphism(const TypedMorphism& f) {
  switch (f.category()) {
    case Category::set:
    case Category::boolean: return set_map_to_linear(set_of(f.source()), set_of(f.target()), f.as<FiniteMap>());
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel:
    case Category::pordinal:
    case Category::ordinal:
      return krel_map_to_linear(relation_of(f.source()), relation_of(f.target()), f.as<FiniteMap>());
    case Category::interval:
    case Category::scalar:
      return krel_map_to_linear(detail::order_on_window(detail::windowed(f.source())),
                                detail::order_on_window(detail::windowed(f.target())), detail::hom_on_window(f));
    case Category::meas:
    case Category::prob: return kernel_to_linear(f.as<Kernel<Rational>>());
    case Category::rv:
      return rv_map_to_linear(f.source().as<RandomVariable>(), f.target().as<RandomVariable>(), f.as<RvMorphism>());
    case Category::sto:
      return sto_map_to_linear(f.source().as<StochasticProcess>(), f.target().as<StochasticProcess>(),
                               f.as<StoMorphism>());
  }
  throw InvalidObject("unknown category");
}

/// Law harness for the vectorization of one category.
inline FunctorHarness<TypedObject, TypedMorphism, VectorSpace, LinearMap<Rational>> vectorize_harness(Category c) {
  FunctorHarness<TypedObject, TypedMorphism, VectorSpace, LinearMap<Rational>> h;
  h.name = std::string(category_name(c)) + "->FVECT";
  h.identity = [](const TypedObject& a) { return identity_morphism(a); };
  h.compose = [](const TypedMorphism& g, const TypedMorphism& f) { return compose_morphism(g, f); };
  h.composable = [](const TypedMorphism& f, const TypedMorphism& g) {
    return f.category() == g.category() && f.target() == g.source();
  };
  h.on_object = [c](const TypedObject& a) {
    if (a.category() != c) throw FunctorError("object is not in " + std::string(category_name(c)));
    return vectorize_object(a);
  };
  h.on_morphism = [c](const TypedMorphism& f) {
    if (f.category() != c) throw FunctorError("morphism is not in " + std::string(category_name(c)));
    return vectorize_morphism(f);
  };
  h.target_identity = [](const VectorSpace& v) { return LinearMap<Rational>::identity(v); };
  h.target_compose = [](const LinearMap<Rational>& g, const LinearMap<Rational>& f) { return compose(g, f); };
  h.target_equal = [](const LinearMap<Rational>& a, const LinearMap<Rational>& b) { return a == b; };
  h.describe_object = [](const TypedObject& a) { return std::string(category_name(a.category())) + " object"; };
  h.describe_morphism = [](const TypedMorphism& f) { return describe(f); };
  return h;
}

inline LawReport verify_vectorization_laws(Category c, const std::vector<TypedObject>& objects,
                                           const std::vector<TypedMorphism>& morphisms) {
  return check_functor_laws(vectorize_harness(c), objects, morphisms);
}

}  // namespace catfuse

#endif  // CATFUSE_VECTORIZE_HPP
