#ifndef CATFUSE_LAWS_HPP
#define CATFUSE_LAWS_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace catfuse {

struct LawViolation {
  std::string law;  // "identity" or "composition"
  std::string witness;
};

struct LawReport {
  std::string functor;
  std::size_t identity_checks = 0;
  std::size_t composition_checks = 0;
  std::vector<LawViolation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void merge(const LawReport& other) {
    identity_checks += other.identity_checks;
    composition_checks += other.composition_checks;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Everything the law checker needs to know about a functor F : C -> D.
template <class Obj, class Mor, class TObj, class TMor>
struct FunctorHarness {
  std::string name;
  std::function<Mor(const Obj&)> identity;                      // id in C
  std::function<Mor(const Mor&, const Mor&)> compose;           // g after f in C
  std::function<bool(const Mor&, const Mor&)> composable;       // can g follow f?
  std::function<TObj(const Obj&)> on_object;                    // F on objects
  std::function<TMor(const Mor&)> on_morphism;                  // F on morphisms
  std::function<TMor(const TObj&)> target_identity;             // id in D
  std::function<TMor(const TMor&, const TMor&)> target_compose; // g after f in D
  std::function<bool(const TMor&, const TMor&)> target_equal;
  std::function<std::string(const Obj&)> describe_object = [](const Obj&) { return std::string("object"); };
  std::function<std::string(const Mor&)> describe_morphism = [](const Mor&) { return std::string("morphism"); };
};

/// F(id_A) == id_{F(A)} for each object, and F(g.f) == F(g).F(f) for each
/// listed pair (f, g). Exceptions raised while checking count as violations.
template <class Obj, class Mor, class TObj, class TMor>
LawReport check_functor_laws(const FunctorHarness<Obj, Mor, TObj, TMor>& h, const std::vector<Obj>& objects,
                             const std::vector<std::pair<Mor, Mor>>& pairs) {
  LawReport report;
  report.functor = h.name;
  for (const auto& a : objects) {
    ++report.identity_checks;
    try {
      if (!h.target_equal(h.on_morphism(h.identity(a)), h.target_identity(h.on_object(a))))
        report.violations.push_back({"identity", "F(id) != id on " + h.describe_object(a)});
    } catch (const std::exception& e) {
      report.violations.push_back({"identity", h.describe_object(a) + ": " + e.what()});
    }
  }
  for (const auto& [f, g] : pairs) {
    ++report.composition_checks;
    try {
      auto lhs = h.on_morphism(h.compose(g, f));
      auto rhs = h.target_compose(h.on_morphism(g), h.on_morphism(f));
      if (!h.target_equal(lhs, rhs))
        report.violations.push_back(
            {"composition", "F(g.f) != F(g).F(f) for f=" + h.describe_morphism(f) + ", g=" + h.describe_morphism(g)});
    } catch (const std::exception& e) {
      report.violations.push_back(
          {"composition", "f=" + h.describe_morphism(f) + ", g=" + h.describe_morphism(g) + ": " + e.what()});
    }
  }
  return report;
}

/// Same, checking composition on every composable pair drawn from `morphisms`.
template <class Obj, class Mor, class TObj, class TMor>
LawReport check_functor_laws(const FunctorHarness<Obj, Mor, TObj, TMor>& h, const std::vector<Obj>& objects,
                             const std::vector<Mor>& morphisms) {
  std::vector<std::pair<Mor, Mor>> pairs;
  for (const auto& f : morphisms)
    for (const auto& g : morphisms)
      if (h.composable(f, g)) pairs.emplace_back(f, g);
  return check_functor_laws(h, objects, pairs);
}

}  // namespace catfuse

#endif  // CATFUSE_LAWS_HPP
