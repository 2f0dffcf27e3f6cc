#ifndef CATFUSE_CATALOG_HPP
#define CATFUSE_CATALOG_HPP

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/hierarchy.hpp"
#include "catfuse/io.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/sheaf.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/vectorize.hpp"

namespace catfuse {

enum class ConstructKind { category, terminal, inclusion, functor, fvect, element };

inline std::string_view construct_kind_name(ConstructKind k) {
  switch (k) {
    case ConstructKind::category: return "category";
    case ConstructKind::terminal: return "terminal object";
    case ConstructKind::inclusion: return "inclusion functor";
    case ConstructKind::functor: return "functor";
    case ConstructKind::fvect: return "FVECT mapping";
    case ConstructKind::element: return "element construction";
  }
  return "?";
}

/// One documented construct, the code implementing it and a fixture that exercises it.
/// `run` receives the resolved fixture path and throws on any mismatch.
struct CatalogEntry {
  ConstructKind kind = ConstructKind::category;
  std::string construct;  // key used for coverage, e.g. "SET" or "F_SO"
  std::string anchor;     // what the construct is
  std::string module;
  std::string operation;
  std::string fixture;    // relative to the fixtures directory
  std::function<void(const std::filesystem::path&)> run;
};

struct CatalogFailure {
  std::string anchor;
  std::string reason;
};

struct CatalogReport {
  std::size_t entries = 0;
  std::size_t fixtures_run = 0;
  std::vector<std::string> uncovered;  // "kind: construct"
  std::vector<CatalogFailure> failures;
  bool ok() const noexcept { return uncovered.empty() && failures.empty(); }
};

namespace detail {

inline void expect(bool cond, const std::string& what) {
  if (!cond) throw Error("fixture check failed: " + what);
}

inline TypedObject load_object(const std::filesystem::path& p) {
  auto j = io::load_json(p);
  return io::parse_object(io::Node(j, p.filename().string()));
}

inline io::Samples load_samples(const std::filesystem::path& p) {
  auto j = io::load_json(p);
  return io::parse_samples(io::Node(j, p.filename().string()));
}

inline void expect_laws(const LawReport& r) {
  std::string msg;
  for (const auto& v : r.violations) msg += " [" + v.law + ": " + v.witness + "]";
  expect(r.ok(), r.functor + " violates functor laws:" + msg);
  expect(r.identity_checks > 0 && r.composition_checks > 0, r.functor + " had nothing to check");
}

/// Objects and morphisms of `samples` whose category is `c`.
inline std::pair<std::vector<TypedObject>, std::vector<TypedMorphism>> in_category(const io::Samples& s, Category c) {
  std::pair<std::vector<TypedObject>, std::vector<TypedMorphism>> out;
  for (const auto& o : s.objects)
    if (o.category() == c) out.first.push_back(o);
  for (const auto& m : s.morphisms)
    if (m.category() == c) out.second.push_back(m);
  return out;
}

/// Elements match the carrier and the identity on the object is a valid morphism.
inline void check_category_fixture(const std::filesystem::path& p, Category c, const ElementOptions& opt = {}) {
  auto a = load_object(p);
  expect(a.category() == c, "fixture object is " + std::string(category_name(a.category())));
  auto id = identity_morphism(a);
  expect(same_morphism(compose_morphism(id, id), id), "identity is idempotent");
  auto elems = elements(a, opt);
  if (c == Category::meas || c == Category::prob) return;
  std::set<std::string> seen;
  for (const auto& e : elems) seen.insert(e.value);
  expect(seen.size() == elems.size(), "elements are distinct");
  if (c != Category::interval && c != Category::scalar && c != Category::rv && c != Category::sto)
    expect(elems.size() == carrier_labels(a).size(), "one element per carrier point");
}

inline void check_functor_fixture(const std::filesystem::path& p, FunctorId id) {
  auto s = load_samples(p);
  auto f = make_functor(id);
  auto [objs, mors] = in_category(s, f.source);
  expect(!objs.empty(), "samples contain " + std::string(category_name(f.source)) + " objects");
  for (const auto& o : objs) expect(apply_object(f, o).category() == f.target, "object lands in target");
  expect_laws(verify_functor_laws(f, objs, mors));
}

inline void check_fvect_fixture(const std::filesystem::path& p, std::vector<Category> cats) {
  auto s = load_samples(p);
  for (auto c : cats) {
    auto [objs, mors] = in_category(s, c);
    expect(!objs.empty(), "samples contain " + std::string(category_name(c)) + " objects");
    expect_laws(verify_vectorization_laws(c, objs, mors));
  }
}

/// Exactly one morphism A -> T for every sample object A of the category.
inline void check_terminal_fixture(const std::filesystem::path& p, Category c, const TypedObject& terminal) {
  auto s = load_samples(p);
  auto [objs, mors] = in_category(s, c);
  expect(!objs.empty(), "samples contain objects");
  for (const auto& a : objs) {
    std::size_t count = 0;
    const bool rv = c == Category::rv;
    const auto from = rv ? a.as<RandomVariable>().omega().size() : io::map_carrier(a).size();
    const auto to = rv ? terminal.as<RandomVariable>().omega().size() : io::map_carrier(terminal).size();
    std::vector<std::size_t> digits(from, 0);
    while (true) {
      FiniteMap f{digits};
      try {
        if (rv) check_morphism(c, RvMorphism{f, FiniteMap{std::vector<std::size_t>(
                                                                    a.as<RandomVariable>().state().size(), 0)}},
                                              a, terminal);
        else check_morphism(c, f, a, terminal);
        ++count;
      } catch (const ViolationError&) {
      } catch (const CommutationError&) {
      }
      std::size_t i = from;
      while (i > 0 && ++digits[i - 1] == to) digits[--i] = 0;
      if (i == 0) break;
    }
    expect(count == 1, "exactly one morphism into the terminal object, found " + std::to_string(count));
  }
}

inline std::vector<Rational> thirds() { return {Rational(0), Rational(1, 3), Rational(2, 3), Rational(1)}; }

}  // namespace detail

/// Every construct the catalog must cover.
inline std::vector<std::pair<ConstructKind, std::string>> required_constructs() {
  std::vector<std::pair<ConstructKind, std::string>> out;
  for (auto c : kAllCategories) out.emplace_back(ConstructKind::category, std::string(category_name(c)));
  for (auto t : {"SET", "k-REL", "PORDINAL", "PROB", "RV", "STO"}) out.emplace_back(ConstructKind::terminal, t);
  for (auto f : kAllFunctors)
    out.emplace_back(is_inclusion(f) ? ConstructKind::inclusion : ConstructKind::functor,
                     std::string(functor_name(f)));
  for (auto v : {"SET", "BOOL", "k-REL", "PORDINAL", "ORDINAL", "MEAS/PROB", "INTERVAL", "SCALAR", "RV/STO"})
    out.emplace_back(ConstructKind::fvect, v);
  for (auto e : {"MEAS/kernel", "MEAS/grid", "PROB/kernel", "PROB/grid", "RV/graph", "RV/terminal", "STO/family",
                 "STO/single-time"})
    out.emplace_back(ConstructKind::element, e);
  return out;
}

inline std::vector<CatalogEntry> catalog() {
  using K = ConstructKind;
  using P = const std::filesystem::path&;
  std::vector<CatalogEntry> c;

  // Categories.
  auto cat = [&](Category k, std::string anchor, std::string fixture, ElementOptions opt = {}) {
    c.push_back({K::category, std::string(category_name(k)), std::move(anchor), "typesys / measure", "TypedObject, "
                 "check_morphism, elements", std::move(fixture),
                 [k, opt](P p) { detail::check_category_fixture(p, k, opt); }});
  };
  cat(Category::set, "finite sets with total functions", "set_abc.json");
  cat(Category::boolean, "subsets of {0,1} with functions between them", "bool_01.json");
  cat(Category::bi_rel, "sets with a binary relation; maps preserve related pairs", "birel_xy.json");
  cat(Category::k_rel, "sets with a k-ary relation; maps preserve related tuples", "krel_example.json");
  cat(Category::n_rel, "sets with a relation of any fixed arity", "nrel_example.json");
  cat(Category::pordinal, "partial orders with monotone maps", "poset_diamond.json");
  cat(Category::ordinal, "total orders with monotone maps", "chain3.json");
  cat(Category::interval, "partially ordered semirings of intervals under containment", "interval_window.json");
  cat(Category::scalar, "totally ordered semirings of scalars", "scalar_window.json");
  cat(Category::meas, "finite measurable spaces with nonnegative kernels", "meas_ab.json",
      ElementOptions{std::nullopt, {Rational(0), Rational(1)}, 1000});
  cat(Category::prob, "finite probability spaces with Markov kernels", "prob_abc.json",
      ElementOptions{std::nullopt, detail::thirds(), 1000});
  cat(Category::rv, "random variables with commuting pairs of maps", "rv_example.json");
  cat(Category::sto, "stochastic processes with per-time commuting pairs of maps", "sto_example.json");

  // Terminal objects.
  c.push_back({K::terminal, "SET", "the one-point set {0}", "typesys", "terminal_set", "samples_all.json",
               [](P p) { detail::check_terminal_fixture(p, Category::set, TypedObject::set(terminal_set())); }});
  c.push_back({K::terminal, "k-REL", "element source ({0}, empty relation); the full one-point relation is terminal",
               "typesys", "terminal_relation, relation_elements", "samples_all.json", [](P p) {
                 auto s = detail::load_samples(p);
                 for (const auto& a : s.objects) {
                   if (a.category() != Category::k_rel) continue;
                   const auto& r = a.as<RelObject>();
                   const auto n = r.base().size();
                   auto source = TypedObject::k_rel(terminal_relation(r.arity()));
                   for (std::size_t i = 0; i < n; ++i) check_morphism(Category::k_rel, FiniteMap{{i}}, source, a);
                   detail::expect(elements(a).size() == n, "one element per base point");
                   // Maps into the empty relation exist only from relation-free objects.
                   bool into_empty = true;
                   try {
                     check_morphism(Category::k_rel, FiniteMap{std::vector<std::size_t>(n, 0)}, a, source);
                   } catch (const ViolationError&) {
                     into_empty = false;
                   }
                   detail::expect(into_empty == r.tuples().empty(), "constant map into the empty relation");
                   auto full = TypedObject::k_rel(RelObject(terminal_set(), r.arity(),
                                                            {std::vector<std::string>(r.arity(), "0")}));
                   check_morphism(Category::k_rel, FiniteMap{std::vector<std::size_t>(n, 0)}, a, full);
                 }
               }});
  c.push_back({K::terminal, "PORDINAL", "one point ordered by 0 <= 0", "typesys", "terminal_poset",
               "samples_all.json", [](P p) {
                 detail::check_terminal_fixture(p, Category::pordinal, TypedObject::pordinal(terminal_poset()));
               }});
  c.push_back({K::terminal, "PROB", "the one-point probability space", "measure", "unit_space", "samples_all.json",
               [](P p) {
                 auto s = detail::load_samples(p);
                 for (const auto& a : s.objects)
                   if (a.category() == Category::prob) {
                     const auto& x = a.as<FiniteMeasurableSpace>();
                     Matrix<Rational> m(x.size(), 1);
                     for (std::size_t i = 0; i < x.size(); ++i) m(i, 0) = 1;
                     check_morphism(Category::prob, Kernel<Rational>(x, unit_space(), m, true), a,
                                    TypedObject::prob(unit_space()));
                   }
               }});
  c.push_back({K::terminal, "RV", "the constant random variable on one point", "measure", "terminal_rv",
               "samples_all.json",
               [](P p) { detail::check_terminal_fixture(p, Category::rv, TypedObject::rv(terminal_rv())); }});
  c.push_back({K::terminal, "STO", "the constant process on one point per time", "measure", "terminal_sto",
               "sto_example.json", [](P p) {
                 auto a = detail::load_object(p);
                 const auto& y = a.as<StochasticProcess>();
                 auto t = terminal_sto(y.index());
                 std::vector<FiniteMap> om, sm;
                 for (std::size_t k = 0; k < y.index().size(); ++k) {
                   om.push_back(FiniteMap{std::vector<std::size_t>(y.omega().size(), 0)});
                   sm.push_back(FiniteMap{std::vector<std::size_t>(y.state().size(), 0)});
                 }
                 check_morphism(Category::sto, StoMorphism{om, sm}, a, TypedObject::sto(t));
               }});

  // Hierarchy edges.
  const char* functor_anchor[] = {
      "a Boolean object is a set",
      "a partial order is a binary relation",
      "a total order is a partial order",
      "a k-ary relation is a relation of fixed arity",
      "scalars embed as degenerate intervals",
      "forget the semiring operations of scalars, keep the total order",
      "forget interval operations, keep the containment order",
      "forget relation structure, keep the underlying set",
      "probability spaces are measurable spaces",
      "a measurable space maps to its set of measures",
      "a random variable maps to its state space with its push-forward law",
      "a process maps to the product of its state spaces over time",
  };
  for (std::size_t i = 0; i < std::size(kAllFunctors); ++i) {
    auto id = kAllFunctors[i];
    c.push_back({is_inclusion(id) ? K::inclusion : K::functor, std::string(functor_name(id)), functor_anchor[i],
                 "hierarchy", "make_functor(" + std::string(functor_name(id)) + ")", "samples_all.json",
                 [id](P p) { detail::check_functor_fixture(p, id); }});
  }

  // Vectorization.
  auto fv = [&](std::string key, std::string anchor, std::string op, std::vector<Category> cats) {
    c.push_back({K::fvect, std::move(key), std::move(anchor), "vectorize", std::move(op), "samples_all.json",
                 [cats](P p) { detail::check_fvect_fixture(p, cats); }});
  };
  fv("SET", "free vector space on the set", "set_to_fvect", {Category::set});
  fv("BOOL", "free vector space on the Boolean object", "set_to_fvect", {Category::boolean});
  fv("k-REL", "span of indicator vectors over the diagonally extended relation", "krel_to_fvect",
     {Category::bi_rel, Category::k_rel, Category::n_rel});
  fv("PORDINAL", "indicator span of the order relation", "pordinal_to_fvect", {Category::pordinal});
  fv("ORDINAL", "indicator span of the total order via PORDINAL", "ordinal_to_fvect", {Category::ordinal});
  fv("MEAS/PROB", "signed measures; kernels act by transpose", "meas_to_fvect / prob_to_fvect",
     {Category::meas, Category::prob});
  fv("INTERVAL", "windowed containment order, then the relation construction", "semiring_to_fvect",
     {Category::interval});
  fv("SCALAR", "windowed total order, then the relation construction", "semiring_to_fvect", {Category::scalar});
  fv("RV/STO", "free vector space on the graph of the variable or process", "rv_to_fvect / sto_to_fvect",
     {Category::rv, Category::sto});

  // Element constructions for the measure family.
  auto grid_elements = [](Category cat_id, std::vector<Rational> grid, std::size_t expected) {
    return [cat_id, grid, expected](P p) {
      auto a = detail::load_object(p);
      detail::expect(a.category() == cat_id, "fixture category");
      auto es = elements(a, ElementOptions{std::nullopt, grid, 100000});
      detail::expect(es.size() == expected, "grid element count " + std::to_string(es.size()));
    };
  };
  auto kernel_elements = [](Category cat_id) {
    return [cat_id](P p) {
      auto a = detail::load_object(p);
      const auto& x = a.as<FiniteMeasurableSpace>();
      std::vector<Rational> w(x.size(), Rational(0));
      w.front() = Rational(1, 2);
      w.back() += Rational(1, 2);
      Measure<Rational> m(x, w);
      auto k = element_kernel(m);
      check_morphism(cat_id, k, cat_id == Category::prob ? TypedObject::prob(unit_space())
                                                         : TypedObject::meas(unit_space()), a);
      detail::expect(element_of_kernel(k) == m, "kernel row reads back the measure");
    };
  };
  c.push_back({K::element, "MEAS/kernel", "a measure is a kernel out of the one-point space", "measure",
               "element_kernel / element_of_kernel", "meas_ab.json", kernel_elements(Category::meas)});
  // {0,1}^2 on two points: 4 measures.
  c.push_back({K::element, "MEAS/grid", "measures with weights on a finite grid", "measure", "meas_elements",
               "meas_ab.json", grid_elements(Category::meas, {Rational(0), Rational(1)}, 4)});
  c.push_back({K::element, "PROB/kernel", "a distribution is a Markov kernel out of the one-point space", "measure",
               "element_kernel / element_of_kernel", "prob_abc.json", kernel_elements(Category::prob)});
  // Thirds summing to one on three points: C(5,2) = 10.
  c.push_back({K::element, "PROB/grid", "distributions with weights on a finite grid", "measure", "prob_elements",
               "prob_abc.json", grid_elements(Category::prob, detail::thirds(), 10)});
  c.push_back({K::element, "RV/graph", "readings (w, X(w)) of a random variable", "measure", "rv_elements",
               "rv_example.json", [](P p) {
                 auto a = detail::load_object(p);
                 const auto& r = a.as<RandomVariable>();
                 auto es = rv_elements(r);
                 detail::expect(es.size() == r.omega().size(), "one reading per outcome");
                 for (const auto& e : es) detail::expect(r.x_map()(e.omega) == e.state, "reading on the graph");
               }});
  c.push_back({K::element, "RV/terminal", "elements as morphisms out of the terminal random variable", "measure",
               "terminal_rv / check_rv_morphism", "rv_example.json", [](P p) {
                 auto a = detail::load_object(p);
                 const auto& r = a.as<RandomVariable>();
                 std::size_t count = 0;
                 for (std::size_t w = 0; w < r.omega().size(); ++w)
                   for (std::size_t s = 0; s < r.state().size(); ++s) try {
                       check_rv_morphism(FiniteMap{{w}}, FiniteMap{{s}}, terminal_rv(), r);
                       ++count;
                     } catch (const CommutationError&) {
                     }
                 detail::expect(count == rv_elements(r).size(), "morphisms from the terminal match readings");
               }});
  c.push_back({K::element, "STO/family", "one reading per time index", "measure", "sto_elements",
               "sto_example.json", [](P p) {
                 auto a = detail::load_object(p);
                 const auto& s = a.as<StochasticProcess>();
                 std::size_t expected = 1;
                 for (std::size_t t = 0; t < s.index().size(); ++t) expected *= s.omega().size();
                 detail::expect(sto_elements(s).size() == expected, "|Omega|^|T| families");
               }});
  c.push_back({K::element, "STO/single-time", "a process on one time index reads like a random variable",
               "measure", "StochasticProcess::at, sto_elements", "sto_example.json", [](P p) {
                 auto a = detail::load_object(p);
                 const auto& s = a.as<StochasticProcess>();
                 for (std::size_t t = 0; t < s.index().size(); ++t) {
                   auto rv = s.at(t);
                   StochasticProcess one(rv.omega(), rv.prob(), rv.state(), SetObject({s.index().at(t)}),
                                         {rv.x_map()});
                   detail::expect(sto_elements(one).size() == rv_elements(rv).size(), "one-time process");
                 }
               }});
  return c;
}

/// Coverage of required constructs plus a run of every entry's fixture.
inline CatalogReport check_catalog(const std::vector<CatalogEntry>& entries,
                                   const std::filesystem::path& fixtures_dir) {
  CatalogReport report;
  report.entries = entries.size();
  for (const auto& [kind, key] : required_constructs()) {
    bool found = std::any_of(entries.begin(), entries.end(),
                             [&](const CatalogEntry& e) { return e.kind == kind && e.construct == key; });
    if (!found) report.uncovered.push_back(std::string(construct_kind_name(kind)) + ": " + key);
  }
  for (const auto& e : entries) {
    const std::string anchor = std::string(construct_kind_name(e.kind)) + " " + e.construct + " (" + e.anchor + ")";
    const auto path = fixtures_dir / e.fixture;
    if (e.fixture.empty() || !std::filesystem::exists(path)) {
      report.failures.push_back({anchor, "missing fixture " + path.string()});
      continue;
    }
    if (!e.run) {
      report.failures.push_back({anchor, "no fixture check"});
      continue;
    }
    try {
      e.run(path);
      ++report.fixtures_run;
    } catch (const std::exception& ex) {
      report.failures.push_back({anchor, ex.what()});
    }
  }
  return report;
}

inline CatalogReport check_catalog(const std::filesystem::path& fixtures_dir) {
  return check_catalog(catalog(), fixtures_dir);
}

/// Markdown index: one table per construct kind.
inline std::string catalog_markdown(const std::vector<CatalogEntry>& entries) {
  std::ostringstream md;
  md << "# Construct catalog\n\n"
     << "Generated by `catfuse catalog --markdown`. Every row is checked by the test suite: the fixture\n"
     << "is loaded and run through the listed operation.\n";
  for (auto kind : {ConstructKind::category, ConstructKind::terminal, ConstructKind::inclusion,
                    ConstructKind::functor, ConstructKind::fvect, ConstructKind::element}) {
    const std::string heading(construct_kind_name(kind));
    md << "\n## " << (heading == "category" ? std::string("categories") : heading + "s") << "\n\n"
       << "| construct | meaning | module | operation | fixture |\n"
       << "|---|---|---|---|---|\n";
    for (const auto& e : entries)
      if (e.kind == kind)
        md << "| `" << e.construct << "` | " << e.anchor << " | " << e.module << " | `" << e.operation
           << "` | `fixtures/" << e.fixture << "` |\n";
  }
  // Read off make_functor, so the table cannot drift from the code.
  md << "\n## hierarchy edges\n\n"
     << "| functor | source | target | kind |\n"
     << "|---|---|---|---|\n";
  for (auto id : kAllFunctors) {
    const auto f = make_functor(id);
    md << "| `" << f.name() << "` | " << category_name(f.source) << " | " << category_name(f.target) << " | "
       << (is_inclusion(id) ? "inclusion" : "forgetful") << " |\n";
  }
  return md.str();
}

}  // namespace catfuse

#endif  // CATFUSE_CATALOG_HPP
