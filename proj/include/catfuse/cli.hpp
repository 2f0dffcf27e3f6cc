#ifndef CATFUSE_CLI_HPP
#define CATFUSE_CLI_HPP

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "catfuse/catalog.hpp"
#include "catfuse/error.hpp"
#include "catfuse/hierarchy.hpp"
#include "catfuse/io.hpp"
#include "catfuse/pipeline.hpp"
#include "catfuse/sheaf.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/vectorize.hpp"

namespace catfuse::cli {

/// Exit codes: 0 ok / consistent, 1 invalid or inconsistent content, 2 unusable input.
enum Exit : int { kOk = 0, kInconsistent = 1, kBadInput = 2 };

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// "lo:hi" or "lo:hi:denominator".
inline Window parse_window(const std::string& s) {
  Window w;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> w.lo >> c1 >> w.hi) || c1 != ':') throw ParseError("--window expects lo:hi, got '" + s + "'");
  if (in >> c2) {
    if (c2 != ':' || !(in >> w.denominator)) throw ParseError("--window expects lo:hi:denominator, got '" + s + "'");
  }
  return w;
}

/// Comma-separated rationals, e.g. "0,1/2,1".
inline std::vector<Rational> parse_grid(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(parse_rational(tok));
  if (out.empty()) throw ParseError("--grid expects comma-separated values");
  return out;
}

inline std::string format_double(double d) {
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(12) << d;
  return os.str();
}

// ---------------------------------------------------------------------------
// validate

/// Complex, sheaf, or scenario file. Prints closure/functoriality problems.
inline int cmd_validate(const std::filesystem::path& path, Streams io) {
  try {
    auto j = io::load_json(path);
    io::Node root(j, "");
    SimplicialComplex cx;
    std::optional<SheafOfSpaces<Rational>> sheaf;
    if (root.has("sensors")) {
      auto sc = io::parse_scenario(root, path.parent_path());
      sheaf = sc.sheaf;
      cx = sc.sheaf.complex;
    } else if (root.has("stalks")) {
      sheaf = io::parse_sheaf(root);
      cx = sheaf->complex;
    } else {
      cx = io::parse_complex(root);
    }
    io.out << "complex: ok (" << cx.size() << " faces, " << cx.maximal_faces().size() << " maximal)\n";
    if (!sheaf) return kOk;
    auto report = validate_sheaf(*sheaf);
    if (report.valid()) {
      io.out << "sheaf: ok (" << face_category(cx).non_identity().size() << " restriction maps)\n";
      return kOk;
    }
    for (const auto& v : report.violations) io.out << "violation: " << v.kind << " " << v.where << "\n";
    io.out << "sheaf: invalid (" << report.violations.size() << " violations)\n";
    return kInconsistent;
  } catch (const ClosureError& e) {
    io.out << "complex: invalid\n";
    for (const auto& m : e.missing()) io.out << "missing subface: " << Simplex(m).to_string() << "\n";
    return kInconsistent;
  } catch (const IncompleteSheafError& e) {
    io.out << "sheaf: incomplete: " << e.what() << "\n";
    return kInconsistent;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

// ---------------------------------------------------------------------------
// elements

struct ElementsOptions {
  std::optional<std::string> window;
  std::optional<std::string> grid;
};

inline int cmd_elements(const std::filesystem::path& path, const ElementsOptions& opt, Streams io) {
  try {
    auto j = io::load_json(path);
    auto a = io::parse_object(io::Node(j, ""));
    ElementOptions eo;
    if (opt.window) eo.window = parse_window(*opt.window);
    if (opt.grid) eo.grid = parse_grid(*opt.grid);
    auto es = elements(a, eo);
    for (const auto& e : es) io.out << e.value << "\t" << e.witness << "\n";
    io.out << "count: " << es.size() << "\n";
    return kOk;
  } catch (const WindowRequired& e) {
    io.err << "error: " << e.what() << "\n";
    io.err << "hint: pass --window lo:hi for semirings or --grid v1,v2,... for measure families\n";
    return kBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

// ---------------------------------------------------------------------------
// vectorize

inline io::json krel_image_to_json(const KRelImage& img) {
  io::json vectors = io::json::object();
  for (std::size_t i = 0; i < img.indicators.size(); ++i) {
    io::json col = io::json::array();
    for (const auto& c : img.indicators[i].coords()) col.push_back(io::rational_to_json(c));
    vectors[img.space.label(i)] = col;
  }
  io::json matrix = io::json::array();
  for (std::size_t r = 0; r < img.ambient.dim(); ++r) {
    io::json row = io::json::array();
    for (const auto& v : img.indicators) row.push_back(io::rational_to_json(v[r]));
    matrix.push_back(row);
  }
  return io::json{{"ambient", img.ambient.labels()},
                  {"basis", img.space.labels()},
                  {"vectors", vectors},
                  {"matrix", matrix},
                  {"rank", img.subspace.rank()}};
}

/// Emits the FVECT image of an object as JSON (schema in docs/schemas.md).
inline int cmd_vectorize(const std::filesystem::path& path, const std::optional<std::string>& window, Streams io) {
  try {
    auto j = io::load_json(path);
    auto a = io::parse_object(io::Node(j, ""));
    if (window && (a.category() == Category::interval || a.category() == Category::scalar))
      a = TypedObject(a.category(), a.as<SemiringObject>().with_window(parse_window(*window)));
    io::json out{{"category", std::string(category_name(a.category()))}};
    switch (a.category()) {
      case Category::bi_rel:
      case Category::k_rel:
      case Category::n_rel:
      case Category::pordinal:
      case Category::ordinal: out.update(krel_image_to_json(krel_to_fvect(relation_of(a)))); break;
      case Category::interval:
      case Category::scalar: out.update(krel_image_to_json(semiring_to_fvect(detail::windowed(a)))); break;
      default: {
        auto v = vectorize_object(a);
        out["basis"] = v.labels();
        out["dim"] = v.dim();
      }
    }
    io.out << out.dump(2) << "\n";
    return kOk;
  } catch (const WindowRequired& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

// ---------------------------------------------------------------------------
// functor-check

struct FunctorCheckOptions {
  HierarchyConfig config;
};

inline void print_law_report(const LawReport& r, std::ostream& out) {
  out << "functor: " << r.functor << "\n";
  out << "identity checks: " << r.identity_checks << "\n";
  out << "composition checks: " << r.composition_checks << "\n";
  for (const auto& v : r.violations) out << "violation: " << v.law << ": " << v.witness << "\n";
  out << (r.ok() ? "laws: ok\n" : "laws: FAILED\n");
}

/// Accepts a hierarchy functor id (F_RP, BOOL->SET, ...) or "<CATEGORY>->FVECT".
/// Only samples in the functor's source category are used.
inline int cmd_functor_check(const std::string& id, const std::filesystem::path& samples_path,
                             const FunctorCheckOptions& opt, Streams io) {
  try {
    auto j = io::load_json(samples_path);
    auto samples = io::parse_samples(io::Node(j, ""));
    LawReport report;
    Category source;
    if (auto fid = parse_functor_id(id)) {
      auto f = make_functor(*fid, opt.config);
      source = f.source;
      std::vector<TypedObject> objs;
      std::vector<TypedMorphism> mors;
      for (const auto& o : samples.objects)
        if (o.category() == source) objs.push_back(o);
      for (const auto& m : samples.morphisms)
        if (m.category() == source) mors.push_back(m);
      report = verify_functor_laws(f, objs, mors);
    } else if (id.size() > 7 && id.substr(id.size() - 7) == "->FVECT") {
      auto cat = parse_category(id.substr(0, id.size() - 7));
      if (!cat) throw ParseError("unknown category in functor id '" + id + "'");
      source = *cat;
      std::vector<TypedObject> objs;
      std::vector<TypedMorphism> mors;
      for (const auto& o : samples.objects)
        if (o.category() == source) objs.push_back(o);
      for (const auto& m : samples.morphisms)
        if (m.category() == source) mors.push_back(m);
      report = verify_vectorization_laws(source, objs, mors);
    } else {
      throw ParseError("unknown functor id '" + id + "'");
    }
    print_law_report(report, io.out);
    return report.ok() ? kOk : kInconsistent;
  } catch (const ViolationError& e) {
    io.err << "error: sample morphism is invalid: " << e.what() << "\n";
    return kBadInput;
  } catch (const CommutationError& e) {
    io.err << "error: sample morphism is invalid: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

// ---------------------------------------------------------------------------
// integrate / demo

inline void print_pipeline_result(const PipelineResult& r, double tol, bool as_json, std::ostream& out) {
  if (as_json) {
    io::json trace = io::json::array();
    for (const auto& t : r.trace) trace.push_back({{"sensor", t.sensor}, {"datum", t.datum}, {"cooked", t.cooked}});
    io::json j{{"trace", trace},
               {"assignment", io::assignment_to_json(r.assignment)},
               {"report", io::section_report_to_json(r.report, tol)}};
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& t : r.trace) out << "sensor " << t.sensor << ": " << t.datum << " -> " << t.cooked << "\n";
  out << "assignment:\n";
  for (const auto& [face, v] : r.assignment) out << "  " << face.to_string() << " " << to_string(v) << "\n";
  for (const auto& v : r.report.violations)
    out << "violation: " << v.from.to_string() << "->" << v.to.to_string() << " distance " << format_double(v.distance)
        << "\n";
  out << "section: " << (r.report.is_section ? "yes" : "no") << " (tolerance " << format_double(tol)
      << ", max violation " << format_double(r.report.max_violation) << ")\n";
}

struct IntegrateOptions {
  std::optional<double> tolerance;
  bool json = false;
};

inline int cmd_integrate(const std::filesystem::path& scenario_path, const IntegrateOptions& opt, Streams io) {
  try {
    auto j = io::load_json(scenario_path);
    auto sc = io::parse_scenario(io::Node(j, ""), scenario_path.parent_path());
    double tol = opt.tolerance.value_or(sc.tolerance);
    if (!(tol >= 0)) throw ParseError("--tolerance must be nonnegative");
    auto report = validate_sheaf(sc.sheaf);
    if (!report.valid()) {
      for (const auto& v : report.violations) io.err << "sheaf violation: " << v.kind << " " << v.where << "\n";
      return kBadInput;
    }
    auto r = run_pipeline(sc.readings, sc.sensors, sc.variables, sc.variable, sc.sheaf, tol);
    print_pipeline_result(r, tol, opt.json, io.out);
    return r.report.is_section ? kOk : kInconsistent;
  } catch (const ClosureError& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

struct DemoOptions {
  double score = 0.9;
  long violent = 3;
  long calm = 0;
  std::optional<std::vector<std::string>> article;
  double tolerance = 0.0;
  bool json = false;
};

/// The camera/newspaper example end to end with stubbed analytics.
inline int cmd_demo(const DemoOptions& opt, Streams io) {
  try {
    auto ex = build_L_example();
    std::vector<Reading> readings{
        {"C", ScorePayload{opt.score}, 1},
        {"E", TokensPayload{opt.article ? *opt.article : synthetic_article(opt.violent, opt.calm)}, 1},
    };
    auto r = run_pipeline(readings, ex.sensors, ex.variables, "L", ex.sheaf, opt.tolerance);
    print_pipeline_result(r, opt.tolerance, opt.json, io.out);
    return r.report.is_section ? kOk : kInconsistent;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

struct CatalogOptions {
  std::filesystem::path fixtures = "fixtures";
  bool markdown = false;
};

/// Checks coverage and runs every fixture; --markdown prints the index instead.
inline int cmd_catalog(const CatalogOptions& opt, Streams io) {
  const auto entries = catalog();
  if (opt.markdown) {
    io.out << catalog_markdown(entries);
    return kOk;
  }
  if (!std::filesystem::is_directory(opt.fixtures)) {
    io.err << "error: fixtures directory " << opt.fixtures.string() << " not found\n";
    return kBadInput;
  }
  auto r = check_catalog(entries, opt.fixtures);
  for (const auto& u : r.uncovered) io.out << "uncovered: " << u << "\n";
  for (const auto& f : r.failures) io.out << "FAIL " << f.anchor << ": " << f.reason << "\n";
  io.out << "catalog: " << r.entries << " entries, " << r.fixtures_run << " fixtures passed, "
         << (r.ok() ? "ok" : "incomplete") << "\n";
  return r.ok() ? kOk : kInconsistent;
}

}  // namespace catfuse::cli

#endif  // CATFUSE_CLI_HPP
