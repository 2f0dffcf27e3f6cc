#ifndef CATFUSE_IO_HPP
#define CATFUSE_IO_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "catfuse/asc.hpp"
#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/pipeline.hpp"
#include "catfuse/rational.hpp"
#include "catfuse/sheaf.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; failures become ParseError naming the file.
inline json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

/// Field access with a JSON-pointer-like location for error messages.
class Node {
public:
  Node(const json& j, std::string where) : j_(&j), where_(std::move(where)) {}

  const json& raw() const noexcept { return *j_; }
  const std::string& where() const noexcept { return where_; }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node operator[](const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) fail("missing field '" + key + "'");
    return Node(*it, where_ + "/" + key);
  }

  Node operator[](std::size_t i) const {
    if (!j_->is_array() || i >= j_->size()) fail("index out of range");
    return Node((*j_)[i], where_ + "/" + std::to_string(i));
  }

  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], where_ + "/" + std::to_string(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> entries() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it) out.emplace_back(it.key(), Node(it.value(), where_ + "/" + it.key()));
    return out;
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long>();
  }

  double number() const {
    if (!j_->is_number()) fail("expected a number");
    return j_->get<double>();
  }

  /// Integers, "p/q" strings and decimal literals, all read exactly.
  Rational rational() const {
    try {
      if (j_->is_number_integer()) return Rational(j_->get<long>());
      if (j_->is_number_float()) return parse_rational(j_->dump());
      if (j_->is_string()) return parse_rational(j_->get<std::string>());
    } catch (const ParseError& e) {
      fail(e.what());
    }
    fail("expected a rational (integer or \"p/q\" string)");
  }

  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (const auto& n : items()) out.push_back(n.str());
    return out;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError((where_.empty() ? "/" : where_) + ": " + msg); }

private:
  const json* j_;
  std::string where_;
};

inline json rational_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

// ---------------------------------------------------------------------------
// Complexes and sheaves

inline Simplex parse_simplex(const Node& n) {
  try {
    return Simplex(n.strings());
  } catch (const InvalidObject& e) {
    n.fail(e.what());
  }
}

/// {"maximal_faces": [...]} is closed downward; {"faces": [...]} must already be closed.
inline SimplicialComplex parse_complex(const Node& n) {
  std::vector<Simplex> faces;
  if (n.has("maximal_faces")) {
    for (const auto& f : n["maximal_faces"].items()) faces.push_back(parse_simplex(f));
    return closure_of(faces);
  }
  for (const auto& f : n["faces"].items()) faces.push_back(parse_simplex(f));
  return validate_complex(faces);
}

inline json simplex_to_json(const Simplex& s) { return s.vertices(); }

inline json complex_to_json(const SimplicialComplex& x) {
  json faces = json::array();
  for (const auto& f : x.faces()) faces.push_back(simplex_to_json(f));
  return json{{"faces", faces}};
}

inline Metric parse_metric(const Node& n) {
  auto s = n.str();
  for (auto m : {Metric::euclidean, Metric::manhattan, Metric::chebyshev})
    if (metric_name(m) == s) return m;
  n.fail("unknown metric '" + s + "'");
}

inline Matrix<Rational> parse_matrix(const Node& n, std::size_t rows, std::size_t cols) {
  auto rs = n.items();
  if (rs.size() != rows) n.fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(rs.size()));
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto cs = rs[i].items();
    if (cs.size() != cols)
      rs[i].fail("expected " + std::to_string(cols) + " columns, got " + std::to_string(cs.size()));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cs[j].rational();
  }
  return m;
}

inline json matrix_to_json(const Matrix<Rational>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(rational_to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

/// Sheaf file: complex, per-face stalk bases, per-attachment matrices
/// (rows indexed by the containing face's basis).
inline SheafOfSpaces<Rational> parse_sheaf(const Node& n) {
  SheafOfSpaces<Rational> s;
  s.complex = parse_complex(n["complex"]);
  std::optional<Metric> metric;
  if (n.has("metric")) metric = parse_metric(n["metric"]);
  for (const auto& st : n["stalks"].items()) {
    auto face = parse_simplex(st["face"]);
    if (!s.complex.contains(face)) st["face"].fail("face " + face.to_string() + " is not in the complex");
    VectorSpace v;
    try {
      v = VectorSpace(st["basis"].strings(), st.has("metric") ? parse_metric(st["metric"])
                                                              : metric.value_or(Metric::euclidean));
    } catch (const InvalidObject& e) {
      st["basis"].fail(e.what());
    }
    if (!s.stalks.emplace(face, v).second) st.fail("duplicate stalk for " + face.to_string());
  }
  if (n.has("restrictions"))
    for (const auto& r : n["restrictions"].items()) {
      auto from = parse_simplex(r["from"]);
      auto to = parse_simplex(r["to"]);
      auto fi = s.stalks.find(from), ti = s.stalks.find(to);
      if (fi == s.stalks.end()) r["from"].fail("no stalk declared for " + from.to_string());
      if (ti == s.stalks.end()) r["to"].fail("no stalk declared for " + to.to_string());
      auto m = parse_matrix(r["matrix"], ti->second.dim(), fi->second.dim());
      if (!s.restrictions.emplace(FacePair{from, to}, LinearMap<Rational>(fi->second, ti->second, std::move(m))).second)
        r.fail("duplicate restriction " + from.to_string() + "->" + to.to_string());
    }
  return s;
}

inline json sheaf_to_json(const SheafOfSpaces<Rational>& s) {
  json stalks = json::array();
  for (const auto& f : s.complex.faces()) {
    auto it = s.stalks.find(f);
    if (it == s.stalks.end()) continue;
    json st{{"face", simplex_to_json(f)}, {"basis", it->second.labels()}};
    if (it->second.metric() != Metric::euclidean) st["metric"] = std::string(metric_name(it->second.metric()));
    stalks.push_back(st);
  }
  json restrictions = json::array();
  for (const auto& [key, map] : s.restrictions)
    restrictions.push_back(
        {{"from", simplex_to_json(key.first)}, {"to", simplex_to_json(key.second)}, {"matrix", matrix_to_json(map.matrix())}});
  return json{{"complex", complex_to_json(s.complex)}, {"stalks", stalks}, {"restrictions", restrictions}};
}

// ---------------------------------------------------------------------------
// Typed objects

inline SetObject parse_set(const Node& n) {
  try {
    return SetObject(n.strings());
  } catch (const InvalidObject& e) {
    n.fail(e.what());
  }
}

inline FiniteMap parse_map(const Node& n, const SetObject& from, const SetObject& to) {
  std::map<std::string, std::string> a;
  for (const auto& [k, v] : n.entries()) a[k] = v.str();
  try {
    return FiniteMap::from_labels(from, to, a);
  } catch (const InvalidObject& e) {
    n.fail(e.what());
  }
}

inline json map_to_json(const FiniteMap& f, const SetObject& from, const SetObject& to) {
  json out = json::object();
  for (std::size_t i = 0; i < f.image.size(); ++i) out[from.at(i)] = to.at(f(i));
  return out;
}

inline ProbabilityMeasure<Rational> parse_prob(const Node& n, const FiniteMeasurableSpace& omega) {
  std::vector<Rational> w;
  if (n.raw().is_object()) {
    for (const auto& p : omega.points().elements()) w.push_back(n[p].rational());
    if (n.entries().size() != omega.size()) n.fail("probability assigns points outside Omega");
  } else {
    for (const auto& x : n.items()) w.push_back(x.rational());
  }
  try {
    return ProbabilityMeasure<Rational>(omega, std::move(w));
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

inline json weights_to_json(const std::vector<Rational>& w) {
  json out = json::array();
  for (const auto& x : w) out.push_back(rational_to_json(x));
  return out;
}

inline TypedObject parse_object(const Node& n) {
  auto cat_name = n["category"].str();
  auto cat = parse_category(cat_name);
  if (!cat) n["category"].fail("unknown category '" + cat_name + "'");
  try {
    switch (*cat) {
      case Category::set: return TypedObject::set(parse_set(n["elements"]));
      case Category::boolean: return TypedObject::boolean(BoolObject::from_set(parse_set(n["elements"])));
      case Category::bi_rel:
      case Category::k_rel:
      case Category::n_rel: {
        auto base = parse_set(n["base"]);
        std::vector<std::vector<std::string>> tuples;
        for (const auto& t : n["tuples"].items()) tuples.push_back(t.strings());
        std::size_t arity = n.has("arity") ? static_cast<std::size_t>(n["arity"].integer())
                                           : (tuples.empty() ? 2 : tuples.front().size());
        return TypedObject(*cat, RelObject(base, arity, tuples));
      }
      case Category::pordinal:
      case Category::ordinal: {
        auto base = parse_set(n["base"]);
        std::vector<std::vector<std::string>> pairs;
        for (const auto& t : n["pairs"].items()) pairs.push_back(t.strings());
        if (*cat == Category::pordinal) return TypedObject::pordinal(PosetObject(base, pairs));
        return TypedObject::ordinal(TotalOrderObject(base, pairs));
      }
      case Category::interval:
      case Category::scalar: {
        auto kind_name = n["semiring"].str();
        auto kind = parse_semiring_kind(kind_name);
        if (!kind) n["semiring"].fail("unknown semiring '" + kind_name + "'");
        std::optional<Window> w;
        if (n.has("window")) {
          auto wn = n["window"];
          w = Window{wn["lo"].integer(), wn["hi"].integer(), wn.has("denominator") ? wn["denominator"].integer() : 1};
        }
        return TypedObject(*cat, SemiringObject(*kind, w));
      }
      case Category::meas:
      case Category::prob: return TypedObject(*cat, FiniteMeasurableSpace(parse_set(n["points"])));
      case Category::rv: {
        FiniteMeasurableSpace omega(parse_set(n["omega"]));
        FiniteMeasurableSpace state(parse_set(n["state"]));
        auto prob = n.has("prob") ? parse_prob(n["prob"], omega) : ProbabilityMeasure<Rational>::uniform(omega);
        return TypedObject::rv(RandomVariable(omega, prob, state, parse_map(n["x"], omega.points(), state.points())));
      }
      case Category::sto: {
        FiniteMeasurableSpace omega(parse_set(n["omega"]));
        FiniteMeasurableSpace state(parse_set(n["state"]));
        auto index = parse_set(n["index"]);
        auto prob = n.has("prob") ? parse_prob(n["prob"], omega) : ProbabilityMeasure<Rational>::uniform(omega);
        std::vector<FiniteMap> xs;
        for (const auto& t : index.elements()) xs.push_back(parse_map(n["x"][t], omega.points(), state.points()));
        return TypedObject::sto(StochasticProcess(omega, prob, state, index, std::move(xs)));
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
  n.fail("unsupported category");
}

inline json object_to_json(const TypedObject& a) {
  json out{{"category", std::string(category_name(a.category()))}};
  switch (a.category()) {
    case Category::set:
    case Category::boolean: out["elements"] = set_of(a).elements(); break;
    case Category::bi_rel:
    case Category::k_rel:
    case Category::n_rel: {
      const auto& r = a.as<RelObject>();
      out["base"] = r.base().elements();
      out["arity"] = r.arity();
      json ts = json::array();
      for (const auto& t : r.tuples()) {
        json row = json::array();
        for (auto i : t) row.push_back(r.base().at(i));
        ts.push_back(row);
      }
      out["tuples"] = ts;
      break;
    }
    case Category::pordinal:
    case Category::ordinal: {
      const auto& r = relation_of(a);
      out["base"] = r.base().elements();
      json ps = json::array();
      for (const auto& t : r.tuples()) ps.push_back({r.base().at(t[0]), r.base().at(t[1])});
      out["pairs"] = ps;
      break;
    }
    case Category::interval:
    case Category::scalar: {
      const auto& s = a.as<SemiringObject>();
      out["semiring"] = std::string(semiring_kind_name(s.kind()));
      if (s.window()) {
        out["window"] = {{"lo", s.window()->lo}, {"hi", s.window()->hi}};
        if (s.window()->denominator != 1) out["window"]["denominator"] = s.window()->denominator;
      }
      break;
    }
    case Category::meas:
    case Category::prob: out["points"] = a.as<FiniteMeasurableSpace>().points().elements(); break;
    case Category::rv: {
      const auto& r = a.as<RandomVariable>();
      out["omega"] = r.omega().points().elements();
      out["prob"] = weights_to_json(r.prob().weights());
      out["state"] = r.state().points().elements();
      out["x"] = map_to_json(r.x_map(), r.omega().points(), r.state().points());
      break;
    }
    case Category::sto: {
      const auto& p = a.as<StochasticProcess>();
      out["omega"] = p.omega().points().elements();
      out["prob"] = weights_to_json(p.prob().weights());
      out["state"] = p.state().points().elements();
      out["index"] = p.index().elements();
      json xs = json::object();
      for (std::size_t t = 0; t < p.index().size(); ++t)
        xs[p.index().at(t)] = map_to_json(p.x_maps()[t], p.omega().points(), p.state().points());
      out["x"] = xs;
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Morphism samples

/// Base set a FiniteMap payload is written over, for relation-like and set-like objects.
inline SetObject map_carrier(const TypedObject& a) {
  switch (a.category()) {
    case Category::set:
    case Category::boolean: return set_of(a);
    default: return relation_of(a).base();
  }
}

inline TypedMorphism parse_morphism(const Node& n, const std::vector<TypedObject>& objects) {
  auto pick = [&](const char* key) -> const TypedObject& {
    auto i = n[key].integer();
    if (i < 0 || static_cast<std::size_t>(i) >= objects.size()) n[key].fail("object index out of range");
    return objects[static_cast<std::size_t>(i)];
  };
  const auto& a = pick("source");
  const auto& b = pick("target");
  if (a.category() != b.category()) n.fail("source and target are in different categories");
  const auto cat = a.category();
  try {
    switch (cat) {
      case Category::interval:
      case Category::scalar: {
        auto name = n.has("semiring_hom") ? n["semiring_hom"].str() : std::string("identity");
        if (name != "identity" && name != "inclusion") n.fail("unknown semiring homomorphism '" + name + "'");
        auto h = SemiringHom::identity();
        h.name = name;
        return check_morphism(cat, h, a, b);
      }
      case Category::meas:
      case Category::prob: {
        const auto& x = a.as<FiniteMeasurableSpace>();
        const auto& y = b.as<FiniteMeasurableSpace>();
        auto m = parse_matrix(n["kernel"], x.size(), y.size());
        bool stochastic = cat == Category::prob;
        return check_morphism(cat, Kernel<Rational>(x, y, std::move(m), stochastic), a, b);
      }
      case Category::rv: {
        const auto& y = a.as<RandomVariable>();
        const auto& z = b.as<RandomVariable>();
        RvMorphism m{parse_map(n["omega_map"], y.omega().points(), z.omega().points()),
                     parse_map(n["state_map"], y.state().points(), z.state().points())};
        return check_morphism(cat, m, a, b);
      }
      case Category::sto: {
        const auto& y = a.as<StochasticProcess>();
        const auto& z = b.as<StochasticProcess>();
        StoMorphism m;
        for (const auto& t : y.index().elements()) {
          m.omega_maps.push_back(parse_map(n["omega_maps"][t], y.omega().points(), z.omega().points()));
          m.state_maps.push_back(parse_map(n["state_maps"][t], y.state().points(), z.state().points()));
        }
        return check_morphism(cat, m, a, b);
      }
      default: return check_morphism(cat, parse_map(n["map"], map_carrier(a), map_carrier(b)), a, b);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidObject& e) {
    n.fail(e.what());
  }
}

struct Samples {
  std::vector<TypedObject> objects;
  std::vector<TypedMorphism> morphisms;
};

/// {"objects": [...], "morphisms": [{"source": i, "target": j, ...}]}.
/// Morphisms that fail validation propagate their ViolationError.
inline Samples parse_samples(const Node& n) {
  Samples s;
  for (const auto& o : n["objects"].items()) s.objects.push_back(parse_object(o));
  if (n.has("morphisms"))
    for (const auto& m : n["morphisms"].items()) s.morphisms.push_back(parse_morphism(m, s.objects));
  return s;
}

// ---------------------------------------------------------------------------
// Readings and scenarios

inline Reading parse_reading(const Node& n) {
  Reading r;
  r.sensor = n["sensor"].str();
  r.timestamp = n.has("timestamp") ? n["timestamp"].integer() : 0;
  int kinds = n.has("score") + n.has("tokens") + n.has("number");
  if (kinds != 1) n.fail("a reading carries exactly one of score, tokens, number");
  if (n.has("score")) r.payload = ScorePayload{n["score"].number()};
  else if (n.has("tokens")) r.payload = TokensPayload{n["tokens"].strings()};
  else r.payload = NumberPayload{n["number"].number()};
  return r;
}

inline std::vector<Reading> parse_readings(const Node& n) {
  std::vector<Reading> out;
  for (const auto& r : n.items()) out.push_back(parse_reading(r));
  return out;
}

inline json reading_to_json(const Reading& r) {
  json out{{"sensor", r.sensor}};
  if (auto s = std::get_if<ScorePayload>(&r.payload)) out["score"] = s->score;
  else if (auto t = std::get_if<TokensPayload>(&r.payload)) out["tokens"] = t->tokens;
  else out["number"] = std::get<NumberPayload>(r.payload).value;
  out["timestamp"] = r.timestamp;
  return out;
}

inline PayloadKind parse_payload_kind(const Node& n) {
  auto s = n.str();
  for (auto k : {PayloadKind::score, PayloadKind::tokens, PayloadKind::number})
    if (payload_kind_name(k) == s) return k;
  n.fail("unknown raw format '" + s + "'");
}

inline SensorSpec parse_sensor(const Node& n) {
  SensorSpec s;
  s.id = n["id"].str();
  s.raw_format = parse_payload_kind(n["raw_format"]);
  for (const auto& [var, a] : n["analytics"].entries()) {
    auto kind = a["kind"].str();
    if (kind == "classifier-stub") {
      s.analytics[var] = ClassifierStub{};
    } else if (kind == "bag-of-words") {
      auto v = a["violent"].strings();
      auto c = a["calm"].strings();
      s.analytics[var] = BagOfWords{{v.begin(), v.end()}, {c.begin(), c.end()}};
    } else {
      a["kind"].fail("unknown analytic '" + kind + "'");
    }
  }
  return s;
}

inline VariableSpec parse_variable(const Node& n) {
  VariableSpec v;
  v.id = n["id"].str();
  if (n.has("native_category")) {
    auto c = parse_category(n["native_category"].str());
    if (!c) n["native_category"].fail("unknown category");
    v.native_category = *c;
  }
  if (n.has("cooked_object")) v.cooked_object = parse_object(n["cooked_object"]);
  if (v.cooked_object.category() != v.native_category)
    n.fail("cooked object is not an object of the native category");
  for (const auto& [sensor, c] : n["cooking"].entries()) {
    auto k = c.str();
    if (k == cooking_name(CookingKind::threshold_score)) v.cooking[sensor] = CookingKind::threshold_score;
    else if (k == cooking_name(CookingKind::compare_counts)) v.cooking[sensor] = CookingKind::compare_counts;
    else c.fail("unknown cooking map '" + k + "'");
  }
  return v;
}

struct Scenario {
  SheafOfSpaces<Rational> sheaf;
  std::vector<SensorSpec> sensors;
  std::vector<VariableSpec> variables;
  std::vector<Reading> readings;
  std::string variable;
  double tolerance = 0.0;
};

/// A field that is either inline JSON or a path (relative to `dir`) to a JSON file.
inline json resolve(const Node& n, const std::filesystem::path& dir) {
  if (n.raw().is_string()) return load_json(dir / n.str());
  return n.raw();
}

inline Scenario parse_scenario(const Node& n, const std::filesystem::path& dir) {
  Scenario s;
  auto sheaf_json = resolve(n["sheaf"], dir);
  s.sheaf = parse_sheaf(Node(sheaf_json, n["sheaf"].raw().is_string() ? n["sheaf"].str() : n.where() + "/sheaf"));
  if (n.has("complex")) {
    auto cx_json = resolve(n["complex"], dir);
    auto cx = parse_complex(Node(cx_json, n.where() + "/complex"));
    if (!(cx == s.sheaf.complex)) n["complex"].fail("scenario complex differs from the sheaf's complex");
  }
  for (const auto& x : n["sensors"].items()) s.sensors.push_back(parse_sensor(x));
  for (const auto& x : n["variables"].items()) s.variables.push_back(parse_variable(x));
  if (n.has("readings")) {
    auto rj = resolve(n["readings"], dir);
    s.readings = parse_readings(Node(rj, n["readings"].raw().is_string() ? n["readings"].str() : n.where() + "/readings"));
  }
  s.variable = n.has("variable") ? n["variable"].str() : (s.variables.empty() ? "" : s.variables.front().id);
  if (n.has("tolerance")) {
    s.tolerance = n["tolerance"].number();
    if (!(s.tolerance >= 0)) n["tolerance"].fail("tolerance must be nonnegative");
  }
  return s;
}

// ---------------------------------------------------------------------------
// Outputs

inline json vector_to_json(const Vector<Rational>& v) {
  json out = json::object();
  for (std::size_t i = 0; i < v.coords().size(); ++i) out[v.space().label(i)] = rational_to_json(v[i]);
  return out;
}

inline json assignment_to_json(const Assignment<Rational>& a) {
  json out = json::array();
  for (const auto& [face, v] : a) out.push_back({{"face", simplex_to_json(face)}, {"value", vector_to_json(v)}});
  return out;
}

inline json section_report_to_json(const SectionReport& r, double tol) {
  json vs = json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"from", simplex_to_json(v.from)}, {"to", simplex_to_json(v.to)}, {"distance", v.distance}});
  return json{{"is_section", r.is_section}, {"tolerance", tol}, {"max_violation", r.max_violation}, {"violations", vs}};
}

}  // namespace catfuse::io

#endif  // CATFUSE_IO_HPP
