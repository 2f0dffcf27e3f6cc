#ifndef CATFUSE_PIPELINE_HPP
#define CATFUSE_PIPELINE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "catfuse/asc.hpp"
#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/sheaf.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/vectorize.hpp"

namespace catfuse {

// ---------------------------------------------------------------------------
// Raw readings

/// Output of an image classifier stub: the confidence s that the image shows violence.
struct ScorePayload {
  double score = 0.0;
};
/// A tokenized article.
struct TokensPayload {
  std::vector<std::string> tokens;
};
struct NumberPayload {
  double value = 0.0;
};

using Payload = std::variant<ScorePayload, TokensPayload, NumberPayload>;

enum class PayloadKind { score, tokens, number };

inline std::string_view payload_kind_name(PayloadKind k) {
  switch (k) {
    case PayloadKind::score: return "score";
    case PayloadKind::tokens: return "tokens";
    case PayloadKind::number: return "number";
  }
  return "?";
}

inline PayloadKind payload_kind(const Payload& p) { return static_cast<PayloadKind>(p.index()); }

struct Reading {
  std::string sensor;
  Payload payload;
  std::int64_t timestamp = 0;
};

// ---------------------------------------------------------------------------
// Analytics (mathematization)

/// f_{C,L}: the classifier is not run; the reading already carries X(omega).
struct ClassifierStub {};

/// f_{E,L}: counts of violent and calm words.
struct BagOfWords {
  std::set<std::string> violent;
  std::set<std::string> calm;
};

using AnalyticSpec = std::variant<ClassifierStub, BagOfWords>;

struct SensorSpec {
  std::string id;
  PayloadKind raw_format = PayloadKind::score;
  std::map<std::string, AnalyticSpec> analytics;  // variable id -> analytic
};

/// An element (omega, s) of the classifier's random variable.
struct ScoreDatum {
  std::string omega;
  double s = 0.0;
  friend bool operator==(const ScoreDatum&, const ScoreDatum&) = default;
};

/// (i, j) in N^2: violent and calm word counts.
struct CountDatum {
  long violent = 0;
  long calm = 0;
  friend bool operator==(const CountDatum&, const CountDatum&) = default;
};

using Datum = std::variant<ScoreDatum, CountDatum>;

inline std::string to_string(const Datum& d) {
  if (auto s = std::get_if<ScoreDatum>(&d)) return "(" + s->omega + "," + std::to_string(s->s) + ")";
  const auto& c = std::get<CountDatum>(d);
  return "(" + std::to_string(c.violent) + "," + std::to_string(c.calm) + ")";
}

/// Word counting followed by the projection onto (sum over V, sum over N).
/// Words outside V and N are dropped.
inline CountDatum bag_of_words(const std::vector<std::string>& article, const std::set<std::string>& violent,
                               const std::set<std::string>& calm) {
  for (const auto& w : violent)
    if (calm.count(w)) throw ConfigError("word '" + w + "' is listed as both violent and calm");
  std::map<std::string, long> counts;
  for (const auto& w : article) ++counts[w];
  CountDatum out;
  for (const auto& [w, n] : counts) {
    if (violent.count(w)) out.violent += n;
    else if (calm.count(w)) out.calm += n;
  }
  return out;
}

inline Datum mathematize(const Reading& r, const SensorSpec& spec, const std::string& variable) {
  auto it = spec.analytics.find(variable);
  if (it == spec.analytics.end())
    throw AnalyticMissing("sensor " + spec.id + " has no analytic for variable " + variable);
  if (payload_kind(r.payload) != spec.raw_format)
    throw PayloadError("sensor " + spec.id + " expects a " + std::string(payload_kind_name(spec.raw_format)) +
                       " payload, got " + std::string(payload_kind_name(payload_kind(r.payload))));
  return std::visit(
      [&](const auto& a) -> Datum {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, ClassifierStub>) {
          auto p = std::get_if<ScorePayload>(&r.payload);
          if (!p) throw PayloadError("classifier analytic needs a score payload");
          return ScoreDatum{"image@" + std::to_string(r.timestamp), p->score};
        } else {
          auto p = std::get_if<TokensPayload>(&r.payload);
          if (!p) throw PayloadError("bag-of-words analytic needs a tokens payload");
          return bag_of_words(p->tokens, a.violent, a.calm);
        }
      },
      it->second);
}

// ---------------------------------------------------------------------------
// Cooking

/// 0 iff s < 0.5.
inline int cook_f1(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw DomainError("classifier score " + std::to_string(s) + " is outside [0,1]");
  return s < 0.5 ? 0 : 1;
}

/// 0 iff i < j.
inline int cook_f2(long i, long j) {
  if (i < 0 || j < 0) throw DomainError("word counts must be nonnegative");
  return i < j ? 0 : 1;
}

enum class CookingKind { threshold_score, compare_counts };

inline std::string_view cooking_name(CookingKind k) {
  return k == CookingKind::threshold_score ? "threshold-score" : "compare-counts";
}

struct VariableSpec {
  std::string id;
  Category native_category = Category::boolean;
  TypedObject cooked_object = TypedObject::boolean(BoolObject(true, true));
  std::map<std::string, CookingKind> cooking;  // sensor id -> cooking map
};

/// Element label of the cooked object, checked against elements(cooked_object).
inline std::string cook(const Datum& d, CookingKind kind, const VariableSpec& var) {
  int bit = 0;
  if (kind == CookingKind::threshold_score) {
    auto s = std::get_if<ScoreDatum>(&d);
    if (!s) throw DomainError("threshold cooking expects a classifier datum");
    bit = cook_f1(s->s);
  } else {
    auto c = std::get_if<CountDatum>(&d);
    if (!c) throw DomainError("count comparison expects a word-count datum");
    bit = cook_f2(c->violent, c->calm);
  }
  std::string label = std::to_string(bit);
  auto elems = elements(var.cooked_object);
  if (std::none_of(elems.begin(), elems.end(), [&](const Element& e) { return e.value == label; }))
    throw DomainError("cooked value " + label + " is not an element of the cooked object of " + var.id);
  return label;
}

// ---------------------------------------------------------------------------
// Running the pipeline

struct SensorTrace {
  std::string sensor;
  std::string datum;
  std::string cooked;
};

struct PipelineResult {
  Assignment<Rational> assignment;
  SectionReport report;
  std::vector<SensorTrace> trace;
};

namespace detail {
template <class E>
[[noreturn]] void rethrow_with(const E& e, const std::string& ctx) {
  throw E(ctx + ": " + e.what());
}
}  // namespace detail

/// Mathematize, cook and vectorize the latest reading of every vertex sensor,
/// then fill higher faces by pushing the first vertex's value through its
/// restriction map. The section check is the sole arbiter of consistency.
inline PipelineResult run_pipeline(const std::vector<Reading>& readings, const std::vector<SensorSpec>& sensors,
                                   const std::vector<VariableSpec>& variables, const std::string& variable,
                                   const SheafOfSpaces<Rational>& sheaf, double tol = 0.0) {
  auto var_it = std::find_if(variables.begin(), variables.end(), [&](const auto& v) { return v.id == variable; });
  if (var_it == variables.end()) throw ConfigError("unknown variable " + variable);
  const auto& var = *var_it;

  std::map<std::string, const Reading*> latest;
  for (const auto& r : readings) {
    auto& slot = latest[r.sensor];
    if (!slot || r.timestamp >= slot->timestamp) slot = &r;
  }

  PipelineResult out;
  const auto& faces = sheaf.complex.faces();
  for (const auto& f : faces) {
    if (f.size() != 1) continue;
    const auto& sensor_id = f.vertices().front();
    const std::string ctx = "sensor " + sensor_id + ", variable " + variable;
    auto spec = std::find_if(sensors.begin(), sensors.end(), [&](const auto& s) { return s.id == sensor_id; });
    if (spec == sensors.end()) throw ConfigError(ctx + ": no sensor specification");
    auto rd = latest.find(sensor_id);
    if (rd == latest.end()) throw IncompleteAssignmentError(ctx + ": no reading in this run");
    auto ck = var.cooking.find(sensor_id);
    if (ck == var.cooking.end()) throw ConfigError(ctx + ": no cooking map");
    try {
      Datum d = mathematize(*rd->second, *spec, variable);
      std::string cooked = cook(d, ck->second, var);
      const auto& stalk = sheaf.stalk(f);
      if (!(stalk == set_to_fvect(set_of(var.cooked_object))))
        throw SpaceError("stalk on " + f.to_string() + " is not the vectorized cooked object");
      out.assignment.emplace(f, element_vector(stalk, cooked));
      out.trace.push_back({sensor_id, to_string(d), cooked});
    } catch (const AnalyticMissing& e) {
      detail::rethrow_with(e, ctx);
    } catch (const PayloadError& e) {
      detail::rethrow_with(e, ctx);
    } catch (const DomainError& e) {
      detail::rethrow_with(e, ctx);
    } catch (const ConfigError& e) {
      detail::rethrow_with(e, ctx);
    } catch (const SpaceError& e) {
      detail::rethrow_with(e, ctx);
    }
  }
  for (const auto& f : faces) {
    if (f.size() == 1) continue;
    Simplex first({f.vertices().front()});
    out.assignment.emplace(f, apply(sheaf.restriction(first, f), out.assignment.at(first)));
  }
  out.report = is_global_section(sheaf, out.assignment, tol);
  return out;
}

// ---------------------------------------------------------------------------
// The camera / newspaper violence example

struct LExample {
  SimplicialComplex complex;
  SheafOfSpaces<Rational> sheaf;
  std::vector<SensorSpec> sensors;
  std::vector<VariableSpec> variables;
};

inline std::set<std::string> default_violent_words() { return {"attack", "fight", "riot", "shooting", "violence"}; }
inline std::set<std::string> default_calm_words() { return {"calm", "celebration", "festival", "parade", "peaceful"}; }

/// Edge complex {[C],[E],[C,E]} with every stalk R[{0,1}] and identity restrictions.
inline LExample build_L_example() {
  LExample ex;
  ex.complex = closure_of({Simplex{"C", "E"}});
  const auto bit = VectorSpace({"0", "1"});
  ex.sheaf.complex = ex.complex;
  for (const auto& f : ex.complex.faces()) ex.sheaf.stalks.emplace(f, bit);
  for (const auto& a : face_category(ex.complex).non_identity()) {
    const auto& fc = ex.complex.faces();
    ex.sheaf.restrictions.emplace(FacePair{fc[a.from], fc[a.to]}, LinearMap<Rational>::identity(bit));
  }
  ex.sensors.push_back({"C", PayloadKind::score, {{"L", ClassifierStub{}}}});
  ex.sensors.push_back({"E", PayloadKind::tokens, {{"L", BagOfWords{default_violent_words(), default_calm_words()}}}});
  VariableSpec l;
  l.id = "L";
  l.cooking = {{"C", CookingKind::threshold_score}, {"E", CookingKind::compare_counts}};
  ex.variables.push_back(std::move(l));
  return ex;
}

/// An article with the given numbers of violent and calm words.
inline std::vector<std::string> synthetic_article(long violent, long calm) {
  std::vector<std::string> out{"the", "city"};
  for (long k = 0; k < violent; ++k) out.push_back("riot");
  for (long k = 0; k < calm; ++k) out.push_back("calm");
  out.push_back("today");
  return out;
}

}  // namespace catfuse

#endif  // CATFUSE_PIPELINE_HPP
