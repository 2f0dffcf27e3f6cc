#ifndef CATFUSE_TYPESYS_HPP
#define CATFUSE_TYPESYS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/rational.hpp"

namespace catfuse {

enum class Category { set, boolean, bi_rel, k_rel, n_rel, pordinal, ordinal, interval, scalar, meas, prob, rv, sto };

inline constexpr Category kAllCategories[] = {
    Category::set,      Category::boolean, Category::bi_rel,   Category::k_rel, Category::n_rel,
    Category::pordinal, Category::ordinal, Category::interval, Category::scalar, Category::meas,
    Category::prob,     Category::rv,      Category::sto};

inline std::string_view category_name(Category c) {
  switch (c) {
    case Category::set: return "SET";
    case Category::boolean: return "BOOL";
    case Category::bi_rel: return "BI-REL";
    case Category::k_rel: return "k-REL";
    case Category::n_rel: return "N-REL";
    case Category::pordinal: return "PORDINAL";
    case Category::ordinal: return "ORDINAL";
    case Category::interval: return "INTERVAL";
    case Category::scalar: return "SCALAR";
    case Category::meas: return "MEAS";
    case Category::prob: return "PROB";
    case Category::rv: return "RV";
    case Category::sto: return "STO";
  }
  return "?";
}

inline std::optional<Category> parse_category(std::string_view name) {
  for (auto c : kAllCategories)
    if (category_name(c) == name) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Finite sets and maps

/// Finite set of distinct symbolic labels; element order is significant for
/// serialization and basis ordering. Copies share storage.
class SetObject {
public:
  SetObject() : elements_(std::make_shared<const std::vector<std::string>>()) {}
  SetObject(std::initializer_list<std::string> e) : SetObject(std::vector<std::string>(e)) {}
  explicit SetObject(std::vector<std::string> elements) {
    std::set<std::string_view> seen;
    for (const auto& e : elements)
      if (!seen.insert(e).second) throw InvalidObject("duplicate set element '" + e + "'");
    elements_ = std::make_shared<const std::vector<std::string>>(std::move(elements));
  }

  std::size_t size() const noexcept { return elements_->size(); }
  bool empty() const noexcept { return elements_->empty(); }
  const std::vector<std::string>& elements() const noexcept { return *elements_; }
  const std::string& at(std::size_t i) const { return elements_->at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::find(elements_->begin(), elements_->end(), label);
    if (it == elements_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - elements_->begin());
  }
  std::size_t require_index(std::string_view label) const {
    auto i = index_of(label);
    if (!i) throw InvalidObject("'" + std::string(label) + "' is not an element");
    return *i;
  }

  friend bool operator==(const SetObject& a, const SetObject& b) {
    return a.elements_ == b.elements_ || *a.elements_ == *b.elements_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> elements_;
};

/// Total function between finite sets, stored as target indices.
struct FiniteMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t i) const { return image.at(i); }
  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

  static FiniteMap identity(std::size_t n) {
    FiniteMap m;
    m.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.image[i] = i;
    return m;
  }

  /// Builds a map from label pairs; every source element must be mapped.
  static FiniteMap from_labels(const SetObject& from, const SetObject& to,
                               const std::map<std::string, std::string>& assignment) {
    FiniteMap m;
    m.image.reserve(from.size());
    for (const auto& e : from.elements()) {
      auto it = assignment.find(e);
      if (it == assignment.end()) throw InvalidObject("map is not total: '" + e + "' has no image");
      auto j = to.index_of(it->second);
      if (!j) throw InvalidObject("image '" + it->second + "' of '" + e + "' is not in the target");
      m.image.push_back(*j);
    }
    for (const auto& [k, v] : assignment)
      if (!from.index_of(k)) throw InvalidObject("map assigns '" + k + "' which is not in the source");
    return m;
  }
};

/// g after f.
inline FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  FiniteMap out;
  out.image.reserve(f.image.size());
  for (auto i : f.image) {
    if (i >= g.image.size()) throw CompositionError("finite maps are not composable");
    out.image.push_back(g.image[i]);
  }
  return out;
}

/// Checks that `f` is a total function from a set of size `from` into a set of size `to`.
inline void check_total(const FiniteMap& f, std::size_t from, std::size_t to) {
  if (f.image.size() != from)
    throw ViolationError("map is not total on the source", std::to_string(f.image.size()) + " images for " +
                                                               std::to_string(from) + " elements");
  for (std::size_t i = 0; i < f.image.size(); ++i)
    if (f.image[i] >= to) throw ViolationError("image outside the target", "element #" + std::to_string(i));
}

// ---------------------------------------------------------------------------
// BOOL

/// One of the four subsets of {0,1}.
class BoolObject {
public:
  BoolObject() = default;
  BoolObject(bool has_zero, bool has_one) : zero_(has_zero), one_(has_one) {}

  static BoolObject from_set(const SetObject& s) {
    BoolObject b;
    for (const auto& e : s.elements()) {
      if (e == "0") b.zero_ = true;
      else if (e == "1") b.one_ = true;
      else throw InvalidObject("BOOL objects are subsets of {0,1}; got element '" + e + "'");
    }
    return b;
  }

  bool has_zero() const noexcept { return zero_; }
  bool has_one() const noexcept { return one_; }

  /// Canonical underlying set, "0" before "1".
  SetObject as_set() const {
    std::vector<std::string> e;
    if (zero_) e.push_back("0");
    if (one_) e.push_back("1");
    return SetObject(std::move(e));
  }

  friend bool operator==(const BoolObject&, const BoolObject&) = default;

private:
  bool zero_ = false;
  bool one_ = false;
};

// ---------------------------------------------------------------------------
// Relations

using Tuple = std::vector<std::size_t>;

/// (S, R) with R a set of k-tuples over S. Tuples keep input order.
class RelObject {
public:
  RelObject() = default;
  RelObject(SetObject base, std::size_t arity, const std::vector<std::vector<std::string>>& tuples)
      : base_(std::move(base)), arity_(arity) {
    if (arity_ < 2) throw InvalidObject("relation arity must be at least 2");
    for (const auto& t : tuples) {
      if (t.size() != arity_)
        throw InvalidObject("tuple of length " + std::to_string(t.size()) + " in a " + std::to_string(arity_) +
                            "-ary relation");
      Tuple idx;
      for (const auto& e : t) idx.push_back(base_.require_index(e));
      add(std::move(idx));
    }
  }

  static RelObject from_indices(SetObject base, std::size_t arity, const std::vector<Tuple>& tuples) {
    RelObject r;
    r.base_ = std::move(base);
    r.arity_ = arity;
    if (arity < 2) throw InvalidObject("relation arity must be at least 2");
    for (const auto& t : tuples) {
      if (t.size() != arity) throw InvalidObject("tuple length does not match arity");
      for (auto i : t)
        if (i >= r.base_.size()) throw InvalidObject("tuple entry outside the base set");
      r.add(t);
    }
    return r;
  }

  const SetObject& base() const noexcept { return base_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }
  bool contains(const Tuple& t) const { return lookup_.count(t) != 0; }

  std::string tuple_label(const Tuple& t) const {
    std::string out = "<";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += base_.at(t[i]);
    }
    return out + ">";
  }

  friend bool operator==(const RelObject& a, const RelObject& b) {
    return a.arity_ == b.arity_ && a.base_ == b.base_ && a.lookup_ == b.lookup_;
  }

private:
  void add(Tuple t) {
    if (!lookup_.insert(t).second) throw InvalidObject("duplicate tuple in relation");
    tuples_.push_back(std::move(t));
  }

  SetObject base_;
  std::size_t arity_ = 2;
  std::vector<Tuple> tuples_;
  std::set<Tuple> lookup_;
};

namespace detail {

inline std::string pair_label(const RelObject& r, std::size_t a, std::size_t b) {
  return "(" + r.base().at(a) + "," + r.base().at(b) + ")";
}

inline void require_reflexive(const RelObject& r) {
  for (std::size_t i = 0; i < r.base().size(); ++i)
    if (!r.contains({i, i})) throw ViolationError("order is not reflexive", detail::pair_label(r, i, i));
}

inline void require_antisymmetric(const RelObject& r) {
  for (const auto& t : r.tuples())
    if (t[0] != t[1] && r.contains({t[1], t[0]}))
      throw ViolationError("order is not antisymmetric", pair_label(r, t[0], t[1]));
}

inline void require_transitive(const RelObject& r) {
  for (const auto& p : r.tuples())
    for (const auto& q : r.tuples())
      if (p[1] == q[0] && !r.contains({p[0], q[1]}))
        throw ViolationError("order is not transitive",
                             pair_label(r, p[0], p[1]) + " and " + pair_label(r, q[0], q[1]) + " without " +
                                 pair_label(r, p[0], q[1]));
}

}  // namespace detail

/// Partial order (P, L): reflexive, transitive, antisymmetric.
class PosetObject {
public:
  PosetObject() = default;
  explicit PosetObject(RelObject pairs) : rel_(std::move(pairs)) {
    if (rel_.arity() != 2) throw InvalidObject("a partial order is a binary relation");
    detail::require_reflexive(rel_);
    detail::require_antisymmetric(rel_);
    detail::require_transitive(rel_);
  }
  PosetObject(SetObject base, const std::vector<std::vector<std::string>>& pairs)
      : PosetObject(RelObject(std::move(base), 2, pairs)) {}

  const RelObject& relation() const noexcept { return rel_; }
  const SetObject& base() const noexcept { return rel_.base(); }
  bool leq(std::size_t a, std::size_t b) const { return rel_.contains({a, b}); }

  friend bool operator==(const PosetObject&, const PosetObject&) = default;

private:
  RelObject rel_;
};

/// Total order (O, T): transitive, antisymmetric, total. Totality is read as
/// including (o,o) for every o.
class TotalOrderObject {
public:
  TotalOrderObject() = default;
  explicit TotalOrderObject(RelObject pairs) : rel_(std::move(pairs)) {
    if (rel_.arity() != 2) throw InvalidObject("a total order is a binary relation");
    const auto n = rel_.base().size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!rel_.contains({a, b}) && !rel_.contains({b, a}))
          throw ViolationError("order is not total", detail::pair_label(rel_, a, b));
    detail::require_antisymmetric(rel_);
    detail::require_transitive(rel_);
  }
  TotalOrderObject(SetObject base, const std::vector<std::vector<std::string>>& pairs)
      : TotalOrderObject(RelObject(std::move(base), 2, pairs)) {}

  /// The chain e0 <= e1 <= ... in element order.
  static TotalOrderObject chain(const SetObject& s) {
    std::vector<Tuple> pairs;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a; b < s.size(); ++b) pairs.push_back({a, b});
    return TotalOrderObject(RelObject::from_indices(s, 2, pairs));
  }

  const RelObject& relation() const noexcept { return rel_; }
  const SetObject& base() const noexcept { return rel_.base(); }
  bool leq(std::size_t a, std::size_t b) const { return rel_.contains({a, b}); }
  PosetObject as_poset() const { return PosetObject(rel_); }

  friend bool operator==(const TotalOrderObject&, const TotalOrderObject&) = default;

private:
  RelObject rel_;
};

/// Accepts `f` iff every tuple of `a` maps to a tuple of `b`. Throws with the
/// first offending tuple otherwise. Relations of different arity have an
/// empty hom-set.
inline void check_relation_map(const RelObject& a, const RelObject& b, const FiniteMap& f) {
  if (a.arity() != b.arity())
    throw ViolationError("hom-set is empty between relations of different arity",
                         "dim " + std::to_string(a.arity()) + " vs dim " + std::to_string(b.arity()));
  check_total(f, a.base().size(), b.base().size());
  for (const auto& t : a.tuples()) {
    Tuple image;
    image.reserve(t.size());
    for (auto i : t) image.push_back(f(i));
    if (!b.contains(image))
      throw ViolationError("map is not relation preserving", a.tuple_label(t) + " -> " + b.tuple_label(image));
  }
}

// ---------------------------------------------------------------------------
// Intervals and ordered semirings

/// Closed interval [lo, hi] with lo <= hi.
class Interval {
public:
  Interval() = default;
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw IntervalError("malformed interval: lower end " + lo_.get_str() + " exceeds upper end " +
                                       hi_.get_str());
  }
  static Interval point(const Rational& x) { return Interval(x, x); }

  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  bool is_point() const { return lo_ == hi_; }

  std::string to_string() const { return "[" + lo_.get_str() + "," + hi_.get_str() + "]"; }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend bool operator<(const Interval& a, const Interval& b) {
    return a.lo_ < b.lo_ || (a.lo_ == b.lo_ && a.hi_ < b.hi_);
  }

private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Endpoint sums.
inline Interval interval_add(const Interval& a, const Interval& b) { return Interval(a.lo() + b.lo(), a.hi() + b.hi()); }

/// Smallest interval holding all four endpoint products.
inline Interval interval_mul(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  return Interval(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

/// Containment order: a <= b iff a lies inside b.
inline bool interval_leq(const Interval& a, const Interval& b) { return b.lo() <= a.lo() && a.hi() <= b.hi(); }

enum class SemiringKind { naturals, integer_intervals, rational_intervals };

inline std::string_view semiring_kind_name(SemiringKind k) {
  switch (k) {
    case SemiringKind::naturals: return "naturals";
    case SemiringKind::integer_intervals: return "integer-intervals";
    case SemiringKind::rational_intervals: return "rational-intervals";
  }
  return "?";
}

inline std::optional<SemiringKind> parse_semiring_kind(std::string_view s) {
  for (auto k : {SemiringKind::naturals, SemiringKind::integer_intervals, SemiringKind::rational_intervals})
    if (semiring_kind_name(k) == s) return k;
  return std::nullopt;
}

/// Finite enumeration window: endpoints range over lo + i/denominator in [lo, hi].
struct Window {
  long lo = 0;
  long hi = 0;
  long denominator = 1;
  friend bool operator==(const Window&, const Window&) = default;
};

/// One of the supported infinite semirings, optionally restricted to a
/// finite window. Every value is carried as an Interval; naturals are the
/// degenerate intervals [n,n] and use the usual total order instead of
/// containment.
class SemiringObject {
public:
  using Value = Interval;

  SemiringObject() = default;
  explicit SemiringObject(SemiringKind kind, std::optional<Window> window = std::nullopt)
      : kind_(kind), window_(window) {
    if (window_) {
      if (window_->lo > window_->hi) throw InvalidObject("window lower bound exceeds upper bound");
      if (window_->denominator < 1) throw InvalidObject("window denominator must be positive");
      if (kind_ != SemiringKind::rational_intervals && window_->denominator != 1)
        throw InvalidObject("only rational intervals take a window denominator");
    }
  }

  SemiringKind kind() const noexcept { return kind_; }
  const std::optional<Window>& window() const noexcept { return window_; }
  bool totally_ordered() const noexcept { return kind_ == SemiringKind::naturals; }
  SemiringObject with_window(Window w) const { return SemiringObject(kind_, w); }

  Value zero() const { return Interval::point(Rational(0)); }
  Value one() const { return Interval::point(Rational(1)); }
  Value add(const Value& a, const Value& b) const { return interval_add(a, b); }
  Value mul(const Value& a, const Value& b) const { return interval_mul(a, b); }

  bool leq(const Value& a, const Value& b) const {
    if (kind_ == SemiringKind::naturals) return a.lo() <= b.lo();
    return interval_leq(a, b);
  }

  bool in_carrier(const Value& v) const {
    auto integral = [](const Rational& x) { return x.get_den() == 1; };
    switch (kind_) {
      case SemiringKind::naturals: return v.is_point() && integral(v.lo()) && sgn(v.lo()) >= 0;
      case SemiringKind::integer_intervals: return integral(v.lo()) && integral(v.hi());
      case SemiringKind::rational_intervals: return true;
    }
    return false;
  }

  bool in_window(const Value& v) const {
    if (!window_ || !in_carrier(v)) return false;
    auto on_grid = [&](const Rational& x) {
      Rational scaled = x * window_->denominator;
      return scaled.get_den() == 1 && x >= window_->lo && x <= window_->hi;
    };
    return on_grid(v.lo()) && on_grid(v.hi());
  }

  /// All carrier members inside the window, sorted by (lo, hi).
  std::vector<Value> enumerate() const {
    if (!window_) throw WindowRequired("semiring carrier is infinite; supply a window (--window lo:hi)");
    std::vector<Rational> grid;
    for (long i = window_->lo * window_->denominator; i <= window_->hi * window_->denominator; ++i)
      grid.emplace_back(mpz_class(i), mpz_class(window_->denominator));
    for (auto& g : grid) g.canonicalize();
    std::vector<Value> out;
    if (kind_ == SemiringKind::naturals) {
      for (const auto& g : grid)
        if (sgn(g) >= 0) out.push_back(Interval::point(g));
      return out;
    }
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i; j < grid.size(); ++j) out.emplace_back(grid[i], grid[j]);
    return out;
  }

  std::string label(const Value& v) const {
    if (kind_ == SemiringKind::naturals) return v.lo().get_str();
    return v.to_string();
  }

  friend bool operator==(const SemiringObject&, const SemiringObject&) = default;

private:
  SemiringKind kind_ = SemiringKind::naturals;
  std::optional<Window> window_;
};

/// Result of one axiom over a finite window.
struct AxiomResult {
  std::string axiom;
  bool holds = true;
  std::size_t cases = 0;
  std::string witness;
};

/// Exhaustively checks the semiring laws and order compatibility on every
/// tuple drawn from the window. Arithmetic is exact.
inline std::vector<AxiomResult> check_semiring_axioms(const SemiringObject& r) {
  const auto vals = r.enumerate();
  const auto zero = r.zero();
  const auto one = r.one();
  std::vector<AxiomResult> out;
  auto run = [&](std::string name, auto&& body) {
    AxiomResult res;
    res.axiom = std::move(name);
    body(res);
    out.push_back(std::move(res));
  };
  auto fail = [&](AxiomResult& res, std::string w) {
    ++res.cases;
    if (res.holds) {
      res.holds = false;
      res.witness = std::move(w);
    }
  };
  auto pass = [](AxiomResult& res) { ++res.cases; };
  auto l = [&](const Interval& v) { return r.label(v); };

  run("additive associativity", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals)
        for (const auto& c : vals) {
          if (r.add(r.add(a, b), c) == r.add(a, r.add(b, c))) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c));
        }
  });
  run("additive commutativity", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals) {
        if (r.add(a, b) == r.add(b, a)) pass(res);
        else fail(res, "a=" + l(a) + " b=" + l(b));
      }
  });
  run("additive identity", [&](AxiomResult& res) {
    for (const auto& a : vals) {
      if (r.add(zero, a) == a && r.add(a, zero) == a) pass(res);
      else fail(res, "a=" + l(a));
    }
  });
  run("multiplicative associativity", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals)
        for (const auto& c : vals) {
          if (r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c))) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c));
        }
  });
  run("multiplicative identity", [&](AxiomResult& res) {
    for (const auto& a : vals) {
      if (r.mul(one, a) == a && r.mul(a, one) == a) pass(res);
      else fail(res, "a=" + l(a));
    }
  });
  run("left distributivity", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals)
        for (const auto& c : vals) {
          auto lhs = r.mul(a, r.add(b, c));
          auto rhs = r.add(r.mul(a, b), r.mul(a, c));
          if (lhs == rhs) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c) + ": a(b+c)=" + l(lhs) + " but ab+ac=" + l(rhs));
        }
  });
  run("right distributivity", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals)
        for (const auto& c : vals) {
          auto lhs = r.mul(r.add(b, c), a);
          auto rhs = r.add(r.mul(b, a), r.mul(c, a));
          if (lhs == rhs) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c) + ": (b+c)a=" + l(lhs) + " but ba+ca=" + l(rhs));
        }
  });
  run("zero annihilates", [&](AxiomResult& res) {
    for (const auto& a : vals) {
      if (r.mul(zero, a) == zero && r.mul(a, zero) == zero) pass(res);
      else fail(res, "a=" + l(a));
    }
  });
  run("order is a partial order", [&](AxiomResult& res) {
    for (const auto& a : vals) {
      if (r.leq(a, a)) pass(res);
      else fail(res, "not reflexive at " + l(a));
      for (const auto& b : vals) {
        if (!(r.leq(a, b) && r.leq(b, a)) || a == b) pass(res);
        else fail(res, "not antisymmetric at " + l(a) + "," + l(b));
        for (const auto& c : vals) {
          if (!(r.leq(a, b) && r.leq(b, c)) || r.leq(a, c)) pass(res);
          else fail(res, "not transitive at " + l(a) + "," + l(b) + "," + l(c));
        }
      }
    }
  });
  if (r.totally_ordered()) {
    run("order is total", [&](AxiomResult& res) {
      for (const auto& a : vals)
        for (const auto& b : vals) {
          if (r.leq(a, b) || r.leq(b, a)) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b));
        }
    });
  }
  run("order compatible with addition", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals) {
        if (!r.leq(a, b)) continue;
        for (const auto& c : vals) {
          if (r.leq(r.add(a, c), r.add(b, c))) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c));
        }
      }
  });
  run("order compatible with multiplication", [&](AxiomResult& res) {
    for (const auto& a : vals)
      for (const auto& b : vals) {
        if (!r.leq(a, b)) continue;
        for (const auto& c : vals) {
          if (!r.leq(zero, c)) continue;
          if (r.leq(r.mul(a, c), r.mul(b, c)) && r.leq(r.mul(c, a), r.mul(c, b))) pass(res);
          else fail(res, "a=" + l(a) + " b=" + l(b) + " c=" + l(c));
        }
      }
  });
  return out;
}

/// Ordered-semiring homomorphism given as a function on values.
struct SemiringHom {
  std::string name;
  std::function<Interval(const Interval&)> fn;

  Interval operator()(const Interval& v) const { return fn(v); }

  static SemiringHom identity() {
    return {"id", [](const Interval& v) { return v; }};
  }
};

/// g after f.
inline SemiringHom compose(const SemiringHom& g, const SemiringHom& f) {
  return {g.name + "∘" + f.name, [g, f](const Interval& v) { return g(f(v)); }};
}

/// Validates a homomorphism on the source window: lands in the target
/// carrier, preserves +, *, 1 and the order.
inline void check_semiring_hom(const SemiringObject& a, const SemiringObject& b, const SemiringHom& f) {
  const auto vals = a.enumerate();
  for (const auto& x : vals)
    if (!b.in_carrier(f(x))) throw ViolationError("image outside the target carrier", a.label(x));
  if (!(f(a.one()) == b.one())) throw ViolationError("homomorphism does not send 1 to 1", b.label(f(a.one())));
  for (const auto& x : vals)
    for (const auto& y : vals) {
      if (!(f(a.add(x, y)) == b.add(f(x), f(y))))
        throw ViolationError("homomorphism does not preserve +", a.label(x) + "+" + a.label(y));
      if (!(f(a.mul(x, y)) == b.mul(f(x), f(y))))
        throw ViolationError("homomorphism does not preserve *", a.label(x) + "*" + a.label(y));
      if (a.leq(x, y) && !b.leq(f(x), f(y)))
        throw ViolationError("homomorphism is not order preserving", a.label(x) + "<=" + a.label(y));
    }
}

/// Pointwise equality on the source window.
inline bool same_on_window(const SemiringObject& source, const SemiringHom& f, const SemiringHom& g) {
  for (const auto& x : source.enumerate())
    if (!(f(x) == g(x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Elements

/// An element picked out by a morphism from the category's terminal-like
/// object. `value` names the chosen point; `witness` spells out the morphism.
struct Element {
  std::string value;
  std::string witness;
  friend bool operator==(const Element&, const Element&) = default;
};

/// {0}: terminal in SET and reused for BOOL.
inline SetObject terminal_set() { return SetObject({"0"}); }
/// ({0}, empty relation) of the given arity.
inline RelObject terminal_relation(std::size_t arity = 2) { return RelObject(terminal_set(), arity, {}); }
/// ({0}, {(0,0)}).
inline PosetObject terminal_poset() { return PosetObject(terminal_set(), {{"0", "0"}}); }

inline std::vector<Element> set_elements(const SetObject& s) {
  std::vector<Element> out;
  for (const auto& e : s.elements()) out.push_back({e, "0 -> " + e});
  return out;
}

/// Maps out of ({0}, empty): the preservation condition is vacuous, so every
/// base point is an element regardless of the tuples.
inline std::vector<Element> relation_elements(const RelObject& r) {
  const auto terminal = terminal_relation(r.arity());
  std::vector<Element> out;
  for (std::size_t i = 0; i < r.base().size(); ++i) {
    FiniteMap m{{i}};
    check_relation_map(terminal, r, m);
    out.push_back({r.base().at(i), "0 -> " + r.base().at(i)});
  }
  return out;
}

/// Maps out of ({0}, {(0,0)}): reflexivity of the target makes every point valid.
inline std::vector<Element> order_elements(const RelObject& order) {
  const auto terminal = terminal_poset().relation();
  std::vector<Element> out;
  for (std::size_t i = 0; i < order.base().size(); ++i) {
    check_relation_map(terminal, order, FiniteMap{{i}});
    out.push_back({order.base().at(i), "0 -> " + order.base().at(i) + " with (0,0) -> (" + order.base().at(i) + "," +
                                           order.base().at(i) + ")"});
  }
  return out;
}

/// Elements through the free semiring on one generator: one per image of
/// the generator inside the window.
inline std::vector<Element> semiring_elements(const SemiringObject& r) {
  std::vector<Element> out;
  for (const auto& v : r.enumerate()) out.push_back({r.label(v), "generator -> " + r.label(v)});
  return out;
}

}  // namespace catfuse

#endif  // CATFUSE_TYPESYS_HPP
