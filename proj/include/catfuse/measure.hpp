#ifndef CATFUSE_MEASURE_HPP
#define CATFUSE_MEASURE_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/rational.hpp"
#include "catfuse/typesys.hpp"

namespace catfuse {

/// Finite point set with the power-set sigma-algebra. On a power set every
/// map is measurable, so totality is the only check morphisms need.
class FiniteMeasurableSpace {
public:
  FiniteMeasurableSpace() = default;
  explicit FiniteMeasurableSpace(SetObject points) : points_(std::move(points)) {}
  FiniteMeasurableSpace(std::initializer_list<std::string> pts) : points_(pts) {}

  const SetObject& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  friend bool operator==(const FiniteMeasurableSpace&, const FiniteMeasurableSpace&) = default;

private:
  SetObject points_;
};

/// Nonnegative weight per point.
template <Scalar S>
class Measure {
public:
  Measure() = default;
  Measure(FiniteMeasurableSpace space, std::vector<S> weights) : space_(std::move(space)), weights_(std::move(weights)) {
    if (weights_.size() != space_.size()) throw SpaceError("measure needs one weight per point");
    for (std::size_t i = 0; i < weights_.size(); ++i)
      if (weights_[i] < 0) throw InvalidObject("negative weight at point '" + space_.points().at(i) + "'");
  }
  static Measure zero(const FiniteMeasurableSpace& space) { return Measure(space, std::vector<S>(space.size(), S(0))); }

  const FiniteMeasurableSpace& space() const noexcept { return space_; }
  const std::vector<S>& weights() const noexcept { return weights_; }
  const S& operator[](std::size_t i) const { return weights_[i]; }

  S total() const {
    S t(0);
    for (const auto& w : weights_) t += w;
    return t;
  }

  friend Measure operator+(const Measure& a, const Measure& b) {
    if (!(a.space_ == b.space_)) throw SpaceError("adding measures on different spaces");
    std::vector<S> w(a.weights_.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = a.weights_[i] + b.weights_[i];
    return Measure(a.space_, std::move(w));
  }

  friend bool operator==(const Measure&, const Measure&) = default;

private:
  FiniteMeasurableSpace space_;
  std::vector<S> weights_;
};

namespace detail {
template <Scalar S>
bool sums_to_one(const S& total) {
  if constexpr (ScalarTraits<S>::exact) return total == S(1);
  else return std::abs(to_double(total) - 1.0) <= 1e-12;
}
}  // namespace detail

/// Measure of total weight one (exactly, or within 1e-12 for doubles).
template <Scalar S>
class ProbabilityMeasure {
public:
  ProbabilityMeasure() = default;
  explicit ProbabilityMeasure(Measure<S> m) : m_(std::move(m)) {
    if (!detail::sums_to_one(m_.total()))
      throw InvalidObject("probability weights sum to " + ScalarTraits<S>::to_string(m_.total()) + ", not 1");
  }
  ProbabilityMeasure(FiniteMeasurableSpace space, std::vector<S> weights)
      : ProbabilityMeasure(Measure<S>(std::move(space), std::move(weights))) {}

  static ProbabilityMeasure point_mass(const FiniteMeasurableSpace& space, std::size_t at) {
    std::vector<S> w(space.size(), S(0));
    w.at(at) = S(1);
    return ProbabilityMeasure(space, std::move(w));
  }
  static ProbabilityMeasure uniform(const FiniteMeasurableSpace& space)
    requires(ScalarTraits<S>::exact)
  {
    if (space.size() == 0) throw InvalidObject("no probability measure on the empty space");
    std::vector<S> w(space.size(), S(1) / S(static_cast<long>(space.size())));
    return ProbabilityMeasure(space, std::move(w));
  }

  const Measure<S>& measure() const noexcept { return m_; }
  const FiniteMeasurableSpace& space() const noexcept { return m_.space(); }
  const std::vector<S>& weights() const noexcept { return m_.weights(); }

  friend bool operator==(const ProbabilityMeasure&, const ProbabilityMeasure&) = default;

private:
  Measure<S> m_;
};

/// mu(x, y) >= 0 indexed (source point, target point). Stochastic kernels
/// have unit row sums: the finite conditional distribution.
template <Scalar S>
class Kernel {
public:
  Kernel() = default;
  Kernel(FiniteMeasurableSpace source, FiniteMeasurableSpace target, Matrix<S> entries, bool stochastic = false)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)), stochastic_(stochastic) {
    if (entries_.rows() != source_.size() || entries_.cols() != target_.size())
      throw SpaceError("kernel matrix must be |source| x |target|");
    for (std::size_t i = 0; i < entries_.rows(); ++i) {
      S row(0);
      for (std::size_t j = 0; j < entries_.cols(); ++j) {
        if (entries_(i, j) < 0)
          throw InvalidObject("negative kernel entry at (" + source_.points().at(i) + "," + target_.points().at(j) +
                              ")");
        row += entries_(i, j);
      }
      if (stochastic_ && !detail::sums_to_one(row))
        throw InvalidObject("row '" + source_.points().at(i) + "' of a stochastic kernel sums to " +
                            ScalarTraits<S>::to_string(row));
    }
  }

  /// Diagonal 0/1 kernel: the finite Dirac identity.
  static Kernel identity(const FiniteMeasurableSpace& x) {
    return Kernel(x, x, Matrix<S>::identity(x.size()), true);
  }

  /// Deterministic kernel of a function: one 1 per row, at f(x).
  static Kernel dirac(const FiniteMeasurableSpace& from, const FiniteMeasurableSpace& to, const FiniteMap& f) {
    check_total(f, from.size(), to.size());
    Matrix<S> m(from.size(), to.size());
    for (std::size_t i = 0; i < from.size(); ++i) m(i, f(i)) = S(1);
    return Kernel(from, to, std::move(m), true);
  }

  const FiniteMeasurableSpace& source() const noexcept { return source_; }
  const FiniteMeasurableSpace& target() const noexcept { return target_; }
  const Matrix<S>& entries() const noexcept { return entries_; }
  const S& operator()(std::size_t x, std::size_t y) const { return entries_(x, y); }
  bool stochastic() const noexcept { return stochastic_; }

  friend bool operator==(const Kernel& a, const Kernel& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
  }

private:
  FiniteMeasurableSpace source_;
  FiniteMeasurableSpace target_;
  Matrix<S> entries_;
  bool stochastic_ = false;
};

/// n(y) = sum_x mu(x, y) m(x).
template <Scalar S>
Measure<S> push_measure(const Kernel<S>& k, const Measure<S>& m) {
  if (!(m.space() == k.source())) throw SpaceError("measure does not live on the kernel's source");
  std::vector<S> out(k.target().size(), S(0));
  for (std::size_t x = 0; x < k.source().size(); ++x) {
    if (is_zero(m[x])) continue;
    for (std::size_t y = 0; y < k.target().size(); ++y)
      if (!is_zero(k(x, y))) out[y] += k(x, y) * m[x];
  }
  return Measure<S>(k.target(), std::move(out));
}

template <Scalar S>
ProbabilityMeasure<S> push_measure(const Kernel<S>& k, const ProbabilityMeasure<S>& p) {
  if (!k.stochastic()) throw InvalidObject("only stochastic kernels map probability measures to probability measures");
  return ProbabilityMeasure<S>(push_measure(k, p.measure()));
}

/// nu after mu: rho(x, z) = sum_y mu(x, y) nu(y, z).
template <Scalar S>
Kernel<S> compose_kernels(const Kernel<S>& nu, const Kernel<S>& mu) {
  if (!(mu.target() == nu.source())) throw CompositionError("kernel target and source spaces differ");
  return Kernel<S>(mu.source(), nu.target(), mu.entries() * nu.entries(), mu.stochastic() && nu.stochastic());
}

// ---------------------------------------------------------------------------
// Elements of measure families

/// {0}: the one-point measurable space behind the MEAS and PROB element objects.
inline FiniteMeasurableSpace unit_space() { return FiniteMeasurableSpace(terminal_set()); }

/// The kernel {0} -> X whose single row is the measure: the morphism out of
/// the one-point family that picks this element.
template <Scalar S>
Kernel<S> element_kernel(const Measure<S>& m) {
  Matrix<S> row(1, m.space().size());
  for (std::size_t x = 0; x < m.space().size(); ++x) row(0, x) = m[x];
  return Kernel<S>(unit_space(), m.space(), std::move(row));
}

/// Reads the element back out of a kernel from the one-point space.
template <Scalar S>
Measure<S> element_of_kernel(const Kernel<S>& k) {
  if (!(k.source() == unit_space())) throw SpaceError("element kernels start at the one-point space");
  std::vector<S> w;
  for (std::size_t x = 0; x < k.target().size(); ++x) w.push_back(k(0, x));
  return Measure<S>(k.target(), std::move(w));
}

/// Every measure whose weights come from `grid`, in lexicographic grid order.
inline std::vector<Measure<Rational>> meas_elements(const FiniteMeasurableSpace& space, const std::vector<Rational>& grid,
                                                    std::size_t bound = 1'000'000) {
  for (const auto& g : grid)
    if (g < 0) throw InvalidObject("measure grid values must be nonnegative");
  double count = std::pow(static_cast<double>(grid.size()), static_cast<double>(space.size()));
  if (count > static_cast<double>(bound)) throw BoundError("measure grid enumeration exceeds bound");
  std::vector<Measure<Rational>> out;
  if (grid.empty() && space.size() > 0) return out;
  std::vector<std::size_t> digits(space.size(), 0);
  while (true) {
    std::vector<Rational> w;
    for (auto d : digits) w.push_back(grid[d]);
    out.emplace_back(space, std::move(w));
    std::size_t i = digits.size();
    while (i > 0 && ++digits[i - 1] == grid.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// Grid measures of total weight one. With the one-point space this is the
/// single probability measure on {0}.
inline std::vector<ProbabilityMeasure<Rational>> prob_elements(const FiniteMeasurableSpace& space,
                                                               const std::vector<Rational>& grid,
                                                               std::size_t bound = 1'000'000) {
  std::vector<ProbabilityMeasure<Rational>> out;
  for (auto& m : meas_elements(space, grid, bound))
    if (m.total() == 1) out.emplace_back(std::move(m));
  return out;
}

// ---------------------------------------------------------------------------
// Random variables and stochastic processes

/// [(Omega, P), S, X : Omega -> S].
class RandomVariable {
public:
  RandomVariable() = default;
  RandomVariable(FiniteMeasurableSpace omega, ProbabilityMeasure<Rational> prob, FiniteMeasurableSpace state,
                 FiniteMap x_map)
      : omega_(std::move(omega)), prob_(std::move(prob)), state_(std::move(state)), x_(std::move(x_map)) {
    if (!(prob_.space() == omega_)) throw SpaceError("probability measure must live on Omega");
    check_total(x_, omega_.size(), state_.size());
  }

  const FiniteMeasurableSpace& omega() const noexcept { return omega_; }
  const ProbabilityMeasure<Rational>& prob() const noexcept { return prob_; }
  const FiniteMeasurableSpace& state() const noexcept { return state_; }
  const FiniteMap& x_map() const noexcept { return x_; }

  friend bool operator==(const RandomVariable&, const RandomVariable&) = default;

private:
  FiniteMeasurableSpace omega_;
  ProbabilityMeasure<Rational> prob_;
  FiniteMeasurableSpace state_;
  FiniteMap x_;
};

/// Family {X_t} over a finite index set whose element order is the time order.
class StochasticProcess {
public:
  StochasticProcess() = default;
  StochasticProcess(FiniteMeasurableSpace omega, ProbabilityMeasure<Rational> prob, FiniteMeasurableSpace state,
                    SetObject index, std::vector<FiniteMap> x_maps)
      : omega_(std::move(omega)),
        prob_(std::move(prob)),
        state_(std::move(state)),
        index_(std::move(index)),
        x_(std::move(x_maps)) {
    if (!(prob_.space() == omega_)) throw SpaceError("probability measure must live on Omega");
    if (x_.size() != index_.size()) throw InvalidObject("need one random variable per index");
    for (const auto& m : x_) check_total(m, omega_.size(), state_.size());
  }

  const FiniteMeasurableSpace& omega() const noexcept { return omega_; }
  const ProbabilityMeasure<Rational>& prob() const noexcept { return prob_; }
  const FiniteMeasurableSpace& state() const noexcept { return state_; }
  const SetObject& index() const noexcept { return index_; }
  const std::vector<FiniteMap>& x_maps() const noexcept { return x_; }

  RandomVariable at(std::size_t t) const { return RandomVariable(omega_, prob_, state_, x_.at(t)); }

  friend bool operator==(const StochasticProcess&, const StochasticProcess&) = default;

private:
  FiniteMeasurableSpace omega_;
  ProbabilityMeasure<Rational> prob_;
  FiniteMeasurableSpace state_;
  SetObject index_;
  std::vector<FiniteMap> x_;
};

/// A point omega with its forced state X(omega).
struct RVElement {
  std::size_t omega = 0;
  std::size_t state = 0;
  friend bool operator==(const RVElement&, const RVElement&) = default;
};

/// One RVElement per t.
using STOElement = std::vector<RVElement>;

/// The graph {(omega, X(omega))}.
inline std::vector<RVElement> rv_elements(const RandomVariable& r) {
  std::vector<RVElement> out;
  for (std::size_t w = 0; w < r.omega().size(); ++w) out.push_back({w, r.x_map()(w)});
  return out;
}

/// Every T-indexed choice of omega_t with s_t = X_t(omega_t); |Omega|^|T| families.
inline std::vector<STOElement> sto_elements(const StochasticProcess& p, std::size_t bound = 1'000'000) {
  const std::size_t n = p.omega().size();
  const std::size_t t = p.index().size();
  if (std::pow(static_cast<double>(n), static_cast<double>(t)) > static_cast<double>(bound))
    throw BoundError("stochastic-process element enumeration exceeds bound");
  std::vector<STOElement> out;
  if (n == 0 && t > 0) return out;
  std::vector<std::size_t> digits(t, 0);
  while (true) {
    STOElement fam;
    for (std::size_t k = 0; k < t; ++k) fam.push_back({digits[k], p.x_maps()[k](digits[k])});
    out.push_back(std::move(fam));
    std::size_t i = t;
    while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

/// (phi1, phi2) with phi2 . X_Y == X_Z . phi1.
struct RvMorphism {
  FiniteMap omega_map;
  FiniteMap state_map;
  friend bool operator==(const RvMorphism&, const RvMorphism&) = default;
};

/// One (phi1_t, phi2_t) pair per index t.
struct StoMorphism {
  std::vector<FiniteMap> omega_maps;
  std::vector<FiniteMap> state_maps;
  friend bool operator==(const StoMorphism&, const StoMorphism&) = default;
};

inline RvMorphism compose(const RvMorphism& g, const RvMorphism& f) {
  return {compose(g.omega_map, f.omega_map), compose(g.state_map, f.state_map)};
}

inline StoMorphism compose(const StoMorphism& g, const StoMorphism& f) {
  if (g.omega_maps.size() != f.omega_maps.size()) throw CompositionError("index sets differ");
  StoMorphism out;
  for (std::size_t t = 0; t < f.omega_maps.size(); ++t) {
    out.omega_maps.push_back(compose(g.omega_maps[t], f.omega_maps[t]));
    out.state_maps.push_back(compose(g.state_maps[t], f.state_maps[t]));
  }
  return out;
}

namespace detail {
inline void check_square(const FiniteMap& phi1, const FiniteMap& phi2, const FiniteMap& xy, const FiniteMap& xz,
                         const RandomVariable& y, const std::string& where) {
  for (std::size_t w = 0; w < y.omega().size(); ++w)
    if (phi2(xy(w)) != xz(phi1(w)))
      throw CommutationError("square does not commute" + where, y.omega().points().at(w));
}
}  // namespace detail

inline RvMorphism check_rv_morphism(const FiniteMap& phi1, const FiniteMap& phi2, const RandomVariable& y,
                                    const RandomVariable& z) {
  try {
    check_total(phi1, y.omega().size(), z.omega().size());
    check_total(phi2, y.state().size(), z.state().size());
  } catch (const ViolationError& e) {
    throw CommutationError(std::string("component map is not total: ") + e.what(), "-");
  }
  detail::check_square(phi1, phi2, y.x_map(), z.x_map(), y, "");
  return {phi1, phi2};
}

inline StoMorphism check_sto_morphism(const std::vector<FiniteMap>& phi1, const std::vector<FiniteMap>& phi2,
                                      const StochasticProcess& y, const StochasticProcess& z) {
  if (!(y.index() == z.index())) throw CompositionError("processes are indexed by different sets");
  if (phi1.size() != y.index().size() || phi2.size() != y.index().size())
    throw CommutationError("need one map pair per index", "-");
  for (std::size_t t = 0; t < phi1.size(); ++t) {
    try {
      check_total(phi1[t], y.omega().size(), z.omega().size());
      check_total(phi2[t], y.state().size(), z.state().size());
    } catch (const ViolationError& e) {
      throw CommutationError(std::string("component map is not total: ") + e.what(), "-");
    }
    detail::check_square(phi1[t], phi2[t], y.x_maps()[t], z.x_maps()[t], y.at(t), " at t=" + y.index().at(t));
  }
  return {phi1, phi2};
}

/// [{0}, point mass, {0}, id]: every random variable maps uniquely to it.
inline RandomVariable terminal_rv() {
  auto one = unit_space();
  return RandomVariable(one, ProbabilityMeasure<Rational>::point_mass(one, 0), one, FiniteMap::identity(1));
}

inline StochasticProcess terminal_sto(const SetObject& index) {
  auto one = unit_space();
  return StochasticProcess(one, ProbabilityMeasure<Rational>::point_mass(one, 0), one, index,
                           std::vector<FiniteMap>(index.size(), FiniteMap::identity(1)));
}

}  // namespace catfuse

#endif  // CATFUSE_MEASURE_HPP
