#ifndef CATFUSE_FVECT_HPP
#define CATFUSE_FVECT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catfuse/error.hpp"
#include "catfuse/rational.hpp"

namespace catfuse {

/// Pseudo-metric carried by a vector space. All three are computed on
/// coordinate differences in the labeled basis.
enum class Metric { euclidean, manhattan, chebyshev };

inline std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::euclidean: return "euclidean";
    case Metric::manhattan: return "manhattan";
    case Metric::chebyshev: return "chebyshev";
  }
  return "euclidean";
}

/// Finite-dimensional real vector space with a labeled basis.
///
/// Copies share the label storage, so passing spaces around by value is cheap.
class VectorSpace {
public:
  VectorSpace() : labels_(std::make_shared<const std::vector<std::string>>()) {}

  explicit VectorSpace(std::vector<std::string> labels, Metric metric = Metric::euclidean)
      : metric_(metric) {
    std::set<std::string_view> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) {
        throw InvalidObject("duplicate basis label '" + l + "'");
      }
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  }

  std::size_t dim() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t i) const { return labels_->at(i); }
  Metric metric() const noexcept { return metric_; }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = std::find(labels_->begin(), labels_->end(), label);
    if (it == labels_->end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_->begin());
  }

  VectorSpace with_metric(Metric m) const {
    VectorSpace out = *this;
    out.metric_ = m;
    return out;
  }

  friend bool operator==(const VectorSpace& a, const VectorSpace& b) {
    if (a.metric_ != b.metric_) return false;
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  Metric metric_ = Metric::euclidean;
};

/// Dense row-major matrix.
template <Scalar S>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw SpaceError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<S> column(std::size_t j) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw CompositionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b(k, j))) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Largest absolute entrywise difference; used for float comparisons.
template <Scalar S>
double max_abs_difference(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw SpaceError("shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(to_double(S(a(i, j) - b(i, j)))));
  return worst;
}

template <Scalar S>
class Vector {
public:
  Vector() = default;
  Vector(VectorSpace space, std::vector<S> coords) : space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim()) {
      throw SpaceError("vector has " + std::to_string(coords_.size()) + " coordinates but space has dimension " +
                       std::to_string(space_.dim()));
    }
  }

  static Vector zero(const VectorSpace& space) { return Vector(space, std::vector<S>(space.dim(), S(0))); }

  static Vector basis(const VectorSpace& space, std::size_t i) {
    if (i >= space.dim()) throw SpaceError("basis index out of range");
    Vector v = zero(space);
    v.coords_[i] = S(1);
    return v;
  }

  static Vector basis(const VectorSpace& space, std::string_view label) {
    auto i = space.index_of(label);
    if (!i) throw SpaceError("no basis label '" + std::string(label) + "'");
    return basis(space, *i);
  }

  const VectorSpace& space() const noexcept { return space_; }
  const std::vector<S>& coords() const noexcept { return coords_; }
  const S& operator[](std::size_t i) const { return coords_[i]; }

  friend Vector operator+(const Vector& a, const Vector& b) {
    if (!(a.space_ == b.space_)) throw SpaceError("adding vectors from different spaces");
    std::vector<S> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return Vector(a.space_, std::move(c));
  }
  friend Vector operator*(const S& k, const Vector& v) {
    std::vector<S> c(v.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = k * v.coords_[i];
    return Vector(v.space_, std::move(c));
  }
  Vector operator-() const { return S(-1) * *this; }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.space_ == b.space_ && a.coords_ == b.coords_;
  }

private:
  VectorSpace space_;
  std::vector<S> coords_;
};

/// Morphism of FVECT: a matrix of shape codomain.dim x domain.dim.
template <Scalar S>
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(VectorSpace domain, VectorSpace codomain, Matrix<S> matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim()) {
      throw SpaceError("matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                       " but the map needs " + std::to_string(codomain_.dim()) + "x" +
                       std::to_string(domain_.dim()));
    }
  }

  static LinearMap identity(const VectorSpace& v) { return LinearMap(v, v, Matrix<S>::identity(v.dim())); }
  static LinearMap zero(const VectorSpace& from, const VectorSpace& to) {
    return LinearMap(from, to, Matrix<S>(to.dim(), from.dim()));
  }

  const VectorSpace& domain() const noexcept { return domain_; }
  const VectorSpace& codomain() const noexcept { return codomain_; }
  const Matrix<S>& matrix() const noexcept { return matrix_; }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
  }

private:
  VectorSpace domain_;
  VectorSpace codomain_;
  Matrix<S> matrix_;
};

/// g after f.
template <Scalar S>
LinearMap<S> compose(const LinearMap<S>& g, const LinearMap<S>& f) {
  if (!(f.codomain() == g.domain())) {
    throw CompositionError("cannot compose: codomain of first map (dim " + std::to_string(f.codomain().dim()) +
                           ") differs from domain of second (dim " + std::to_string(g.domain().dim()) + ")");
  }
  return LinearMap<S>(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

template <Scalar S>
Vector<S> apply(const LinearMap<S>& f, const Vector<S>& v) {
  if (!(v.space() == f.domain())) throw SpaceError("vector does not live in the map's domain");
  const auto& m = f.matrix();
  std::vector<S> out(m.rows(), S(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j)) && !is_zero(v[j])) out[i] += m(i, j) * v[j];
  return Vector<S>(f.codomain(), std::move(out));
}

/// Result of fraction-free elimination: which columns carry pivots.
struct EchelonResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Bareiss fraction-free elimination, first nonzero entry as pivot, columns
/// scanned left to right. Pivot columns form a maximal independent subset.
template <Scalar S>
  requires(ScalarTraits<S>::exact)
EchelonResult echelon(Matrix<S> m) {
  EchelonResult result;
  S prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const S pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = (pivot * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = S(0);
    }
    prev = pivot;
    result.pivot_columns.push_back(c);
    ++r;
  }
  result.rank = r;
  return result;
}

template <Scalar S>
  requires(ScalarTraits<S>::exact)
std::size_t rank(const Matrix<S>& m) {
  return echelon(m).rank;
}

/// Span of a generator list inside an ambient space.
template <Scalar S>
class Subspace {
public:
  const VectorSpace& ambient() const noexcept { return ambient_; }
  const std::vector<Vector<S>>& generators() const noexcept { return generators_; }
  /// Independent subset of the generators, in generator order.
  const std::vector<Vector<S>>& reduced_basis() const noexcept { return reduced_; }
  const std::vector<std::size_t>& basis_indices() const noexcept { return indices_; }
  std::size_t rank() const noexcept { return reduced_.size(); }

  /// Generators as columns of an ambient.dim x |generators| matrix.
  Matrix<S> generator_matrix() const { return columns(generators_); }

  bool contains(const Vector<S>& v) const
    requires(ScalarTraits<S>::exact)
  {
    if (!(v.space() == ambient_)) throw SpaceError("vector is not in the ambient space");
    auto cols = reduced_;
    cols.push_back(v);
    return catfuse::rank(columns(cols)) == reduced_.size();
  }

  /// Coefficients of `v` over the reduced basis (Gauss-Jordan on [B | v]).
  std::vector<S> coordinates(const Vector<S>& v) const
    requires(ScalarTraits<S>::exact)
  {
    if (!(v.space() == ambient_)) throw SpaceError("vector is not in the ambient space");
    const std::size_t n = ambient_.dim(), k = reduced_.size();
    auto cols = reduced_;
    cols.push_back(v);
    Matrix<S> m = columns(cols);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < n; ++c) {
      std::size_t p = r;
      while (p < n && is_zero(m(p, c))) ++p;
      if (p == n) continue;
      for (std::size_t j = 0; j <= k; ++j) std::swap(m(p, j), m(r, j));
      const S inv = S(1) / m(r, c);
      for (std::size_t j = 0; j <= k; ++j) m(r, j) *= inv;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r || is_zero(m(i, c))) continue;
        const S f = m(i, c);
        for (std::size_t j = 0; j <= k; ++j) m(i, j) -= f * m(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    for (std::size_t i = r; i < n; ++i)
      if (!is_zero(m(i, k))) throw SpaceError("vector is not in the subspace");
    std::vector<S> out(k, S(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out[pivots[i]] = m(i, k);
    return out;
  }

private:
  template <Scalar T>
    requires(ScalarTraits<T>::exact)
  friend Subspace<T> span(const VectorSpace& ambient, std::vector<Vector<T>> generators);

  Matrix<S> columns(const std::vector<Vector<S>>& vs) const {
    Matrix<S> m(ambient_.dim(), vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
      for (std::size_t i = 0; i < ambient_.dim(); ++i) m(i, j) = vs[j][i];
    return m;
  }

  VectorSpace ambient_;
  std::vector<Vector<S>> generators_;
  std::vector<Vector<S>> reduced_;
  std::vector<std::size_t> indices_;
};

template <Scalar S>
  requires(ScalarTraits<S>::exact)
Subspace<S> span(const VectorSpace& ambient, std::vector<Vector<S>> generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!(generators[i].space() == ambient)) {
      throw SpaceError("generator " + std::to_string(i) + " is not in the ambient space");
    }
  }
  Subspace<S> s;
  s.ambient_ = ambient;
  s.generators_ = std::move(generators);
  auto ech = echelon(s.generator_matrix());
  s.indices_ = ech.pivot_columns;
  for (auto j : s.indices_) s.reduced_.push_back(s.generators_[j]);
  return s;
}

/// Distance under the space's pseudo-metric.
template <Scalar S>
double pseudo_distance(const Vector<S>& v, const Vector<S>& w) {
  if (!(v.space() == w.space())) throw SpaceError("pseudo_distance between different spaces");
  double acc = 0.0;
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    const double d = std::abs(to_double(S(v[i] - w[i])));
    switch (v.space().metric()) {
      case Metric::euclidean: acc += d * d; break;
      case Metric::manhattan: acc += d; break;
      case Metric::chebyshev: acc = std::max(acc, d); break;
    }
  }
  return v.space().metric() == Metric::euclidean ? std::sqrt(acc) : acc;
}

template <Scalar S>
std::string to_string(const Vector<S>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (i) os << ",";
    os << ScalarTraits<S>::to_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace catfuse

#endif  // CATFUSE_FVECT_HPP
