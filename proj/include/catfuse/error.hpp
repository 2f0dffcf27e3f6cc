#ifndef CATFUSE_ERROR_HPP
#define CATFUSE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catfuse {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define CATFUSE_DEFINE_ERROR(Name)            \
  class Name : public Error {                 \
  public:                                     \
    using Error::Error;                       \
  }

// Morphism endpoints or matrix shapes do not line up.
CATFUSE_DEFINE_ERROR(CompositionError);
// A vector, measure or kernel was used with the wrong space.
CATFUSE_DEFINE_ERROR(SpaceError);
// An object violates its own invariants (duplicate labels, bad order, ...).
CATFUSE_DEFINE_ERROR(InvalidObject);
CATFUSE_DEFINE_ERROR(WindowRequired);
CATFUSE_DEFINE_ERROR(IntervalError);
CATFUSE_DEFINE_ERROR(FunctorError);
CATFUSE_DEFINE_ERROR(BoundError);
CATFUSE_DEFINE_ERROR(IncompleteSheafError);
CATFUSE_DEFINE_ERROR(IncompleteAssignmentError);
CATFUSE_DEFINE_ERROR(AnalyticMissing);
CATFUSE_DEFINE_ERROR(PayloadError);
CATFUSE_DEFINE_ERROR(ConfigError);
CATFUSE_DEFINE_ERROR(DomainError);
// Malformed input file.
CATFUSE_DEFINE_ERROR(ParseError);

#undef CATFUSE_DEFINE_ERROR

/// A candidate morphism broke its category's preservation law. `witness`
/// names one concrete tuple, pair or sampled element where it fails.
class ViolationError : public Error {
public:
  ViolationError(const std::string& what, std::string witness)
      : Error(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

private:
  std::string witness_;
};

/// A random-variable or process morphism square fails to commute at `omega`.
class CommutationError : public Error {
public:
  CommutationError(const std::string& what, std::string omega)
      : Error(what + " (witness omega: " + omega + ")"), omega_(std::move(omega)) {}
  const std::string& omega() const noexcept { return omega_; }

private:
  std::string omega_;
};

/// A face set is not downward closed; lists every missing subface.
class ClosureError : public Error {
public:
  explicit ClosureError(std::vector<std::vector<std::string>> missing)
      : Error(describe(missing)), missing_(std::move(missing)) {}
  const std::vector<std::vector<std::string>>& missing() const noexcept { return missing_; }

private:
  static std::string describe(const std::vector<std::vector<std::string>>& missing) {
    std::string out = "complex is not downward closed; missing subfaces:";
    for (const auto& face : missing) {
      out += " [";
      for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += ",";
        out += face[i];
      }
      out += "]";
    }
    return out;
  }

  std::vector<std::vector<std::string>> missing_;
};

}  // namespace catfuse

#endif  // CATFUSE_ERROR_HPP
