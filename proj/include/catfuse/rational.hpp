#ifndef CATFUSE_RATIONAL_HPP
#define CATFUSE_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include "catfuse/error.hpp"

namespace catfuse {

/// Exact rational used for every structural matrix (functor images,
/// restriction maps, kernels built from counted data).
using Rational = mpq_class;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return x == 0.0; }
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
  static std::string to_string(double x) {
    std::string s = std::to_string(x);
    return s;
  }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { a + b };
  { a * b };
  { ScalarTraits<S>::is_zero(a) } -> std::convertible_to<bool>;
  { ScalarTraits<S>::to_double(a) } -> std::convertible_to<double>;
};

template <Scalar S>
bool is_zero(const S& x) {
  return ScalarTraits<S>::is_zero(x);
}

template <Scalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

/// Parses "3", "-2/5" or a decimal such as "0.25" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  try {
    auto dot = s.find('.');
    if (dot != std::string::npos || s.find_first_of("eE") != std::string::npos) {
      // Decimal literal: read digits exactly rather than through a double.
      if (s.find_first_of("eE") != std::string::npos) {
        return Rational(std::stod(s));
      }
      bool neg = s[0] == '-';
      std::string digits = s.substr(neg || s[0] == '+' ? 1 : 0);
      dot = digits.find('.');
      std::string whole = digits.substr(0, dot);
      std::string frac = digits.substr(dot + 1);
      if (whole.empty()) whole = "0";
      mpz_class num(whole + frac, 10);  // base 0 would read a leading 0 as octal
      mpz_class den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Rational r(num, den);
      r.canonicalize();
      return neg ? Rational(-r) : r;
    }
    Rational r(s, 10);
    if (sgn(r.get_den()) == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational literal: " + s);
  }
}

}  // namespace catfuse

#endif  // CATFUSE_RATIONAL_HPP
