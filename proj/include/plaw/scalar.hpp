#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace plaw {

/// Arbitrary-precision rational, always held in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

enum class Mode { exact, floating };

std::string_view to_string(Mode mode);
/// Accepts "exact" or "float".
Mode parse_mode(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Mode mode = Mode::exact;
  static Rational from_integer(std::int64_t v) { return Rational(v); }
  static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  /// Integers, "p/q" fractions and decimal strings (with optional exponent),
  /// converted without loss.
  static Rational parse(std::string_view text);
  /// Reduced fraction, "p/q" or "p".
  static std::string format(const Rational& v);
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr Mode mode = Mode::floating;
  static double from_integer(std::int64_t v) { return static_cast<double>(v); }
  static double abs(double v) { return v < 0 ? -v : v; }
  static double parse(std::string_view text);
  /// 17 significant digits.
  static std::string format(double v);
  static double to_double(double v) { return v; }
};

/// The arithmetic substrate shared by every measure computation. Exactly two
/// models exist: Rational (exact mode) and double (float mode).
template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { ScalarTraits<T>::mode } -> std::convertible_to<Mode>;
  { ScalarTraits<T>::format(a) } -> std::convertible_to<std::string>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

template <Scalar T>
inline constexpr Mode mode_of = ScalarTraits<T>::mode;

template <Scalar T>
std::string format_scalar(const T& v) {
  return ScalarTraits<T>::format(v);
}

template <Scalar T>
T parse_scalar(std::string_view text) {
  return ScalarTraits<T>::parse(text);
}

}  // namespace plaw
