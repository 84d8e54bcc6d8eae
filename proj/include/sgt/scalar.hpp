#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>

#include "sgt/errors.hpp"

namespace sgt {

// Exact arithmetic carrier. All kernel and character code is generic over the
// scalar type: Rational for identity checking, double for Monte Carlo work.
using Rational = boost::multiprecision::cpp_rational;

template <class T>
inline constexpr bool scalar_is_exact = false;
template <>
inline constexpr bool scalar_is_exact<Rational> = true;

// base^e by binary exponentiation, e possibly negative. Deterministic for
// doubles (no libm pow), exact for rationals.
template <class T>
T pow_int(T base, std::int64_t e) {
  if (e < 0) {
    base = T(1) / base;
    e = -e;
  }
  T acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
T scalar_from_ratio(std::int64_t num, std::int64_t den);

template <>
inline double scalar_from_ratio<double>(std::int64_t num, std::int64_t den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

template <>
inline Rational scalar_from_ratio<Rational>(std::int64_t num, std::int64_t den) {
  return Rational(num, den);
}

// Accepts "p/q" or a plain integer. Decimal literals are rejected: exact mode
// must not silently degrade.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [](const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw DomainError("invalid rational literal: '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("invalid rational literal: '" + s + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  long long num = parse_int(text.substr(0, slash));
  long long den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

inline std::string format_scalar(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

inline std::string format_scalar(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace sgt
