#pragma once

// Exact rational values. Probabilities are rationals end to end; decimal
// strings are presentation only.

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plaus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "m/n" (or bare "m" when the denominator is 1).
inline std::string to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

/// Decimal rendering rounded half away from zero to `digits` places.
/// Approximate by nature; the rational string is the value of record.
inline std::string to_decimal_string(const Rational& r, unsigned digits = 6) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2); // round half up
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::ostringstream out;
  if (negative && scaled != 0) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(digits - f.size(), '0') << f;
  }
  return out.str();
}

/// Parses "m/n" or "m"; the denominator must be positive.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("parse_rational: non-positive denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

inline Rational abs_difference(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

} // namespace plaus
