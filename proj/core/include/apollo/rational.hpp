#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace apollo {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Exact square root of a rational, when the result is again rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
  std::string s = text;
  if (s.empty()) bad();
  if (auto pos = s.find('/'); pos != std::string::npos) {
    Rational den(BigInt(s.substr(pos + 1)));
    if (den == 0) bad();
    return Rational(BigInt(s.substr(0, pos))) / den;
  }
  if (auto pos = s.find('.'); pos != std::string::npos) {
    std::string frac = s.substr(pos + 1);
    std::string whole = s.substr(0, pos);
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole.empty()) whole = neg ? "-0" : "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt v = BigInt(whole) * scale;
    BigInt f(frac.empty() ? "0" : frac);
    v += neg ? -f : f;
    return Rational(v, scale);
  }
  return Rational(BigInt(s));
}

inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Numerator/denominator as int64 when they fit (used by the JSON layer).
inline std::optional<std::pair<std::int64_t, std::int64_t>> to_int64_pair(const Rational& r) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  BigInt num = numerator(r), den = denominator(r);
  if (num < lo || num > hi || den > hi) return std::nullopt;
  return std::make_pair(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace apollo
