#pragma once

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "apollo/rational.hpp"

namespace apollo {

/// An element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
///
/// This is the natural coefficient field for 3-dimensional Apollonian
/// packings grown from the canonical frame: curvatures stay rational and
/// only the last center coordinate picks up sqrt(3) factors.  All field
/// operations and sign tests are exact.
class QSqrt3 {
 public:
  QSqrt3() = default;
  QSqrt3(int v) : a_(v) {}                       // NOLINT(google-explicit-constructor)
  QSqrt3(const Rational& v) : a_(v) {}           // NOLINT(google-explicit-constructor)
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  static QSqrt3 sqrt3() { return QSqrt3(Rational(0), Rational(1)); }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && apollo::is_integer(a_); }

  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) {
    return QSqrt3(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QSqrt3 operator-(const QSqrt3& x, const QSqrt3& y) {
    return QSqrt3(x.a_ - y.a_, x.b_ - y.b_);
  }
  QSqrt3 operator-() const { return QSqrt3(-a_, -b_); }
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
    return QSqrt3(x.a_ * y.a_ + 3 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend QSqrt3 operator/(const QSqrt3& x, const QSqrt3& y) {
    // 1/(c+e*sqrt3) = (c-e*sqrt3)/(c^2-3e^2); the norm vanishes only at 0.
    Rational norm = y.a_ * y.a_ - 3 * y.b_ * y.b_;
    if (norm == 0) throw std::domain_error("QSqrt3: division by zero");
    return QSqrt3((x.a_ * y.a_ - 3 * x.b_ * y.b_) / norm, (x.b_ * y.a_ - x.a_ * y.b_) / norm);
  }
  QSqrt3& operator+=(const QSqrt3& y) { return *this = *this + y; }
  QSqrt3& operator-=(const QSqrt3& y) { return *this = *this - y; }
  QSqrt3& operator*=(const QSqrt3& y) { return *this = *this * y; }
  QSqrt3& operator/=(const QSqrt3& y) { return *this = *this / y; }

  friend bool operator==(const QSqrt3& x, const QSqrt3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt3& x, const QSqrt3& y) { return !(x == y); }

  /// Exact sign: compares a against -b*sqrt(3) by comparing squares.
  int sgn() const {
    int sa = apollo::sign(a_), sb = apollo::sign(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|*sqrt(3)  <=>  a^2 vs 3 b^2
    int c = (a_ * a_ < 3 * b_ * b_) ? -1 : (a_ * a_ == 3 * b_ * b_ ? 0 : 1);
    return c == 0 ? 0 : (c > 0 ? sa : sb);
  }

  friend bool operator<(const QSqrt3& x, const QSqrt3& y) { return (x - y).sgn() < 0; }
  friend bool operator>(const QSqrt3& x, const QSqrt3& y) { return (x - y).sgn() > 0; }
  friend bool operator<=(const QSqrt3& x, const QSqrt3& y) { return (x - y).sgn() <= 0; }
  friend bool operator>=(const QSqrt3& x, const QSqrt3& y) { return (x - y).sgn() >= 0; }

  double to_double() const {
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(3.0);
  }

  std::string str() const {
    if (b_ == 0) return apollo::to_string(a_);
    std::string s = apollo::to_string(b_) + "*sqrt3";
    if (a_ != 0) s = apollo::to_string(a_) + (b_ > 0 ? "+" : "") + s;
    return s;
  }

 private:
  Rational a_, b_;
};

inline std::ostream& operator<<(std::ostream& os, const QSqrt3& x) { return os << x.str(); }

inline int sign(const QSqrt3& x) { return x.sgn(); }
inline QSqrt3 abs(const QSqrt3& x) { return x.sgn() < 0 ? -x : x; }
inline double to_double(const QSqrt3& x) { return x.to_double(); }

/// Exact square root within the field: handles rational squares and
/// 3*(rational square); anything else has no root in Q(sqrt 3) of this form.
inline std::optional<QSqrt3> exact_sqrt(const QSqrt3& x) {
  if (x.sgn() < 0) return std::nullopt;
  if (!x.is_rational()) return std::nullopt;
  if (auto r = exact_sqrt(x.rational_part())) return QSqrt3(*r);
  if (auto r = exact_sqrt(x.rational_part() / 3)) return QSqrt3(Rational(0), *r);
  return std::nullopt;
}

}  // namespace apollo
