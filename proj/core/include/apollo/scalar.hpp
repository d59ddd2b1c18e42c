#pragma once

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "apollo/qsqrt3.hpp"
#include "apollo/rational.hpp"

namespace apollo {

/// Process-wide default comparison tolerance for the float backend.
/// Exact backends ignore it.  Overridable per call in every geometric op.
inline std::atomic<double>& tolerance_slot() {
  static std::atomic<double> eps{1e-9};
  return eps;
}
inline double default_tolerance() { return tolerance_slot().load(); }
inline void set_default_tolerance(double eps) {
  if (!(eps > 0)) throw std::invalid_argument("tolerance must be positive");
  tolerance_slot().store(eps);
}

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return to_double(r); }
  static double sqrt(double v) {
    if (v < 0) throw std::domain_error("sqrt of negative value");
    return std::sqrt(v);
  }
};

template <>
struct ScalarTraits<QSqrt3> {
  static constexpr bool exact = true;
  static QSqrt3 from_rational(const Rational& r) { return QSqrt3(r); }
  static QSqrt3 sqrt(const QSqrt3& v) {
    if (auto r = exact_sqrt(v)) return *r;
    throw std::domain_error("no exact square root in Q(sqrt3): " + v.str());
  }
};

inline int sign(double v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }
inline double to_double(double v) { return v; }

/// Three-way comparison under a tolerance.  The tolerance only applies to
/// the float backend; exact scalars compare exactly.
template <typename S>
int cmp(const S& x, const S& y, double eps) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)eps;
    return sign(x - y);
  } else {
    double d = to_double(x) - to_double(y);
    if (std::abs(d) <= eps) return 0;
    return d < 0 ? -1 : 1;
  }
}

template <typename S>
bool near(const S& x, const S& y, double eps) {
  return cmp(x, y, eps) == 0;
}

}  // namespace apollo
