#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apollo/linalg.hpp"
#include "apollo/scalar.hpp"

namespace apollo {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class BallKind { finite, halfspace };

/// A d-ball in the extended space: either a solid ball (curvature > 0), the
/// closed complement of a ball (curvature < 0), or a closed half-space
/// {x : <x,n> >= b} together with the point at infinity.  The normal points
/// into the half-space.
template <typename S>
struct Ball {
  BallKind kind = BallKind::finite;
  S curvature{};        // nonzero for finite balls, zero for half-spaces
  VecS<S> point;        // center (finite) or unit normal (half-space)
  S offset{};           // half-space only

  int dim() const { return int(point.size()); }
  bool finite() const { return kind == BallKind::finite; }
  S radius() const { return S(1) / abs(curvature); }

  friend bool operator==(const Ball& a, const Ball& b) {
    return a.kind == b.kind && a.curvature == b.curvature && a.point == b.point &&
           (a.kind == BallKind::finite || a.offset == b.offset);
  }
};

template <typename S>
Ball<S> make_ball(const S& curvature, VecS<S> center) {
  if (sign(curvature) == 0) throw std::invalid_argument("finite ball needs nonzero curvature");
  return Ball<S>{BallKind::finite, curvature, std::move(center), S{}};
}

template <typename S>
Ball<S> make_halfspace(VecS<S> normal, const S& offset, double eps = default_tolerance()) {
  if (!near(norm2(normal), S(1), eps)) throw std::invalid_argument("half-space normal must be unit");
  return Ball<S>{BallKind::halfspace, S{}, std::move(normal), offset};
}

enum class ContactClass { tangent, disjoint, overlapping, nested, boundary_sharing };

inline const char* to_string(ContactClass c) {
  switch (c) {
    case ContactClass::tangent: return "tangent";
    case ContactClass::disjoint: return "disjoint";
    case ContactClass::overlapping: return "overlapping";
    case ContactClass::nested: return "nested";
    case ContactClass::boundary_sharing: return "boundary-sharing";
  }
  return "?";
}

template <typename S>
struct Contact {
  ContactClass cls;
  bool at_infinity = false;
  std::optional<VecS<S>> point;  // tangency point, absent when at infinity

  bool tangent() const { return cls == ContactClass::tangent; }
};

/// Curvature-center coordinates (kappa, kappa*c) resp. (0, n), length d+1.
template <typename S>
VecS<S> curvature_center(const Ball<S>& b) {
  VecS<S> m(b.dim() + 1);
  if (b.finite()) {
    m[0] = b.curvature;
    for (int i = 0; i < b.dim(); ++i) m[i + 1] = b.curvature * b.point[i];
  } else {
    m[0] = S{};
    for (int i = 0; i < b.dim(); ++i) m[i + 1] = b.point[i];
  }
  return m;
}

/// Inverse of curvature_center for finite balls.  A zero leading entry is an
/// error: (0, n) determines the boundary direction but not the offset.
template <typename S>
Ball<S> ball_from_ccv(const VecS<S>& m) {
  if (m.size() < 2) throw std::invalid_argument("curvature-center vector too short");
  if (sign(m[0]) == 0)
    throw std::invalid_argument("curvature-center vector with zero curvature is ambiguous");
  VecS<S> c(m.size() - 1);
  for (std::size_t i = 1; i < m.size(); ++i) c[i - 1] = m[i] / m[0];
  return make_ball(m[0], std::move(c));
}

namespace detail {

/// Compares a squared center distance against a (possibly negative) target
/// distance.  The float backend takes the square root and applies the
/// absolute tolerance to distances, the exact backend compares squares.
template <typename S>
int cmp_dist2(const S& d2, const S& target, double eps) {
  if (sign(target) < 0) return 1;  // any distance beats a negative target
  if constexpr (ScalarTraits<S>::exact) {
    (void)eps;
    return sign(d2 - target * target);
  } else {
    double dist = std::sqrt(to_double(d2));
    return cmp(dist, to_double(target), eps);
  }
}

template <typename S>
bool vec_is_zero(const VecS<S>& v, double eps) {
  if constexpr (ScalarTraits<S>::exact) {
    (void)eps;
    return sign(norm2(v)) == 0;
  } else {
    return std::sqrt(to_double(norm2(v))) <= eps;
  }
}

template <typename S>
Contact<S> contact_finite_finite(const Ball<S>& b1, const Ball<S>& b2, double eps) {
  const int s1 = sign(b1.curvature), s2 = sign(b2.curvature);
  const S r1 = b1.radius(), r2 = b2.radius();
  const S d2 = norm2(b1.point - b2.point);

  if (s1 > 0 && s2 > 0) {
    const S sum = r1 + r2;
    int c = cmp_dist2(d2, sum, eps);
    if (c == 0) {
      VecS<S> t = b1.point + ((r1 / sum) * (b2.point - b1.point));
      return {ContactClass::tangent, false, std::move(t)};
    }
    if (c > 0) return {ContactClass::disjoint, false, std::nullopt};
    S dif = r1 < r2 ? r2 - r1 : r1 - r2;
    if (cmp_dist2(d2, dif, eps) <= 0) return {ContactClass::nested, false, std::nullopt};
    return {ContactClass::overlapping, false, std::nullopt};
  }
  if (s1 < 0 && s2 < 0) {
    // two ball complements always share a neighborhood of infinity
    S dif = r1 < r2 ? r2 - r1 : r1 - r2;
    if (cmp_dist2(d2, dif, eps) <= 0) return {ContactClass::nested, false, std::nullopt};
    return {ContactClass::overlapping, false, std::nullopt};
  }
  // one complement, one solid: relabel so comp is the complement
  const Ball<S>& comp = (s1 < 0) ? b1 : b2;
  const Ball<S>& ball = (s1 < 0) ? b2 : b1;
  const S R = comp.radius(), r = ball.radius();
  if (vec_is_zero(b1.point - b2.point, eps) && near(R, r, eps))
    return {ContactClass::boundary_sharing, false, std::nullopt};
  const S inner = R - r;  // internal tangency distance
  int c = cmp_dist2(d2, inner, eps);
  if (c < 0) return {ContactClass::disjoint, false, std::nullopt};  // ball inside the hole
  if (c == 0) {
    VecS<S> t = comp.point + ((R / inner) * (ball.point - comp.point));
    return {ContactClass::tangent, false, std::move(t)};
  }
  if (cmp_dist2(d2, R + r, eps) >= 0) return {ContactClass::nested, false, std::nullopt};
  return {ContactClass::overlapping, false, std::nullopt};
}

template <typename S>
Contact<S> contact_finite_halfspace(const Ball<S>& b, const Ball<S>& h, double eps) {
  const S s = dot(b.point, h.point) - h.offset;  // signed center height above the boundary
  const S r = b.radius();
  if (sign(b.curvature) > 0) {
    int c = cmp(s, -r, eps);
    if (c == 0) {
      VecS<S> t = b.point + (r * h.point);
      return {ContactClass::tangent, false, std::move(t)};
    }
    if (c < 0) return {ContactClass::disjoint, false, std::nullopt};
    if (cmp(s, r, eps) >= 0) return {ContactClass::nested, false, std::nullopt};
    return {ContactClass::overlapping, false, std::nullopt};
  }
  // complement ball vs half-space: nested when the half-space avoids the hole
  if (cmp(s, -r, eps) <= 0) return {ContactClass::nested, false, std::nullopt};
  return {ContactClass::overlapping, false, std::nullopt};
}

template <typename S>
Contact<S> contact_halfspace_halfspace(const Ball<S>& h1, const Ball<S>& h2, double eps) {
  if (vec_is_zero(h1.point + h2.point, eps)) {
    int c = cmp(h1.offset + h2.offset, S{}, eps);
    if (c > 0) return {ContactClass::tangent, true, std::nullopt};
    if (c == 0) return {ContactClass::boundary_sharing, false, std::nullopt};
    return {ContactClass::overlapping, false, std::nullopt};
  }
  if (vec_is_zero(h1.point - h2.point, eps))
    return {ContactClass::nested, false, std::nullopt};
  return {ContactClass::overlapping, false, std::nullopt};
}

}  // namespace detail

/// Classifies the contact between two balls of the same dimension.
template <typename S>
Contact<S> contact(const Ball<S>& b1, const Ball<S>& b2, double eps = default_tolerance()) {
  if (b1.dim() != b2.dim())
    throw DimensionMismatch("contact: dimensions " + std::to_string(b1.dim()) + " vs " +
                            std::to_string(b2.dim()));
  if (b1.finite() && b2.finite()) return detail::contact_finite_finite(b1, b2, eps);
  if (b1.finite()) return detail::contact_finite_halfspace(b1, b2, eps);
  if (b2.finite()) return detail::contact_finite_halfspace(b2, b1, eps);
  return detail::contact_halfspace_halfspace(b1, b2, eps);
}

/// Image of a ball under inversion in the sphere (center z, radius k).
/// Tangency classes of pairs are preserved; half-spaces through z map to
/// themselves, spheres through z open up into half-spaces.
template <typename S>
Ball<S> invert_in_sphere(const Ball<S>& b, const VecS<S>& z, const S& k) {
  if (sign(k) <= 0) throw std::invalid_argument("inversion sphere radius must be positive");
  if (int(z.size()) != b.dim()) throw DimensionMismatch("invert_in_sphere: center dimension");
  const S k2 = k * k;

  if (!b.finite()) {
    const S h = dot(z, b.point) - b.offset;
    if (sign(h) == 0) return b;  // boundary through the center: fixed set
    // image sphere through z, antipode at the inverse of the foot point
    VecS<S> c = z - ((k2 / (S(2) * h)) * b.point);
    S curv = -(S(2) * h) / k2;
    return make_ball(curv, std::move(c));
  }

  const S r = b.radius();
  VecS<S> dc = b.point - z;
  const S p = norm2(dc) - r * r;  // power of z w.r.t. the boundary sphere
  if (sign(p) == 0) {
    // boundary passes through z: the image opens up into a half-space.
    // Here |dc| = r exactly, so no square root is needed.
    const S orient = S(sign(b.curvature));
    VecS<S> n = (orient / r) * dc;
    S off = dot(z, n) + orient * (k2 / (S(2) * r));
    return Ball<S>{BallKind::halfspace, S{}, std::move(n), std::move(off)};
  }
  VecS<S> c = z + ((k2 / p) * dc);
  S curv = b.curvature * p / k2;
  return make_ball(curv, std::move(c));
}

}  // namespace apollo
