#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apollo/builder.hpp"

namespace apollo {

/// Spherical cap on the unit sphere S^d in R^(d+1).
struct SphericalCap {
  std::vector<double> center;  // unit vector
  double theta = 0.0;          // angular radius in (0, pi)

  int ambient_dim() const { return int(center.size()); }
};

struct NormalizationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inverse stereographic projection of a single ball, no re-centering; the
/// resulting angular radius may reach or exceed pi/2.
SphericalCap project_ball_to_cap(const Ball<double>& b);

struct LiftResult {
  std::vector<SphericalCap> caps;
  bool normalized = false;               // an inversion was needed first
  std::vector<double> inversion_center;  // set when normalized
};

/// Lifts a packing to spherical caps of angular radius < pi/2.  If the raw
/// projection produces a cap at or beyond a hemisphere, the packing is first
/// inverted about a point in a gap (next to a finite tangency point) and
/// rescaled into the unit ball; a second failure is an error, not a retry.
LiftResult lift_to_caps(const Packing<double>& p);

/// v = c / cos(theta); requires theta < pi/2.
std::vector<double> polar_vertex(const SphericalCap& cap);

struct EdgePairCheck {
  int i, j;
  bool edge;
  double min_norm2;  // min of |x|^2 along the vertex segment
  double inner;      // <v_i, v_j>
  bool ok;
};

struct EdgeTangencyReport {
  std::vector<EdgePairCheck> pairs;
  std::vector<EdgePairCheck> violations;
  bool ok() const { return violations.empty(); }
};

/// For every edge the polar-vertex segment must graze the unit sphere
/// (min |x|^2 = 1); non-edges need <v_i,v_j> < 1 or a segment clear of the
/// sphere.
EdgeTangencyReport edge_tangency_report(const std::vector<SphericalCap>& caps, const Graph& g,
                                        double eps = 1e-8);

struct StressSpace {
  int dimension = 0;
  std::vector<std::vector<double>> basis;  // each entry: one weight per edge
};

/// Null space of the equilibrium matrix sum_j T(ij)(v_j - v_i) = 0.
/// Singular values below rank_eps * sigma_max count as zero.
StressSpace stress_space(const std::vector<std::vector<double>>& vertices, const Graph& g,
                         double rank_eps = 1e-8);

}  // namespace apollo
