#include <doctest.h>

#include <cmath>

#include "apollo/lift.hpp"

using namespace apollo;

namespace {

double angular_distance(const SphericalCap& a, const SphericalCap& b) {
  double ip = 0;
  for (std::size_t i = 0; i < a.center.size(); ++i) ip += a.center[i] * b.center[i];
  return std::acos(std::clamp(ip, -1.0, 1.0));
}

/// Cap tangency oracle: angular distance of the centers equals the sum of
/// the angular radii.
bool caps_tangent(const SphericalCap& a, const SphericalCap& b, double eps = 1e-9) {
  return std::abs(angular_distance(a, b) - (a.theta + b.theta)) < eps;
}

SphericalCap cap_at(std::vector<double> dir, double theta) {
  double n2 = 0;
  for (double x : dir) n2 += x * x;
  for (double& x : dir) x /= std::sqrt(n2);
  return {dir, theta};
}

}  // namespace

TEST_CASE("raw projection of the unit ball") {
  auto cap = project_ball_to_cap(make_ball(1.0, {0.0, 0.0}));
  REQUIRE(cap.center.size() == 3);
  CHECK(cap.center[0] == doctest::Approx(-1.0));  // centered at the south pole
  CHECK(std::abs(cap.center[1]) < 1e-12);
  CHECK(cap.theta == doctest::Approx(3.14159265358979 / 2));
}

TEST_CASE("lift of the canonical configuration") {
  auto built = build_from_graph<QSqrt3>(complete(5), 3);
  auto p = packing_cast<double>(*built.packing);
  auto lift = lift_to_caps(p);
  REQUIRE(lift.caps.size() == 5);
  for (const auto& c : lift.caps) CHECK(std::cos(c.theta) > 0);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) CHECK(caps_tangent(lift.caps[i], lift.caps[j], 1e-7));
}

TEST_CASE("lift preserves the hexlet tangency pattern") {
  auto p = packing_cast<double>(soddy_hexlet());
  auto lift = lift_to_caps(p);
  REQUIRE(lift.normalized);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(caps_tangent(lift.caps[i], lift.caps[j], 1e-6) == p.graph.adjacent(i, j));
    }
}

TEST_CASE("polar vertices") {
  auto cap = cap_at({0, 0, 1}, std::acos(0.5));
  auto v = polar_vertex(cap);
  CHECK(v[2] == doctest::Approx(2.0));  // theta = pi/3 doubles the center

  CHECK_THROWS_AS(polar_vertex(cap_at({1, 0, 0}, 1.6)), std::domain_error);

  // two equal tangent caps: <v_i, v_j> = 2 - 1/cos^2(theta) < 1
  double theta = 0.4;
  auto a = cap_at({0, 0, 1}, theta);
  auto b = cap_at({std::sin(2 * theta), 0, std::cos(2 * theta)}, theta);
  double ip = 0;
  auto va = polar_vertex(a), vb = polar_vertex(b);
  for (int k = 0; k < 3; ++k) ip += va[k] * vb[k];
  double c2 = std::cos(theta) * std::cos(theta);
  CHECK(ip == doctest::Approx(2 - 1 / c2));
  CHECK(ip < 1);

  // orthogonal boundary circles: <v, v'> = 1
  double t1 = 0.7, t2 = 0.5;
  double phi = std::acos(std::cos(t1) * std::cos(t2));
  auto c1 = cap_at({0, 0, 1}, t1);
  auto c2v = cap_at({std::sin(phi), 0, std::cos(phi)}, t2);
  auto v1 = polar_vertex(c1), v2 = polar_vertex(c2v);
  double ip2 = 0;
  for (int k = 0; k < 3; ++k) ip2 += v1[k] * v2[k];
  CHECK(ip2 == doctest::Approx(1.0));
}

TEST_CASE("edge tangency report") {
  auto built = build_from_graph<QSqrt3>(complete(5), 3);
  auto p = packing_cast<double>(*built.packing);
  auto lift = lift_to_caps(p);
  auto rep = edge_tangency_report(lift.caps, p.graph, 1e-8);
  CHECK(rep.ok());
  CHECK(rep.pairs.size() == 10);

  // closed form for two equal tangent caps: the midpoint grazes the sphere
  double theta = 0.3;
  auto a = cap_at({0, 0, 1}, theta);
  auto b = cap_at({std::sin(2 * theta), 0, std::cos(2 * theta)}, theta);
  Graph g(2);
  g.add_edge(0, 1);
  auto rep2 = edge_tangency_report({a, b}, g, 1e-9);
  CHECK(rep2.ok());
  CHECK(rep2.pairs[0].min_norm2 == doctest::Approx(1.0));
  double c2 = std::cos(theta) * std::cos(theta);
  CHECK((2 / c2 + 2 * (2 - 1 / c2)) / 4 == doctest::Approx(1.0));

  // grid-sampling oracle: the segment never dips below norm 1
  auto va = polar_vertex(a), vb = polar_vertex(b);
  double lo = 1e9;
  for (int s = 0; s <= 1000; ++s) {
    double t = s / 1000.0, n2 = 0;
    for (int k = 0; k < 3; ++k) {
      double x = (1 - t) * va[k] + t * vb[k];
      n2 += x * x;
    }
    lo = std::min(lo, n2);
  }
  CHECK(lo >= 1.0 - 1e-9);

  // disjoint caps have inner product below 1
  auto far = cap_at({0, 1, 0}, 0.2);
  Graph g2(2);
  auto rep3 = edge_tangency_report({a, far}, g2, 1e-9);
  CHECK(rep3.ok());
  CHECK(rep3.pairs[0].inner < 1);
}

TEST_CASE("stress spaces") {
  SUBCASE("simplex packing is stress-free") {
    auto built = build_from_graph<QSqrt3>(complete(5), 3);
    auto p = packing_cast<double>(*built.packing);
    auto lift = lift_to_caps(p);
    std::vector<std::vector<double>> verts;
    for (const auto& c : lift.caps) verts.push_back(polar_vertex(c));
    CHECK(stress_space(verts, p.graph).dimension == 0);
  }

  SUBCASE("a single edge carries no stress") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(stress_space({{2, 0}, {0, 2}}, g).dimension == 0);
  }

  SUBCASE("planar K4 carries exactly one stress") {
    Graph g = complete(4);
    std::vector<std::vector<double>> verts{{0, 0}, {4, 0}, {0, 4}, {1.2, 1.1}};
    auto st = stress_space(verts, g);
    CHECK(st.dimension == 1);
    REQUIRE(st.basis.size() == 1);
    // the basis vector really is an equilibrium stress
    const auto edges = g.edges();
    for (int v = 0; v < 4; ++v)
      for (int k = 0; k < 2; ++k) {
        double acc = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
          auto [i, j] = edges[e];
          if (i == v) acc += st.basis[0][e] * (verts[j][k] - verts[i][k]);
          if (j == v) acc += st.basis[0][e] * (verts[i][k] - verts[j][k]);
        }
        CHECK(std::abs(acc) < 1e-9);
      }
  }

  SUBCASE("no edges, no stress") {
    CHECK(stress_space({{1, 1}}, Graph(1)).dimension == 0);
  }
}

TEST_CASE("lift keeps contact classes") {
  auto built = build_from_graph<QSqrt3>(join(complete(3), path(4)), 3);
  REQUIRE(built.ok());
  auto p = packing_cast<double>(*built.packing);
  auto lift = lift_to_caps(p);
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      CHECK(caps_tangent(lift.caps[i], lift.caps[j], 1e-6) == p.graph.adjacent(i, j));
}
