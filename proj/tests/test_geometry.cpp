#include <doctest.h>

#include <random>

#include "apollo/geometry.hpp"
#include "apollo/qsqrt3.hpp"

using namespace apollo;

namespace {

Ball<double> unit_ball(std::vector<double> c) { return make_ball(1.0, std::move(c)); }

Ball<double> lower_halfspace() { return make_halfspace<double>({-1, 0, 0}, 0); }
Ball<double> upper_halfspace() { return make_halfspace<double>({1, 0, 0}, 2); }

std::mt19937 rng(12345);

double uniform(double lo, double hi) {
  return lo + (hi - lo) * (rng() / double(std::mt19937::max()));
}

Ball<double> random_ball(int d) {
  switch (rng() % 4) {
    case 0: {  // half-space
      VecS<double> n(d);
      double n2 = 0;
      do {
        n2 = 0;
        for (auto& x : n) {
          x = uniform(-1, 1);
          n2 += x * x;
        }
      } while (n2 < 0.1);
      for (auto& x : n) x /= std::sqrt(n2);
      return make_halfspace(std::move(n), uniform(-2, 2));
    }
    case 1: {  // complement
      VecS<double> c(d);
      for (auto& x : c) x = uniform(-2, 2);
      return make_ball(uniform(-2.0, -0.5), std::move(c));
    }
    default: {
      VecS<double> c(d);
      for (auto& x : c) x = uniform(-2, 2);
      return make_ball(uniform(0.5, 2.0), std::move(c));
    }
  }
}

}  // namespace

TEST_CASE("contact of finite balls") {
  auto a = unit_ball({0, 0, 0});
  CHECK(contact(a, unit_ball({2, 0, 0})).cls == ContactClass::tangent);
  CHECK(contact(a, unit_ball({2.5, 0, 0})).cls == ContactClass::disjoint);
  CHECK(contact(a, unit_ball({1.5, 0, 0})).cls == ContactClass::overlapping);
  CHECK(contact(a, make_ball(4.0, {0.1, 0, 0})).cls == ContactClass::nested);

  auto t = contact(a, unit_ball({2, 0, 0}));
  REQUIRE(t.point.has_value());
  CHECK((*t.point)[0] == doctest::Approx(1.0));
}

TEST_CASE("contact involving half-spaces") {
  // the two half-spaces of the canonical frame are tangent at infinity
  auto c = contact(lower_halfspace(), upper_halfspace());
  CHECK(c.cls == ContactClass::tangent);
  CHECK(c.at_infinity);

  CHECK(contact(lower_halfspace(), unit_ball({1, 5, -3})).cls == ContactClass::tangent);
  CHECK(contact(lower_halfspace(), unit_ball({1.5, 0, 0})).cls == ContactClass::disjoint);
  CHECK(contact(lower_halfspace(), unit_ball({0.5, 0, 0})).cls == ContactClass::overlapping);
  CHECK(contact(lower_halfspace(), unit_ball({-2, 0, 0})).cls == ContactClass::nested);

  // coincident boundaries share more than a point
  CHECK(contact(lower_halfspace(), make_halfspace<double>({1, 0, 0}, 0)).cls ==
        ContactClass::boundary_sharing);
  // same normal: one contains the other
  CHECK(contact(lower_halfspace(), make_halfspace<double>({-1, 0, 0}, -1)).cls ==
        ContactClass::nested);
  // skew normals always overlap
  CHECK(contact(lower_halfspace(), make_halfspace<double>({0, 1, 0}, 0)).cls ==
        ContactClass::overlapping);
}

TEST_CASE("contact with negative curvature") {
  auto comp = make_ball(-1.0, VecS<double>{0, 0, 0});  // complement of the unit ball
  CHECK(contact(comp, make_ball(2.0, {0.5, 0, 0})).cls == ContactClass::tangent);
  CHECK(contact(comp, make_ball(4.0, {0.5, 0, 0})).cls == ContactClass::disjoint);
  CHECK(contact(comp, unit_ball({3, 0, 0})).cls == ContactClass::nested);
  CHECK(contact(comp, unit_ball({1, 0, 0})).cls == ContactClass::overlapping);
  CHECK(contact(comp, make_ball(-1.0, VecS<double>{5, 0, 0})).cls == ContactClass::overlapping);
  CHECK(contact(comp, make_ball(-0.25, VecS<double>{0.5, 0, 0})).cls == ContactClass::nested);
  // ball and complement over the same sphere
  CHECK(contact(comp, unit_ball({0, 0, 0})).cls == ContactClass::boundary_sharing);
}

TEST_CASE("canonical unit balls touch at distance 2") {
  const double s = std::sqrt(1.0 / 3.0);
  auto b1 = unit_ball({1, 1, s});
  auto b2 = unit_ball({1, 0, -2 * s});
  // independent oracle: the squared center distance is 1 + 3 = 4
  double d2 = 1.0 + (3 * s) * (3 * s);
  CHECK(d2 == doctest::Approx(4.0));
  CHECK(contact(b1, b2).cls == ContactClass::tangent);
}

TEST_CASE("curvature-center coordinates") {
  CHECK(curvature_center(unit_ball({0, 0, 0})) == VecS<double>{1, 0, 0, 0});
  CHECK(curvature_center(lower_halfspace()) == VecS<double>{0, -1, 0, 0});
  CHECK(curvature_center(make_ball(3.0, {5.0 / 3, 0, 0})) == VecS<double>{3, 5, 0, 0});
}

TEST_CASE("ball from curvature-center vector") {
  auto b = ball_from_ccv(VecS<double>{1, 0, 0, 0});
  CHECK(b == unit_ball({0, 0, 0}));
  auto c = ball_from_ccv(VecS<double>{3, 1, 0, 0});
  CHECK(c.curvature == 3.0);
  CHECK(c.point[0] == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(ball_from_ccv(VecS<double>{0, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("round trip through coordinates") {
  for (int t = 0; t < 50; ++t) {
    auto b = random_ball(3);
    if (!b.finite()) continue;
    auto back = ball_from_ccv(curvature_center(b));
    CHECK(back.curvature == doctest::Approx(b.curvature));
    for (int i = 0; i < 3; ++i) CHECK(back.point[i] == doctest::Approx(b.point[i]));
  }
  // exact: equality on the nose
  Ball<QSqrt3> e = make_ball(QSqrt3(3), VecS<QSqrt3>{QSqrt3(Rational(1, 3)), QSqrt3(0),
                                                     QSqrt3(0, Rational(2, 3))});
  CHECK(ball_from_ccv(curvature_center(e)) == e);
}

TEST_CASE("inversion fixes the inversion sphere") {
  auto b = unit_ball({0, 0, 0});
  auto img = invert_in_sphere(b, {0, 0, 0}, 1.0);
  CHECK(img == b);
}

TEST_CASE("inversion of a half-space off the center") {
  auto h = lower_halfspace();
  auto img = invert_in_sphere(h, {1.0, 0, 0}, 1.0);
  REQUIRE(img.finite());
  CHECK(img.curvature == doctest::Approx(2.0));
  CHECK(img.point[0] == doctest::Approx(0.5));
  // oracle: images of boundary points must land on the image sphere
  for (auto& p : std::vector<VecS<double>>{{0, 0, 0}, {0, 1, 0}, {0, -0.5, 2}}) {
    VecS<double> v = p - VecS<double>{1, 0, 0};
    double n2 = norm2(v);
    VecS<double> q = VecS<double>{1, 0, 0} + ((1.0 / n2) * v);
    CHECK(std::sqrt(norm2(q - img.point)) == doctest::Approx(img.radius()));
  }
  CHECK(contact(h, img).cls == ContactClass::tangent);
}

TEST_CASE("half-space through the center is fixed") {
  auto h = lower_halfspace();
  CHECK(invert_in_sphere(h, {0, 1, 1}, 2.0) == h);
}

TEST_CASE("ball through the center opens into a half-space") {
  auto b = unit_ball({1, 0, 0});
  auto img = invert_in_sphere(b, {0, 0, 0}, 1.0);
  CHECK(!img.finite());
  CHECK(img.point[0] == doctest::Approx(1.0));
  CHECK(img.offset == doctest::Approx(0.5));
}

TEST_CASE("contact survives inversion") {
  int done = 0;
  while (done < 100) {
    auto a = random_ball(3), b = random_ball(3);
    VecS<double> z{uniform(-3, 3), uniform(-3, 3), uniform(-3, 3)};
    // keep the inversion center clear of both boundaries
    auto margin = [&](const Ball<double>& q) {
      if (q.finite()) return std::abs(std::sqrt(norm2(z - q.point)) - q.radius());
      return std::abs(dot(z, q.point) - q.offset);
    };
    if (margin(a) < 0.05 || margin(b) < 0.05) continue;
    auto before = contact(a, b).cls;
    auto after = contact(invert_in_sphere(a, z, 1.5), invert_in_sphere(b, z, 1.5), 1e-7).cls;
    CHECK(before == after);
    ++done;
  }
}

TEST_CASE("contact is symmetric") {
  for (int t = 0; t < 100; ++t) {
    auto a = random_ball(3), b = random_ball(3);
    CHECK(contact(a, b).cls == contact(b, a).cls);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(contact(unit_ball({0, 0, 0}), unit_ball({0, 0})), DimensionMismatch);
}
