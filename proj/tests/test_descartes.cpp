#include <doctest.h>

#include <random>

#include "apollo/descartes.hpp"

using namespace apollo;

namespace {

const QSqrt3 S3 = QSqrt3::sqrt3();
const QSqrt3 third(Rational(1, 3));

/// M_0, the curvature-center matrix of the canonical frame for d = 3.
Mat<QSqrt3> m0() {
  Mat<QSqrt3> m(5, 4);
  auto row = [&](int i, QSqrt3 a, QSqrt3 b, QSqrt3 c, QSqrt3 d) {
    m(i, 0) = a, m(i, 1) = b, m(i, 2) = c, m(i, 3) = d;
  };
  row(0, 0, -1, 0, 0);
  row(1, 0, 1, 0, 0);
  row(2, 1, 1, 1, third * S3);
  row(3, 1, 1, -1, third * S3);
  row(4, 1, 1, 0, QSqrt3(-2) * third * S3);
  return m;
}

}  // namespace

TEST_CASE("q matrix entries") {
  auto q2 = q_matrix<double>(2);
  REQUIRE(q2.rows() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(q2(i, j) == doctest::Approx(i == j ? 0.5 : -0.5));
  auto q3 = q_matrix<Rational>(3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(q3(i, j) == (i == j ? Rational(2, 3) : Rational(-1, 3)));
  // row sums: Q_d e = (1 - (d+2)/d) e
  for (int d = 2; d <= 8; ++d) {
    auto q = q_matrix<Rational>(d);
    for (int i = 0; i < d + 2; ++i) {
      Rational s;
      for (int j = 0; j < d + 2; ++j) s += q(i, j);
      CHECK(s == Rational(1) - Rational(d + 2, d));
    }
  }
}

TEST_CASE("canonical configuration reproduces M_0 for d=3") {
  auto cfg = canonical_configuration<QSqrt3>(3);
  CHECK(curvature_center_matrix(cfg) == m0());
}

TEST_CASE("canonical configuration is valid for d=2..8") {
  for (int d = 2; d <= 8; ++d) {
    auto rep = validate(canonical_configuration<double>(d));
    CAPTURE(d);
    CHECK(rep.valid(1e-9));
  }
}

TEST_CASE("exact validation of the canonical frame") {
  auto rep = validate(canonical_configuration<QSqrt3>(3));
  CHECK(rep.eq1_residual.is_zero());
  CHECK(rep.eq2_residual.is_zero());
  CHECK(rep.bad_pairs.empty());
  // curvatures (0,0,1,1,1): sum of squares 3 equals (1/3) * 3^2
  auto cfg = canonical_configuration<QSqrt3>(3);
  QSqrt3 sum, sum2;
  for (auto& b : cfg.balls) {
    sum += b.curvature;
    sum2 += b.curvature * b.curvature;
  }
  CHECK(sum == QSqrt3(3));
  CHECK(sum2 == QSqrt3(3));
}

TEST_CASE("two lines and two disks form the d=2 frame") {
  auto cfg = canonical_configuration<QSqrt3>(2);
  CHECK(cfg.balls[0].kind == BallKind::halfspace);
  CHECK(cfg.balls[1].kind == BallKind::halfspace);
  CHECK(cfg.balls[2].curvature == QSqrt3(1));
  CHECK(cfg.balls[3].curvature == QSqrt3(1));
  CHECK(validate(cfg).valid(0.0));
}

TEST_CASE("perturbation breaks validation") {
  auto cfg = canonical_configuration<double>(3);
  cfg.balls[2] = make_ball(1.0 / (1 + 1e-3), cfg.balls[2].point);
  auto rep = validate(cfg, 1e-9);
  CHECK(!rep.valid(1e-9));
  CHECK(!rep.bad_pairs.empty());
}

TEST_CASE("replace on the canonical frame") {
  auto cfg = canonical_configuration<QSqrt3>(3);

  SUBCASE("replacing the lower half-space") {
    auto [next, ball] = replace(cfg, 0);
    CHECK(curvature_center(ball) == VecS<QSqrt3>{3, 5, 0, 0});
    CHECK(ball.curvature == QSqrt3(3));
    CHECK(contact(ball, cfg.balls[1]).tangent());  // touches the upper half-space
    for (int i = 2; i < 5; ++i) CHECK(contact(ball, cfg.balls[i]).tangent());
    CHECK(validate(next).valid(0.0));
    // the diameter of the new ball is (d-1)/d = 2/3
    CHECK(QSqrt3(2) / ball.curvature == QSqrt3(Rational(2, 3)));
  }

  SUBCASE("replacing the upper half-space") {
    auto [next, ball] = replace(cfg, 1);
    CHECK(curvature_center(ball) == VecS<QSqrt3>{3, 1, 0, 0});
    CHECK(validate(next).valid(0.0));
  }

  SUBCASE("replace is an involution") {
    for (int i = 0; i < 5; ++i) {
      auto [next, ball] = replace(cfg, i);
      auto [back, old] = replace(next, i);
      CHECK(back.balls == cfg.balls);
      CHECK(old == cfg.balls[i]);
    }
  }

  SUBCASE("replacement can recover a half-space") {
    auto [with_c, c] = replace(cfg, 1);  // upper half-space -> ball C
    auto [restored, b] = replace(with_c, 1);
    CHECK(b.kind == BallKind::halfspace);
    CHECK(b.point == VecS<QSqrt3>{1, 0, 0});
    CHECK(b.offset == QSqrt3(2));
    CHECK(restored.balls == cfg.balls);
  }
}

TEST_CASE("generator matrices") {
  auto r1 = generator_matrix<Rational>(3, 1);
  for (int j = 0; j < 5; ++j) CHECK(r1(0, j) == (j == 0 ? Rational(-1) : Rational(1)));
  for (int i = 1; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(r1(i, j) == (i == j ? Rational(1) : Rational(0)));

  for (int d = 2; d <= 8; ++d)
    for (int i = 1; i <= d + 2; ++i) {
      auto r = generator_matrix<Rational>(d, i);
      CHECK(r * r == Mat<Rational>::identity(d + 2));
    }

  // R_1 * M_0 row 1 agrees with the replace example
  auto m = generator_matrix<QSqrt3>(3, 1) * curvature_center_matrix(canonical_configuration<QSqrt3>(3));
  CHECK(m.row(0) == VecS<QSqrt3>{3, 5, 0, 0});
}

TEST_CASE("replace matches the matrix action") {
  std::mt19937 rng(7);
  auto cfg = canonical_configuration<QSqrt3>(3);
  Mat<QSqrt3> m = curvature_center_matrix(cfg);
  for (int step = 0; step < 40; ++step) {
    int i = int(rng() % 5);
    auto [next, ball] = replace(cfg, i);
    m = generator_matrix<QSqrt3>(3, i + 1) * m;
    CHECK(curvature_center_matrix(next) == m);
    // the new curvature vector still satisfies the Descartes identity
    CHECK(validate(next).eq1_residual.is_zero());
    cfg = std::move(next);
  }
}

TEST_CASE("float replace chains keep the identity") {
  std::mt19937 rng(11);
  for (int d : {4, 6}) {
    auto cfg = canonical_configuration<double>(d);
    for (int step = 0; step < 25; ++step) {
      int i = int(rng() % (d + 2));
      auto [next, ball] = replace(cfg, i);
      auto rep = validate(next, 1e-7);
      CAPTURE(d);
      CAPTURE(step);
      CHECK(to_double(rep.eq1_residual) < 1e-7);
      CHECK(rep.bad_pairs.empty());
      cfg = std::move(next);
    }
  }
}

TEST_CASE("integrality of reachable frames for d=3") {
  std::mt19937 rng(23);
  auto cfg = canonical_configuration<QSqrt3>(3);
  for (int step = 0; step < 60; ++step) {
    int i = int(rng() % 5);
    cfg = replace(cfg, i).first;
    auto m = curvature_center_matrix(cfg);
    for (int r = 0; r < 5; ++r) {
      CHECK(m(r, 0).is_integer());
      CHECK(m(r, 1).is_integer());
    }
  }
}
