#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/ellfun.hpp"
#include "ellip/errors.hpp"
#include "random_elements.hpp"

using namespace ellip;

TEST_CASE("curve construction") {
  CHECK_NOTHROW(make_exact_curve(Scalar(4), Scalar(0), 2));
  CHECK_NOTHROW(make_exact_curve(Scalar(0), Scalar(4), 3));
  // 3^3 - 27 (1/3)^2 = 24
  ExactCurve c = make_exact_curve(Scalar(3), Scalar::ratio(1, 3), 2);
  CHECK(c.discriminant() == Scalar(24));
  CHECK_THROWS_AS(make_exact_curve(Scalar(3), Scalar(1), 2), SingularCurve);
  CHECK_THROWS_AS(make_exact_curve(Scalar(4), Scalar(0), 1), BadMultiplier);
}

TEST_CASE("torsion points are canonical") {
  TorsionPoint p(mpq_class(5, 3), mpq_class(-1, 2));
  CHECK(p.r1() == mpq_class(2, 3));
  CHECK(p.r2() == mpq_class(1, 2));
  CHECK(TorsionPoint(p.r1(), p.r2()) == p);
  CHECK(p.order() == 6);
  CHECK((p * 6).is_zero());
  CHECK((p + (-p)).is_zero());
}

TEST_CASE("field arithmetic") {
  ExactCurve c = make_exact_curve(Scalar(4), Scalar(0), 2);
  EllFun X = EllFun::X(c), Y = EllFun::Y(c);
  CHECK(X / X == EllFun::constant(c, 1));
  CHECK(Y * Y == EllFun(c, RatFun(c.cubic())));
  EllFun k = EllFun::constant(c, Scalar::ratio(3, 2));
  CHECK((X - k).inv() * (X - k) == EllFun::constant(c, 1));
  EllFun f = X + Y;
  CHECK(f * f.inv() == EllFun::constant(c, 1));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    EllFun a = testing::random_ellfun(rng, c, 2), b = testing::random_ellfun(rng, c, 2),
           d = testing::random_ellfun(rng, c, 2);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("derivation") {
  ExactCurve c = make_exact_curve(Scalar(0), Scalar(4), 3);
  EllFun X = EllFun::X(c), Y = EllFun::Y(c);
  CHECK(derive(X) == Y);
  CHECK(derive(Y) == EllFun(c, RatFun(c.dy())));
  CHECK(derive(EllFun::constant(c, 7)).is_zero());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    EllFun a = testing::random_ellfun(rng, c, 2), b = testing::random_ellfun(rng, c, 2);
    CHECK(derive(a * b) == derive(a) * b + a * derive(b));
  }
}

TEST_CASE("multiplication by n") {
  ExactCurve c = make_exact_curve(Scalar(4), Scalar(0), 2);
  EllFun X = EllFun::X(c), Y = EllFun::Y(c);
  CHECK(mult_by_n(X, 1) == X);
  // classical duplication: ℘(2z) = (℘''/(2℘'))^2 - 2℘
  EllFun wpp = EllFun(c, RatFun(c.dy()));
  EllFun l = wpp / (Y * Scalar(2));
  CHECK(mult_by_n(X, 2) == l * l - X * Scalar(2));
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 5; ++n) {
    for (int t = 0; t < 3; ++t) {
      EllFun a = testing::random_ellfun(rng, c, 1), b = testing::random_ellfun(rng, c, 1);
      CHECK(mult_by_n(a * b, n) == mult_by_n(a, n) * mult_by_n(b, n));
      CHECK(derive(mult_by_n(a, n)) == Scalar(n) * mult_by_n(derive(a), n));
    }
  }
  // [2]∘[3] = [6] via composition
  CHECK(mult_by_n(mult_by_n(X, 2), 3) == mult_by_n(X, 6));
}

TEST_CASE("zeta defect") {
  for (auto [g2, g3] : {std::pair{4L, 0L}, std::pair{0L, 4L}, std::pair{3L, 2L}}) {
    ExactCurve c = make_exact_curve(Scalar(g2), Scalar(g3), 2);
    EllFun X = EllFun::X(c), Y = EllFun::Y(c);
    CHECK(zeta_defect(c, 1).is_zero());
    CHECK(zeta_defect(c, 2) == EllFun(c, RatFun(c.dy())) / (Scalar(2) * Y));
    for (int n = 2; n <= 4; ++n)
      CHECK((derive(zeta_defect(c, n)) + Scalar(n) * mult_by_n(X, n) - Scalar(n) * X).is_zero());
  }
}

TEST_CASE("preimage under multiplication by n") {
  ExactCurve c = make_exact_curve(Scalar(0), Scalar(4), 3);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    EllFun a = testing::random_ellfun(rng, c, 2);
    for (int n : {2, 3}) {
      auto back = mult_by_n_preimage(mult_by_n(a, n), n);
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
  }
  CHECK_FALSE(mult_by_n_preimage(EllFun::X(c), 2).has_value());
  CHECK_FALSE(mult_by_n_preimage(EllFun::Y(c), 3).has_value());
}
