#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/errors.hpp"
#include "ellip/sring.hpp"
#include "random_elements.hpp"

using namespace ellip;

namespace {

ExactCurve lemniscatic() { return make_exact_curve(Scalar(4), Scalar(0), 2); }

}  // namespace

TEST_CASE("ring arithmetic") {
  ExactCurve c = lemniscatic();
  SElem z = SElem::z(c, false), zeta = SElem::zeta(c);
  SElem zinv = SElem::monomial(EllFun::constant(c, 1), -1, 0, false);
  CHECK(z * zinv == SElem::constant(c, 1));
  SElem s = zeta + z;
  CHECK(s * s == zeta * zeta + Scalar(2) * z * zeta + z * z);
  CHECK_THROWS_AS(SElem::monomial(EllFun::constant(c, 1), -1, 0, true), DomainViolation);
  CHECK_THROWS_AS(zinv.in_s0(), DomainViolation);
  CHECK((s - s).is_zero());
  CHECK(s.deg_zeta() == 1);
  CHECK(SElem(c).deg_zeta() == -1);
}

TEST_CASE("phi on generators") {
  for (long q : {2L, 3L}) {
    ExactCurve c = make_exact_curve(Scalar(0), Scalar(4), q);
    SElem z = SElem::z(c), zeta = SElem::zeta(c);
    CHECK(apply_phi(z) == Scalar(q) * z);
    CHECK(apply_phi(zeta) == Scalar(q) * zeta + SElem::from(zeta_defect(c, static_cast<int>(q))));
    CHECK(apply_phi(SElem::constant(c, Scalar::ratio(5, 3))) == SElem::constant(c, Scalar::ratio(5, 3)));
    CHECK(apply_phi(SElem::from(EllFun::X(c))) == SElem::from(mult_by_n(EllFun::X(c), static_cast<int>(q))));
  }
}

TEST_CASE("derivations") {
  ExactCurve c = lemniscatic();
  SElem zeta = SElem::zeta(c);
  CHECK(apply_partial(zeta) == -SElem::from(EllFun::X(c)));
  CHECK(apply_partial(SElem::z(c)) == SElem::constant(c, 1));
  for (int n = -2; n <= 4; ++n) {
    SElem zn = SElem::monomial(EllFun::constant(c, 1), n, 0, false);
    CHECK(apply_delta(zn) == Scalar(n) * zn);
  }
}

TEST_CASE("commutation laws and Leibniz rules") {
  std::mt19937_64 rng(101);
  for (auto [g2, g3, q] : {std::tuple{4L, 0L, 2L}, std::tuple{0L, 4L, 3L}, std::tuple{11L, 7L, 2L}}) {
    ExactCurve c = make_exact_curve(Scalar(g2), Scalar(g3), q);
    for (int t = 0; t < 8; ++t) {
      SElem f = testing::random_selem(rng, c, 2, 3);
      SElem g = testing::random_selem(rng, c, 2, 3);
      SElem pf = apply_phi(f);
      CHECK(apply_partial(pf) == Scalar(q) * apply_phi(apply_partial(f)));
      CHECK(apply_delta(pf) == apply_phi(apply_delta(f)));
      CHECK(apply_phi(f * g) == pf * apply_phi(g));
      CHECK(apply_partial(f * g) == apply_partial(f) * g + f * apply_partial(g));
      CHECK(apply_delta(f * g) == apply_delta(f) * g + f * apply_delta(g));
      CHECK(apply_phi_inv(pf) == f);
    }
  }
  ExactCurve c = lemniscatic();
  CHECK_THROWS_AS(apply_phi_inv(SElem::from(EllFun::X(c))), DomainViolation);
  // ζ(qz) - qζ(z) is not of the form g(qz) with g elliptic for the same lattice
  CHECK_THROWS_AS(apply_phi_inv(SElem::zeta(c)), DomainViolation);
  CHECK(apply_phi_inv(apply_phi(SElem::zeta(c))) == SElem::zeta(c));
}

TEST_CASE("kernel of phi - a") {
  ExactCurve c = lemniscatic();
  auto k = kernel_phi_minus_a(Scalar(8), c, KernelDomain::S);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == SElem::monomial(EllFun::constant(c, 1), 3, 0));
  CHECK(apply_phi(k[0]) == Scalar(8) * k[0]);
  CHECK(kernel_phi_minus_a(Scalar(5), c, KernelDomain::S).empty());
  auto k1 = kernel_phi_minus_a(Scalar(1), c, KernelDomain::KZeta);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == SElem::constant(c, 1));
  CHECK(kernel_phi_minus_a(Scalar(2), c, KernelDomain::KZeta).empty());
  auto km = kernel_phi_minus_a(Scalar::ratio(1, 4), c, KernelDomain::S);
  REQUIRE(km.size() == 1);
  CHECK(km[0].min_z() == -2);
}

TEST_CASE("z-coefficients") {
  ExactCurve c = lemniscatic();
  SElem z = SElem::z(c), zeta = SElem::zeta(c);
  auto parts = z_coefficients(z * z * zeta + z * z);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].first == 2);
  CHECK(parts[0].second == zeta + SElem::constant(c, 1));
  CHECK(z_coefficients(SElem(c)).empty());
  SElem fz = SElem::monomial(zeta_defect(c, 2), -1, 0, false);
  auto p2 = z_coefficients(fz);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].first == -1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    SElem f = testing::random_selem(rng, c);
    CHECK(from_z_coefficients(c, z_coefficients(f)) == f);
  }
}

TEST_CASE("fractions") {
  ExactCurve c = lemniscatic();
  SElem z = SElem::z(c), zeta = SElem::zeta(c);
  SFraction a(zeta + z, z);
  SFraction b(z * z - zeta * zeta, z - zeta);
  CHECK(b == SFraction(z + zeta));
  REQUIRE(b.as_selem().has_value());
  CHECK(*b.as_selem() == z + zeta);
  CHECK(a * a.inv() == SFraction::constant(c, 1));
  CHECK((a - a).is_zero());
  CHECK(apply_partial(SFraction(SElem::constant(c, 1), z)) ==
        SFraction(-SElem::constant(c, 1), z * z));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    Scalar a0 = testing::random_scalar(rng), a1 = testing::random_scalar(rng);
    SFraction f(testing::random_selem(rng, c, 2, 2),
                z + SElem::constant(c, a0) + SElem::from(EllFun::X(c)) * a1);
    SFraction g(testing::random_selem(rng, c, 1, 2), zeta * zeta + z * SElem::constant(c, a1));
    CHECK(apply_partial(apply_phi(f)) == SFraction(SElem::constant(c, 2)) * apply_phi(apply_partial(f)));
    CHECK(apply_partial(f * g) == apply_partial(f) * g + f * apply_partial(g));
    CHECK((f + g) - g == f);
  }
}

TEST_CASE("membership in S") {
  ExactCurve c = lemniscatic();
  SElem z = SElem::z(c), zeta = SElem::zeta(c);
  auto r1 = s_membership_test(SFraction(zeta), 4);
  CHECK(r1.in_s);
  CHECK(r1.order <= 2);
  auto r2 = s_membership_test(SFraction(z), 4);
  CHECK(r2.in_s);
  CHECK(r2.order == 1);
  auto r3 = s_membership_test(SFraction(SElem::constant(c, 1), z), 4);
  CHECK(r3.in_s);
  CHECK(r3.order == 1);
  auto r4 = s_membership_test(SFraction(SElem::constant(c, 1), z - SElem::constant(c, 1)), 3);
  CHECK_FALSE(r4.in_s);
  // the witness is a genuine dependence
  SFraction f(zeta * z + SElem::from(EllFun::X(c)));
  auto r5 = s_membership_test(f, 3);
  REQUIRE(r5.in_s);
  SFraction acc(c);
  SFraction p = f;
  for (const auto& l : r5.witness) {
    acc += SFraction::from(l) * p;
    p = apply_phi(p);
  }
  CHECK(acc.is_zero());
}

TEST_CASE("numeric shadow of phi") {
  PrecisionGuard guard(80);
  ExactCurve c = lemniscatic();
  NumericLattice L = lattice_for_curve(c, 40);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 3; ++t) {
    SElem f = testing::random_selem(rng, c, 2, 3);
    auto lhs = [&](const Complex& z) { return eval_numeric(apply_phi(f), L, z); };
    auto rhs = [&](const Complex& z) { return eval_numeric(f, L, z * Real(2)); };
    CHECK(shadow_check(lhs, rhs, L, 3, 40 + t) < pow10(5 - 40) * 1000);
    auto dl = [&](const Complex& z) { return eval_numeric(apply_partial(apply_phi(f)), L, z); };
    auto dr = [&](const Complex& z) {
      return eval_numeric(apply_phi(apply_partial(f)), L, z) * Real(2);
    };
    CHECK(shadow_check(dl, dr, L, 3, 50 + t) < pow10(-25));
  }
}
