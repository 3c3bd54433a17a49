#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellip/errors.hpp"
#include "ellip/numerics.hpp"

using namespace ellip;
namespace bmp = boost::multiprecision;

namespace {

constexpr int kDigits = 40;

Real tol(int e) { return pow10(e); }

Complex cx(double re, double im) { return Complex(Real(re), Real(im)); }

// Oracles by row sums: Σ_m (w+m)^-4 = π^4 (s^2 - 2s/3), Σ_m (w+m)^-6 =
// π^6 (s^3 - s^2 + 2s/15) with s = csc^2(πw).
std::pair<Complex, Complex> invariants_by_rows(const Complex& w1, const Complex& w2) {
  Complex tau = w1 / w2;
  Real p = pi();
  Complex g4 = Complex(bmp::pow(p, 4) / 45);
  Complex g6 = Complex(2 * bmp::pow(p, 6) / 945);
  for (long n = 1; n < 400; ++n) {
    Complex s = sin(Complex(p) * tau * Real(n));
    s = Complex(1) / (s * s);
    Complex t4 = (s * s - s * (Real(2) / 3)) * (2 * bmp::pow(p, 4));
    Complex t6 = (s * s * s - s * s + s * (Real(2) / 15)) * (2 * bmp::pow(p, 6));
    g4 += t4;
    g6 += t6;
    if (abs(t4) + abs(t6) < pow10(-70)) break;
  }
  Complex w4 = pow(w2, 4), w6 = pow(w2, 6);
  return {Complex(60) * g4 / w4, Complex(140) * g6 / w6};
}

// η2 = (π²/3) E2(τ) / ω2 with E2 = 1 - 24 Σ σ1(n) q^n.
Complex eta2_by_e2(const Complex& w1, const Complex& w2) {
  Complex tau = w1 / w2;
  Complex q = exp(Complex(Real(0), 2 * pi()) * tau);
  Complex qn = q;
  Complex e2(1);
  for (long n = 1; n < 2000; ++n) {
    long s1 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s1 += d;
    e2 -= qn * Real(24 * s1);
    if (abs(qn) * Real(s1) < pow10(-70)) break;
    qn *= q;
  }
  return e2 * (pi() * pi() / 3) / w2;
}

Complex legendre_residual(const NumericLattice& L) {
  return L.omega1() * L.eta2() - L.omega2() * L.eta1() - Complex(Real(0), 2 * pi());
}

}  // namespace

TEST_CASE("lattice construction") {
  PrecisionGuard g(80);
  NumericLattice sq = make_numeric_lattice(Complex::i(), Complex(1), 30);
  CHECK(abs(sq.g3()) < tol(-25));
  auto [g2o, g3o] = invariants_by_rows(Complex::i(), Complex(1));
  CHECK(abs(sq.g2() - g2o) < tol(-25));
  CHECK_THROWS_AS(make_numeric_lattice(Complex(1), Complex::i(), 30), BadOrientation);
  CHECK_THROWS_AS(make_numeric_lattice(Complex::i(), Complex(1), 10), BadPrecision);

  NumericLattice two = make_numeric_lattice(Complex(Real(0), Real(2)), Complex(1), 30);
  CHECK(abs(legendre_residual(two)) < tol(-25));

  // a skewed basis of the same lattice reduces to the same invariants
  Complex w1 = cx(0.3, 1.1), w2 = cx(1.0, 0.2);
  NumericLattice a = make_numeric_lattice(w1, w2, kDigits);
  NumericLattice b = make_numeric_lattice(w1 * Real(3) + w2 * Real(7), w1 * Real(2) + w2 * Real(5), kDigits);
  CHECK(abs(a.g2() - b.g2()) < tol(-30));
  CHECK(abs(a.g3() - b.g3()) < tol(-30));
  auto [g2r, g3r] = invariants_by_rows(a.reduced1(), a.reduced2());
  CHECK(abs(a.g2() - g2r) < tol(-30));
  CHECK(abs(a.g3() - g3r) < tol(-30));
  CHECK(abs(legendre_residual(b)) < tol(-30));
  // η is additive on the lattice
  CHECK(abs(b.eta1() - (a.eta1() * Real(3) + a.eta2() * Real(7))) < tol(-30));
}

TEST_CASE("quasi-periods") {
  PrecisionGuard g(80);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 5; ++t) {
    Complex w2 = cx(1 + 0.3 * u(rng), 0.3 * u(rng));
    Complex w1 = w2 * cx(0.5 * u(rng), 0.9 + 0.5 * std::abs(u(rng)));
    NumericLattice L = make_numeric_lattice(w1, w2, kDigits);
    CHECK(abs(legendre_residual(L)) < tol(2 - kDigits));
    CHECK(abs(L.eta2() - eta2_by_e2(w1, w2)) < tol(-30));
    // scaling law η(λΛ) = η(Λ)/λ
    Complex lam = cx(0.7, -0.4);
    NumericLattice M = L.scaled(lam);
    CHECK(abs(M.eta1() - L.eta1() / lam) < tol(-30));
    CHECK(abs(M.eta2() - L.eta2() / lam) < tol(-30));
  }
  NumericLattice sq = make_numeric_lattice(Complex::i(), Complex(1), kDigits);
  CHECK(abs(sq.eta2().im) < tol(-30));
  CHECK(abs(sq.eta2() - eta2_by_e2(Complex::i(), Complex(1))) < tol(-30));
}

TEST_CASE("torsion points to complex") {
  PrecisionGuard g(80);
  NumericLattice sq = make_numeric_lattice(Complex::i(), Complex(1), 30);
  CHECK(abs(torsion_to_complex(sq, TorsionPoint())) == 0);
  CHECK(abs(torsion_to_complex(sq, TorsionPoint(mpq_class(1, 2), 0)) - cx(0, 0.5)) < tol(-30));
  NumericLattice two = make_numeric_lattice(Complex(Real(0), Real(2)), Complex(1), 30);
  Complex expect = Complex(Real(1) / 2, Real(2) / 3);
  CHECK(abs(torsion_to_complex(two, TorsionPoint(mpq_class(1, 3), mpq_class(1, 2))) - expect) <
        tol(-30));
}

TEST_CASE("classical constraints of the evaluator") {
  PrecisionGuard g(80);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (auto [w1, w2] : {std::pair{cx(0, 1), cx(1, 0)}, std::pair{cx(0.4, 1.3), cx(1.1, -0.1)}}) {
    NumericLattice L = make_numeric_lattice(w1, w2, kDigits);
    for (int t = 0; t < 20; ++t) {
      Complex z = L.omega1() * Real(u(rng)) + L.omega2() * Real(u(rng));
      WpValues v = wp_eval(L, z);
      WpValues m = wp_eval(L, -z);
      CHECK(abs(v.dwp + m.dwp) < tol(5 - kDigits));
      CHECK(abs(v.zeta + m.zeta) < tol(5 - kDigits));
      Complex de = v.dwp * v.dwp - Complex(4) * pow(v.wp, 3) + L.g2() * v.wp + L.g3();
      CHECK(abs(de) < tol(8 - kDigits) * (1 + abs(v.wp) * abs(v.wp) * abs(v.wp)));
      WpValues s1 = wp_eval(L, z + L.omega1());
      WpValues s2 = wp_eval(L, z + L.omega2());
      CHECK(abs(s1.zeta - v.zeta - L.eta1()) < tol(5 - kDigits));
      CHECK(abs(s2.zeta - v.zeta - L.eta2()) < tol(5 - kDigits));
      WpValues d = wp_eval_direct(L, z);
      CHECK(abs(d.wp - v.wp) < tol(8 - kDigits));
      CHECK(abs(d.dwp - v.dwp) < tol(8 - kDigits));
      CHECK(abs(d.zeta - v.zeta) < tol(8 - kDigits));
    }
  }
  NumericLattice sq = make_numeric_lattice(Complex::i(), Complex(1), kDigits);
  CHECK_THROWS_AS(wp_eval(sq, Complex(0)), AtPole);
  CHECK_THROWS_AS(wp_eval(sq, Complex::i() + Complex(1)), AtPole);
}

TEST_CASE("Laurent coefficients by quadrature") {
  PrecisionGuard g(80);
  NumericLattice L = make_numeric_lattice(cx(0.2, 1.2), cx(1, 0), kDigits);
  Real r = L.shortest() / 4;
  auto wp = [&](const Complex& z) { return wp_eval(L, z).wp; };
  auto zeta = [&](const Complex& z) { return wp_eval(L, z).zeta; };
  auto a = laurent_coeffs(wp, Complex(0), -2, 2, r, kDigits);
  CHECK(abs(a[0] - Complex(1)) < tol(-15));
  CHECK(abs(a[1]) < tol(-15));
  CHECK(abs(a[2]) < tol(-15));
  CHECK(abs(a[4] - L.g2() * (Real(1) / 20)) < tol(-15));
  auto b = laurent_coeffs(zeta, Complex(0), -1, -1, r, kDigits);
  CHECK(abs(b[0] - Complex(1)) < tol(-15));
  // logarithmic derivative at a double zero of ℘ - ℘(ω1/2)
  Complex h = L.omega1() * Real(0.5);
  Complex e = wp_eval(L, h).wp;
  auto logd = [&](const Complex& z) {
    WpValues v = wp_eval(L, z);
    return v.dwp / (v.wp - e);
  };
  auto c = laurent_coeffs(logd, h, -1, -1, r, kDigits);
  CHECK(abs(c[0] - Complex(2)) < tol(-15));
  CHECK_THROWS_AS(laurent_coeffs(wp, Complex(0), -1, 0, pow10(-30), kDigits), RadiusTooSmall);
}

TEST_CASE("lattices for exact curves") {
  PrecisionGuard g(80);
  for (auto [g2, g3] : {std::pair{4L, 0L}, std::pair{0L, 4L}, std::pair{11L, 7L}}) {
    ExactCurve c = make_exact_curve(Scalar(g2), Scalar(g3), 2);
    NumericLattice L = lattice_for_curve(c, kDigits);
    CHECK(abs(L.g2() - Complex(Real(g2))) < tol(-30));
    CHECK(abs(L.g3() - Complex(Real(g3))) < tol(-30));
    CHECK(abs(legendre_residual(L)) < tol(-30));
  }
  CHECK_THROWS_AS(lattice_for_curve(make_exact_curve(Scalar(1), Scalar(1), 2), kDigits), Unsupported);
  NumericLattice sq = make_numeric_lattice(Complex::i(), Complex(1), kDigits);
  CHECK_THROWS_AS(rescale_to_curve(sq, make_exact_curve(Scalar(0), Scalar(4), 2)), CurveMismatch);
  // exact values at torsion points used by the integration tests
  ExactCurve lem = make_exact_curve(Scalar(4), Scalar(0), 2);
  NumericLattice L = lattice_for_curve(lem, kDigits);
  CHECK(abs(eval_numeric(EllFun::X(lem), L, torsion_to_complex(L, TorsionPoint(0, mpq_class(1, 2)))) -
            Complex(1)) < tol(-30));
  CHECK(abs(eval_numeric(EllFun::X(lem), L, torsion_to_complex(L, TorsionPoint(mpq_class(1, 2), 0))) +
            Complex(1)) < tol(-30));
  ExactCurve equi = make_exact_curve(Scalar(0), Scalar(4), 3);
  NumericLattice H = lattice_for_curve(equi, kDigits);
  CHECK(abs(eval_numeric(EllFun::X(equi), H, torsion_to_complex(H, TorsionPoint(mpq_class(1, 3), 0)))) <
        tol(-30));
}

TEST_CASE("evaluation of function-field elements") {
  PrecisionGuard g(80);
  ExactCurve c = make_exact_curve(Scalar(4), Scalar(0), 2);
  NumericLattice L = lattice_for_curve(c, kDigits);
  EllFun X = EllFun::X(c), Y = EllFun::Y(c);
  Complex half = L.omega1() * Real(0.5);
  CHECK(abs(eval_numeric(X, L, half).im) < tol(-25));
  CHECK(abs(eval_numeric(Y, L, half)) < tol(-25));
  Complex z0 = cx(0.31, 0.17);
  WpValues v2 = wp_eval(L, z0 * Real(2));
  CHECK(abs(eval_numeric(mult_by_n(X, 2), L, z0) - v2.wp) < tol(-25));
  CHECK(abs(eval_numeric(mult_by_n(Y, 2), L, z0) - v2.dwp) < tol(-25));
  WpValues v1 = wp_eval(L, z0);
  CHECK(abs(eval_numeric(zeta_defect(c, 2), L, z0) - (v2.zeta - v1.zeta * Real(2))) < tol(-25));
  Complex root0 = wp_inverse(L, Complex(0));
  CHECK(abs(wp_eval(L, root0).wp) < tol(-30));
  CHECK_THROWS_AS(eval_numeric(X.inv(), L, root0), NearPole);
}

TEST_CASE("shadow check") {
  PrecisionGuard g(80);
  ExactCurve c = make_exact_curve(Scalar(11), Scalar(7), 2);
  NumericLattice L = lattice_for_curve(c, kDigits);
  EllFun X = EllFun::X(c);
  auto f = [&](const Complex& z) { return eval_numeric(X, L, z); };
  CHECK(shadow_check(f, f, L, 5, 1) == 0);
  auto lhs = [&](const Complex& z) { return eval_numeric(zeta_defect(c, 2), L, z); };
  auto rhs = [&](const Complex& z) {
    return wp_eval(L, z * Real(2)).zeta - wp_eval(L, z).zeta * Real(2);
  };
  CHECK(shadow_check(lhs, rhs, L, 5, 2) < tol(-25));
}
