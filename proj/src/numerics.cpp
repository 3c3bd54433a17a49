#include "ellip/numerics.hpp"

#include <cmath>
#include <random>

#include "ellip/errors.hpp"

namespace ellip {

namespace bmp = boost::multiprecision;

namespace {

constexpr int kGuardDigits = 20;

long round_to_long(const Real& x) {
  Real r = bmp::round(x);
  return r.convert_to<long>();
}

Real im_of_ratio(const Complex& a, const Complex& b) {
  // Im(a / b) has the sign of Im(a conj(b))
  return a.im * b.re - a.re * b.im;
}

/// Laurent expansion of (℘, ℘', ζ) at a small u; c[k] for k >= 2.
WpValues laurent_eval(const std::vector<Complex>& c, const Complex& u) {
  Complex u2 = u * u;
  Complex inv = Complex(1) / u;
  Complex wp = inv * inv;
  Complex dwp = Complex(-2) * wp * inv;
  Complex zeta = inv;
  Complex p = Complex(1);  // u^(2k-4)
  for (size_t k = 2; k < c.size(); ++k) {
    Complex pk = p * u2;                                         // u^(2k-2)
    wp += c[k] * pk;
    dwp += c[k] * p * u * Real(static_cast<long>(2 * k - 2));   // u^(2k-3)
    zeta -= c[k] * pk * u * (Real(1) / Real(static_cast<long>(2 * k - 1)));
    p = pk;
  }
  return {wp, dwp, zeta};
}

/// From values at u, values at 2u.
WpValues duplicate(const WpValues& v, const Complex& g2) {
  Complex ddwp = Complex(6) * v.wp * v.wp - g2 * Real(0.5);
  Complex lam = ddwp / v.dwp;
  Complex wp2 = lam * lam * Real(0.25) - Complex(2) * v.wp;
  Complex dwp2 = -(lam * (wp2 - v.wp) + v.dwp);
  Complex zeta2 = Complex(2) * v.zeta + lam * Real(0.5);
  return {wp2, dwp2, zeta2};
}

/// Laurent series plus duplication, no argument reduction.
WpValues small_eval(const std::vector<Complex>& c, const Complex& g2, const Real& shortest,
                    const Complex& u) {
  int m = 0;
  Real limit = shortest / 4;
  Complex v = u;
  Real a = abs(u);
  while (a > limit) {
    a /= 2;
    ++m;
  }
  if (m > 0) v = u * bmp::pow(Real(2), -m);
  WpValues w = laurent_eval(c, v);
  for (int k = 0; k < m; ++k) w = duplicate(w, g2);
  return w;
}

std::vector<Complex> laurent_coefficients(const Complex& g2, const Complex& g3, int count) {
  std::vector<Complex> c(static_cast<size_t>(std::max(count, 4)));
  c[2] = g2 * (Real(1) / 20);
  c[3] = g3 * (Real(1) / 28);
  for (int k = 4; k < count; ++k) {
    Complex s;
    for (int m = 2; m <= k - 2; ++m) s += c[static_cast<size_t>(m)] * c[static_cast<size_t>(k - m)];
    c[static_cast<size_t>(k)] = s * (Real(3) / Real((2L * k + 1) * (k - 3)));
  }
  return c;
}

/// E4 and E6 at tau (Im tau >= sqrt(3)/2 assumed for fast convergence).
std::pair<Complex, Complex> eisenstein_e4_e6(const Complex& tau, int working) {
  Complex qn = exp(Complex(Real(0), 2 * pi()) * tau);
  Complex q = qn;
  Complex e4(1), e6(1);
  Real eps = pow10(-working - 5);
  for (long n = 1; n < 100000; ++n) {
    long s3 = 0, s5 = 0;
    for (long d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      long e = n / d;
      s3 += d * d * d;
      s5 += d * d * d * d * d;
      if (e != d) {
        s3 += e * e * e;
        s5 += e * e * e * e * e;
      }
    }
    e4 += qn * Real(240 * s3);
    e6 -= qn * (Real(504) * Real(s5));
    if (abs(qn) * Real(s5) * 1000 < eps) break;
    qn *= q;
  }
  return {e4, e6};
}

}  // namespace

NumericLattice::NumericLattice(const Complex& omega1, const Complex& omega2, int digits)
    : digits_(digits), working_(digits + kGuardDigits) {
  if (digits < 15) throw BadPrecision("precision must be >= 15 digits");
  PrecisionGuard guard(static_cast<unsigned>(working_));
  w1_ = omega1;
  w2_ = omega2;
  if (w2_.norm() == 0 || im_of_ratio(w1_, w2_) <= 0)
    throw BadOrientation("Im(omega1/omega2) must be positive");

  // Gauss reduction with orientation kept: |r1| >= |r2|, |Re(r1/r2)| <= 1/2.
  Complex a = w1_, b = w2_;
  std::array<long, 4> m{1, 0, 0, 1};
  for (int it = 0; it < 10000; ++it) {
    long n = round_to_long((a / b).re);
    if (n != 0) {
      a -= b * Real(n);
      m[0] -= n * m[2];
      m[1] -= n * m[3];
    }
    if (a.norm() < b.norm()) {
      Complex t = -b;
      b = a;
      a = t;
      std::array<long, 4> mm{-m[2], -m[3], m[0], m[1]};
      m = mm;
      continue;
    }
    break;
  }
  r1_ = a;
  r2_ = b;
  m_ = m;

  Complex tau = r1_ / r2_;
  auto [e4, e6] = eisenstein_e4_e6(tau, working_);
  Real p = pi();
  Complex w2sq = r2_ * r2_;
  g2_ = e4 * (4 * bmp::pow(p, 4) / 3) / (w2sq * w2sq);
  g3_ = e6 * (8 * bmp::pow(p, 6) / 27) / (w2sq * w2sq * w2sq);

  // |u| <= shortest/4 in the series: ratio 1/16 per term
  int count = static_cast<int>(std::ceil(working_ * std::log(10.0) / std::log(16.0))) + 8;
  c_ = laurent_coefficients(g2_, g3_, count);

  Real sh = abs(r2_);
  re1_ = Complex(2) * small_eval(c_, g2_, sh, r1_ * Real(0.5)).zeta;
  re2_ = Complex(2) * small_eval(c_, g2_, sh, r2_ * Real(0.5)).zeta;
  // (w1, w2)^T = m^{-1} (r1, r2)^T, det m = 1
  long i0 = m_[3], i1 = -m_[1], i2 = -m_[2], i3 = m_[0];
  e1_ = re1_ * Real(i0) + re2_ * Real(i1);
  e2_ = re1_ * Real(i2) + re2_ * Real(i3);
}

Real NumericLattice::pole_floor() const {
  PrecisionGuard guard(static_cast<unsigned>(working_));
  return pow10(-(digits_ / 2));
}

NumericLattice NumericLattice::scaled(const Complex& lambda) const {
  PrecisionGuard guard(static_cast<unsigned>(working_));
  return NumericLattice(w1_ * lambda, w2_ * lambda, digits_);
}

NumericLattice make_numeric_lattice(const Complex& omega1, const Complex& omega2, int digits) {
  return NumericLattice(omega1, omega2, digits);
}

NumericLattice rescale_to_curve(const NumericLattice& L, const ExactCurve& curve) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  Complex g2e = Complex::from_scalar(curve.g2());
  Complex g3e = Complex::from_scalar(curve.g3());
  Real tol = pow10(-(L.digits() / 2));
  // g2(λΛ) = λ^-4 g2(Λ), g3(λΛ) = λ^-6 g3(Λ)
  Complex lambda;
  if (curve.g2().is_zero()) {
    if (abs(L.g2()) > tol * (1 + abs(L.g3())))
      throw CurveMismatch("lattice has g2 != 0 but the curve has g2 = 0");
    lambda = root(L.g3() / g3e, 6, 0);
  } else if (curve.g3().is_zero()) {
    if (abs(L.g3()) > tol * (1 + abs(L.g2())))
      throw CurveMismatch("lattice has g3 != 0 but the curve has g3 = 0");
    lambda = root(L.g2() / g2e, 4, 0);
  } else {
    Complex lam2 = (L.g3() * g2e) / (L.g2() * g3e);
    lambda = sqrt(lam2);
  }
  NumericLattice out = L.scaled(lambda);
  Real err = abs(out.g2() - g2e) + abs(out.g3() - g3e);
  if (err > tol * (1 + abs(g2e) + abs(g3e)))
    throw CurveMismatch("lattice invariants are not proportional to the curve's");
  return out;
}

NumericLattice lattice_for_curve(const ExactCurve& curve, int digits) {
  PrecisionGuard guard(static_cast<unsigned>(digits + kGuardDigits));
  if (curve.g3().is_zero())
    return rescale_to_curve(NumericLattice(Complex::i(), Complex(1), digits), curve);
  if (curve.g2().is_zero()) {
    // basis (2 + ρ, 1) of Z[ρ], ρ = e^{2πi/3}
    Complex w1(Real(3) / 2, bmp::sqrt(Real(3)) / 2);
    return rescale_to_curve(NumericLattice(w1, Complex(1), digits), curve);
  }
  Scalar g2c = curve.g2().pow(3);
  Scalar j = Scalar(1728) * g2c / curve.discriminant();
  if (j == Scalar(287496))
    return rescale_to_curve(NumericLattice(Complex(Real(0), Real(2)), Complex(1), digits), curve);
  throw Unsupported("no known period lattice for j = " + j.str());
}

Complex torsion_to_complex(const NumericLattice& L, const TorsionPoint& P) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  auto conv = [](const mpq_class& q) {
    return Real(Real(q.get_num().get_mpz_t()) / Real(q.get_den().get_mpz_t()));
  };
  return L.omega1() * conv(P.r1()) + L.omega2() * conv(P.r2());
}

WpValues wp_eval(const NumericLattice& L, const Complex& z) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  const Complex& a = L.reduced1();
  const Complex& b = L.reduced2();
  // z = x a + y b with x, y real
  Real x = im_of_ratio(z, b) / im_of_ratio(a, b);
  Real y = im_of_ratio(z, a) / im_of_ratio(b, a);
  long n1 = round_to_long(x), n2 = round_to_long(y);
  Complex best = z - a * Real(n1) - b * Real(n2);
  long b1 = n1, b2 = n2;
  for (long d1 = -1; d1 <= 1; ++d1)
    for (long d2 = -1; d2 <= 1; ++d2) {
      Complex t = z - a * Real(n1 + d1) - b * Real(n2 + d2);
      if (t.norm() < best.norm()) {
        best = t;
        b1 = n1 + d1;
        b2 = n2 + d2;
      }
    }
  if (abs(best) < L.pole_floor() * L.shortest())
    throw AtPole("point lies on the lattice to working precision");
  WpValues v = small_eval(L.laurent(), L.g2(), L.shortest(), best);
  v.zeta += L.reduced_eta1() * Real(b1) + L.reduced_eta2() * Real(b2);
  return v;
}

WpValues wp_eval_direct(const NumericLattice& L, const Complex& z) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  const Complex& w1 = L.reduced1();
  const Complex& w2 = L.reduced2();
  Complex tau = w1 / w2;
  // shift z by multiples of w1 so that the row sums are balanced
  Real x = im_of_ratio(z, w2) / im_of_ratio(w1, w2);
  long n1 = round_to_long(x);
  Complex zr = z - w1 * Real(n1);
  Complex w = zr / w2;
  Real p = pi();
  Complex pic(p);
  Real eps = pow10(-L.working_digits() - 3);

  auto cot = [](const Complex& t) { return cos(t) / sin(t); };
  auto csc2 = [](const Complex& t) {
    Complex s = sin(t);
    return Complex(1) / (s * s);
  };

  // G2 = π²/3 + Σ_{n≠0} π² csc²(π n τ)
  Complex g2sum = Complex(p * p / 3);
  for (long n = 1;; ++n) {
    Complex term = csc2(pic * tau * Real(n)) * Real(2 * p * p);
    g2sum += term;
    if (abs(term) < eps || n > 100000) break;
  }
  if (abs(sin(pic * w)) < L.pole_floor())
    throw AtPole("point lies on the lattice to working precision");

  Complex wp = -g2sum;
  Complex dwp;
  Complex zeta = g2sum * w;
  {
    Complex t = pic * w;
    Complex c2 = csc2(t);
    Complex ct = cot(t);
    wp += c2 * (p * p);
    dwp -= ct * c2 * (2 * p * p * p);
    zeta += ct * p;
  }
  for (long n = 1;; ++n) {
    Complex tp = pic * (w + tau * Real(n));
    Complex tm = pic * (w - tau * Real(n));
    Complex cp = csc2(tp), cm = csc2(tm);
    Complex kp = cot(tp), km = cot(tm);
    Complex dw = (cp + cm) * (p * p);
    wp += dw;
    dwp -= (kp * cp + km * cm) * (2 * p * p * p);
    zeta += (kp + km) * p;
    if (abs(dw) < eps || n > 100000) break;
  }
  Complex s = Complex(1) / w2;
  WpValues v{wp * s * s, dwp * s * s * s, zeta * s};
  v.zeta += L.reduced_eta1() * Real(n1);
  return v;
}

std::pair<Complex, Complex> quasi_periods(const NumericLattice& L) { return {L.eta1(), L.eta2()}; }

Complex eval_poly(const Poly& p, const Complex& x) {
  Complex acc;
  const auto& c = p.coeffs();
  for (size_t k = c.size(); k-- > 0;) {
    acc *= x;
    acc += Complex::from_scalar(c[k]);
  }
  return acc;
}

Complex eval_at(const EllFun& f, const Complex& wp, const Complex& dwp, const Real& floor) {
  auto ev = [&](const RatFun& r) {
    Complex d = eval_poly(r.den(), wp);
    if (abs(d) < floor) throw NearPole("denominator vanishes to working precision");
    return eval_poly(r.num(), wp) / d;
  };
  Complex out = ev(f.a());
  if (!f.b().is_zero()) out += ev(f.b()) * dwp;
  return out;
}

Complex eval_numeric(const EllFun& f, const NumericLattice& L, const Complex& z0) {
  WpValues v = wp_eval(L, z0);
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  return eval_at(f, v.wp, v.dwp, L.pole_floor());
}

std::vector<Complex> laurent_coeffs(const ComplexFn& f, const Complex& center, int lo, int hi,
                                    const Real& radius, int digits) {
  if (hi < lo) return {};
  Real floor = pow10(-(digits / 2));
  if (radius <= floor) throw RadiusTooSmall("quadrature radius below the pole floor");
  Real tol = pow10(-(digits / 2)) * (1 + bmp::pow(radius, -std::max(0, hi)));
  auto estimate = [&](int n) {
    std::vector<Complex> a(static_cast<size_t>(hi - lo + 1));
    Real twopi = 2 * pi();
    for (int j = 0; j < n; ++j) {
      Real th = twopi * j / n;
      Complex e(bmp::cos(th), bmp::sin(th));
      Complex pt = e * radius;
      Complex val = f(center + pt);
      // multiply by pt^(-k)
      Complex inv = Complex(1) / pt;
      Complex pk = pow(inv, lo);
      for (int k = lo; k <= hi; ++k) {
        a[static_cast<size_t>(k - lo)] += val * pk;
        pk *= inv;
      }
    }
    for (auto& x : a) x *= Real(1) / Real(n);
    return a;
  };
  int n = 64;
  std::vector<Complex> prev = estimate(n);
  for (; n <= 4096; n *= 2) {
    std::vector<Complex> next = estimate(2 * n);
    Real diff = 0;
    for (size_t k = 0; k < next.size(); ++k) diff = std::max(diff, abs(next[k] - prev[k]));
    if (diff < tol) return next;
    prev = std::move(next);
  }
  throw RadiusTooSmall("Laurent quadrature did not converge; choose a radius away from other poles");
}

Real shadow_check(const ComplexFn& lhs, const ComplexFn& rhs, const NumericLattice& L,
                  int trials, std::uint64_t seed) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  Real worst = 0;
  int done = 0;
  for (int attempt = 0; done < trials && attempt < 50 * trials + 50; ++attempt) {
    Complex z = L.omega1() * Real(u(rng)) + L.omega2() * Real(u(rng));
    try {
      Real r = abs(lhs(z) - rhs(z));
      worst = std::max(worst, r);
      ++done;
    } catch (const NearPole&) {
    } catch (const AtPole&) {
    }
  }
  return worst;
}

Complex wp_inverse(const NumericLattice& L, const Complex& w) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  const Complex& a = L.reduced1();
  const Complex& b = L.reduced2();
  Complex best;
  Real best_err = -1;
  const int grid = 24;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      if (i == 0 && j == 0) continue;
      Complex z = a * Real((i + 0.5) / grid - 0.5) + b * Real((j + 0.5) / grid - 0.5);
      if (abs(z) < L.shortest() / 100) continue;
      Real e = abs(wp_eval(L, z).wp - w);
      if (best_err < 0 || e < best_err) {
        best_err = e;
        best = z;
      }
    }
  Complex z = best;
  Real tol = pow10(-L.working_digits() + 5) * (1 + abs(w));
  for (int it = 0; it < 200; ++it) {
    WpValues v = wp_eval(L, z);
    Complex r = v.wp - w;
    if (abs(r) < tol) return z;
    if (abs(v.dwp) < L.pole_floor()) {
      // double root of ℘ - w: a half-period; Newton on ℘' instead
      Complex ddwp = Complex(6) * v.wp * v.wp - L.g2() * Real(0.5);
      z -= v.dwp / ddwp;
      continue;
    }
    z -= r / v.dwp;
  }
  return z;
}

}  // namespace ellip
