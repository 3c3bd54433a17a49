#include "ellip/integration.hpp"

#include <set>
#include <stdexcept>

#include "ellip/errors.hpp"
#include "ellip/linalg.hpp"

namespace ellip {

namespace {

/// Solves Σ x_k cols[k] = rhs coefficientwise over Q(i).
std::vector<Scalar> solve_poly_system(const std::vector<Poly>& cols, const Poly& rhs) {
  int rows = rhs.degree() + 1;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  DenseMatrix<Scalar> m(static_cast<size_t>(std::max(rows, 1)), cols.size(), Scalar());
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i <= cols[j].degree(); ++i) m(static_cast<size_t>(i), j) = cols[j].coeff(i);
  std::vector<Scalar> b(m.rows, Scalar());
  for (int i = 0; i <= rhs.degree(); ++i) b[static_cast<size_t>(i)] = rhs.coeff(i);
  auto x = solve(m, b, Scalar());
  if (!x) throw std::logic_error("Hermite ansatz is inconsistent");
  return *x;
}

Poly from_slice(const std::vector<Scalar>& x, size_t begin, size_t n) {
  return Poly(std::vector<Scalar>(x.begin() + static_cast<long>(begin),
                                  x.begin() + static_cast<long>(begin + n)));
}

struct EvenPart {
  RatFun v;  // coefficient of Y in u
  Scalar s, r;
  RatFun rem;
};

/// a = ∂(vY) + s - rX + R/P1, with ∂(vY) = v'F + v F'/2.
EvenPart reduce_even(const RatFun& a, const ExactCurve& c) {
  EvenPart out;
  if (a.is_zero()) return out;
  const Poly& F = c.cubic();
  const Poly& dy = c.dy();
  const Poly& A = a.num();
  const Poly& D = a.den();
  Poly G(1), P1(1);
  auto sq = squarefree(D);
  for (size_t i = 0; i < sq.size(); ++i) {
    int mult = static_cast<int>(i) + 1;
    Poly onF = gcd(sq[i], F);
    Poly off = sq[i] / onF;
    G *= onF.pow(mult) * off.pow(mult - 1);
    P1 *= off;
  }
  int d = A.degree() - D.degree();
  int nN = G.degree() + std::max(d - 2, 0) + 1;
  int nR = P1.degree();
  Poly G2 = G * G;
  Poly dG = G.derivative();
  std::vector<Poly> cols;
  for (int k = 0; k < nN; ++k) {
    Poly xk = Poly::monomial(Scalar(1), k);
    cols.push_back(((xk.derivative() * G - xk * dG) * F + xk * G * dy) * D * P1);
  }
  cols.push_back(G2 * D * P1);
  cols.push_back(-(Poly::x() * G2 * D * P1));
  for (int k = 0; k < nR; ++k) cols.push_back(Poly::monomial(Scalar(1), k) * G2 * D);
  auto x = solve_poly_system(cols, A * G2 * P1);
  out.v = RatFun(from_slice(x, 0, static_cast<size_t>(nN)), G);
  out.s = x[static_cast<size_t>(nN)];
  out.r = x[static_cast<size_t>(nN + 1)];
  out.rem = RatFun(from_slice(x, static_cast<size_t>(nN + 2), static_cast<size_t>(nR)), P1);
  return out;
}

struct OddPart {
  RatFun w;  // even summand of u
  RatFun rem;
};

/// b = w' + T/Q1 with w rational and Q1 the squarefree part of den(b).
OddPart reduce_odd(const RatFun& b) {
  OddPart out;
  if (b.is_zero()) return out;
  const Poly& B = b.num();
  const Poly& E = b.den();
  Poly H(1), Q1(1);
  auto sq = squarefree(E);
  for (size_t i = 0; i < sq.size(); ++i) {
    H *= sq[i].pow(static_cast<int>(i));
    Q1 *= sq[i];
  }
  int nM = H.degree() + std::max(B.degree() - E.degree() + 1, 0) + 1;
  int nT = Q1.degree();
  Poly H2 = H * H;
  Poly dH = H.derivative();
  std::vector<Poly> cols;
  for (int k = 0; k < nM; ++k) {
    Poly xk = Poly::monomial(Scalar(1), k);
    cols.push_back((xk.derivative() * H - xk * dH) * E * Q1);
  }
  for (int k = 0; k < nT; ++k) cols.push_back(Poly::monomial(Scalar(1), k) * H2 * E);
  auto x = solve_poly_system(cols, B * H2 * Q1);
  out.w = RatFun(from_slice(x, 0, static_cast<size_t>(nM)), H);
  out.rem = RatFun(from_slice(x, static_cast<size_t>(nM), static_cast<size_t>(nT)), Q1);
  return out;
}

}  // namespace

IntegrationResult elliptic_primitive(const EllFun& h) {
  const ExactCurve& c = h.curve();
  EvenPart ev = reduce_even(h.a(), c);
  OddPart od = reduce_odd(h.b());
  if (!ev.rem.is_zero() || !od.rem.is_zero()) {
    ResidueObstruction obs{ev.rem, od.rem, Scalar()};
    // b ~ k/X at infinity and Y/X ~ -2/z near 0
    const Poly& T = od.rem.num();
    const Poly& Q = od.rem.den();
    if (!T.is_zero() && T.degree() == Q.degree() - 1) obs.origin_residue = Scalar(-2) * T.lead();
    return obs;
  }
  return PrimitiveResult{EllFun(c, od.w, ev.v), ev.r, ev.s};
}

EllFun primitive_derivative(const PrimitiveResult& w) {
  const ExactCurve& c = w.u.curve();
  return derive(w.u) - EllFun::X(c) * w.r + EllFun::constant(c, w.s);
}

namespace {

std::optional<mpq_class> recognize_rational(const Real& x, const Real& tol, long maxden = 1000000) {
  Real y = x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    Real fl = boost::multiprecision::floor(y);
    mpz_class a(fl.convert_to<long>());
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 > maxden) return std::nullopt;
    Real approx = Real(p1.get_si()) / Real(q1.get_si());
    if (boost::multiprecision::abs(x - approx) < tol) return mpq_class(p1, q1);
    Real rest = y - fl;
    if (rest < tol) return std::nullopt;
    y = 1 / rest;
  }
  return std::nullopt;
}

void check_lattice(const ExactCurve& c, const NumericLattice& L) {
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  Real tol = pow10(-(L.digits() / 2));
  if (abs(L.g2() - Complex::from_scalar(c.g2())) > tol || abs(L.g3() - Complex::from_scalar(c.g3())) > tol)
    throw CurveMismatch("numeric lattice does not carry the invariants of the curve");
}

/// Pole support of h among torsion points of order <= 12.
std::vector<TorsionPoint> pole_points(const EllFun& h, const NumericLattice& L) {
  std::vector<TorsionPoint> pts{TorsionPoint()};
  Poly p = h.a().den() * h.b().den();
  if (p.degree() <= 0) return pts;
  p = (p / gcd(p, p.derivative())).monic();
  Real tol = pow10(-(L.digits() / 2));
  Real scale = 0;
  for (const auto& c : p.coeffs()) scale += abs(Complex::from_scalar(c));
  std::set<TorsionPoint> cand;
  for (long n = 2; n <= 12; ++n)
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        TorsionPoint t(mpq_class(a, n), mpq_class(b, n));
        if (!t.is_zero()) cand.insert(t);
      }
  std::vector<Complex> roots;
  for (const auto& t : cand) {
    Complex x = wp_eval(L, torsion_to_complex(L, t)).wp;
    Real mag = 1 + abs(x);
    if (abs(eval_poly(p, x)) > tol * scale * boost::multiprecision::pow(mag, p.degree())) continue;
    pts.push_back(t);
    bool fresh = true;
    for (const auto& r : roots)
      if (abs(r - x) < tol * mag) fresh = false;
    if (fresh) roots.push_back(x);
  }
  if (static_cast<int>(roots.size()) != p.degree())
    throw UnresolvedPoles("only " + std::to_string(roots.size()) + " of " + std::to_string(p.degree()) +
                          " pole abscissae lie over torsion points of order <= 12");
  return pts;
}

Real torus_distance(const NumericLattice& L, const TorsionPoint& a, const TorsionPoint& b) {
  TorsionPoint d = a - b;
  Real best = -1;
  for (long i = -1; i <= 0; ++i)
    for (long j = -1; j <= 0; ++j) {
      Real r = abs(L.omega1() * Real(mpq_class(d.r1() + i).get_d()) +
                   L.omega2() * Real(mpq_class(d.r2() + j).get_d()));
      if (best < 0 || r < best) best = r;
    }
  return best;
}

PeriodicDivisor coefficient_divisor(const EllFun& h, int k, const NumericLattice& L) {
  check_lattice(h.curve(), L);
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  PeriodicDivisor out;
  if (h.is_constant()) return out;
  auto pts = pole_points(h, L);
  Real tol = pow10(-(L.digits() / 3));
  auto f = [&](const Complex& z) { return eval_numeric(h, L, z); };
  for (const auto& t : pts) {
    Real radius = L.shortest() / 4;
    for (const auto& o : pts)
      if (!(o == t)) radius = std::min(radius, torus_distance(L, t, o) / 3);
    auto co = laurent_coeffs(f, torsion_to_complex(L, t), k, k, radius, L.digits());
    const Complex& v = co[0];
    if (abs(v) < tol) continue;
    auto re = recognize_rational(v.re, tol);
    if (!re || boost::multiprecision::abs(v.im) > tol)
      throw UnresolvedPoles("coefficient at " + t.str() + " is not a recognisable rational");
    out.add(t, *re);
  }
  return out;
}

}  // namespace

PeriodicDivisor residual_points(const EllFun& h, const NumericLattice& L) {
  return coefficient_divisor(h, -1, L);
}

PeriodicDivisor polar_divisor(const EllFun& h, int ell, const NumericLattice& L) {
  if (ell < 1) throw DomainViolation("ell must be >= 1");
  return coefficient_divisor(h, -ell, L);
}

}  // namespace ellip
