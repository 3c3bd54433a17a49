#pragma once

// Random generators shared by the test binaries and the acceptance suites.

#include <random>

#include "ellip/appxa.hpp"
#include "ellip/divisors.hpp"
#include "ellip/ellfun.hpp"
#include "ellip/linsys.hpp"
#include "ellip/monodromy.hpp"
#include "ellip/sring.hpp"

namespace ellip::testing {

inline Scalar random_scalar(std::mt19937_64& rng, long height = 2) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  return Scalar::ratio(num(rng), den(rng));
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, long height = 2) {
  for (;;) {
    Scalar s = random_scalar(rng, height);
    if (!s.is_zero()) return s;
  }
}

inline Poly random_poly(std::mt19937_64& rng, int deg, long height = 2) {
  std::vector<Scalar> c;
  for (int k = 0; k <= deg; ++k) c.push_back(random_scalar(rng, height));
  return Poly(c);
}

/// Random a + bY with numerators of degree <= deg and denominators that are
/// either 1 or a monic linear factor.
inline EllFun random_ellfun(std::mt19937_64& rng, const ExactCurve& c, int deg,
                            long height = 2) {
  auto part = [&]() {
    if (rng() % 3 == 0) return RatFun();
    Poly num = random_poly(rng, deg, height);
    if (rng() % 2 == 0) return RatFun(num);
    Poly den(std::vector<Scalar>{random_scalar(rng, height), Scalar(1)});
    return RatFun(num, den);
  };
  RatFun a = part();
  RatFun b = part();
  return EllFun(c, a, b);
}

/// Random polynomial element of degree <= deg in X plus Y times one of
/// degree <= deg - 2 (no denominators).
inline EllFun random_ellfun_poly(std::mt19937_64& rng, const ExactCurve& c, int deg,
                                 long height = 2) {
  RatFun a(random_poly(rng, deg, height));
  RatFun b = deg >= 2 ? RatFun(random_poly(rng, deg - 2, height)) : RatFun();
  return EllFun(c, a, b);
}

/// Random element of S0 with degrees <= max_deg in z and ζ.
inline SElem random_selem(std::mt19937_64& rng, const ExactCurve& c, int max_deg = 3,
                          int terms = 4, int coeff_deg = 1) {
  SElem e(c);
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(terms));
  for (int t = 0; t < n; ++t) {
    int i = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    int j = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    e.add_term(i, j, random_ellfun(rng, c, coeff_deg));
  }
  return e;
}

/// Strictly upper triangular n×n matrix with small rational entries.
inline QMat random_nilpotent(std::mt19937_64& rng, size_t n, long height = 2) {
  QMat N(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) N(i, j) = random_scalar(rng, height).re();
  return N;
}

/// Commuting unipotent pair exp(N), exp(c1 N + c2 N^2) with N nilpotent.
inline UnipotentPair random_unipotent_pair(std::mt19937_64& rng, size_t n) {
  QMat N = random_nilpotent(rng, n);
  QMat N2 = Scalar(random_scalar(rng).re()) * N + Scalar(random_scalar(rng).re()) * (N * N);
  if (rng() % 2 == 0) std::swap(N, N2);
  return {nilpotent_exp(N), nilpotent_exp(N2)};
}

/// Forward-generated instance: g = (φ - a)(u) + p̃, f = (δ - c)(u),
/// p = (δ - c)(p̃) with p̃ = d z^r when a = q^r and 0 otherwise.
struct ForwardInstance {
  SElem u;
  Poly p_tilde;
  AppxAInstance inst;
};

inline ForwardInstance forward_instance(std::mt19937_64& rng, const ExactCurve& c, const Scalar& a,
                                        int deg_z = 3, int deg_zeta = 2, int terms = 4) {
  SElem u(c);
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(terms));
  for (int t = 0; t < n; ++t)
    u.add_term(static_cast<int>(rng() % static_cast<unsigned>(deg_z + 1)),
               static_cast<int>(rng() % static_cast<unsigned>(deg_zeta + 1)), random_ellfun(rng, c, 1));
  Scalar cc = random_scalar(rng);
  Poly pt;
  if (auto r = q_exponent(a, c.q())) pt = Poly::monomial(random_nonzero_scalar(rng), *r);
  SElem ptz = z_poly(c, pt);
  SElem g = phi_minus(u, a) + ptz;
  SElem f = apply_delta(u) - u * cc;
  // (δ - c)(d z^r) = (r - c) d z^r
  Poly p = pt.is_zero() ? Poly() : pt * (Scalar(pt.degree()) - cc);
  return {u, pt, AppxAInstance(g, f, a, cc, p)};
}

inline TorsionPoint torsion(long a, long n, long b, long m) {
  return TorsionPoint(mpq_class(a, n), mpq_class(b, m));
}

/// Random divisor supported on N-torsion; `degree_zero` adds a multiple of
/// the origin.
inline PeriodicDivisor random_divisor(std::mt19937_64& rng, long N, int terms, bool degree_zero) {
  PeriodicDivisor D;
  std::uniform_int_distribution<long> c(0, N - 1), v(-3, 3);
  for (int k = 0; k < terms; ++k) D.add(torsion(c(rng), N, c(rng), N), v(rng));
  if (degree_zero) D.add(TorsionPoint(), -degree(D));
  return D;
}

/// Random principal divisor on N-torsion: a degree zero divisor corrected
/// by one point so its Abel-Jacobi sum vanishes.
inline PeriodicDivisor random_principal(std::mt19937_64& rng, long N, int terms) {
  PeriodicDivisor D = random_divisor(rng, N, terms, true);
  TorsionPoint s = abel_jacobi(D, 1);
  D.add(-s, 1);
  D.add(TorsionPoint(), -1);
  return D;
}

/// Small element of S with scalar or linear-in-X coefficients, so that
/// φ-iterates keep moderate degree.
inline SElem light_selem(std::mt19937_64& rng, const ExactCurve& c) {
  SElem e(c, false);
  int n = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < n; ++t) {
    EllFun k = EllFun::constant(c, random_nonzero_scalar(rng));
    if (rng() % 3 == 0) k += EllFun::X(c) * random_nonzero_scalar(rng);
    e.add_term(static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), k);
  }
  return e;
}

/// Triangular matrix with diagonal entries c·z^k (k in -1..1) and light
/// entries on one side; lower when `lower` is set.
inline Mat random_triangular(std::mt19937_64& rng, const ExactCurve& c, size_t n, bool lower) {
  Mat m(c, n, n);
  for (size_t i = 0; i < n; ++i) {
    int k = static_cast<int>(rng() % 3) - 1;
    m(i, i) = SFraction(SElem::monomial(EllFun::constant(c, random_nonzero_scalar(rng)), k, 0, false));
    for (size_t j = i + 1; j < n; ++j) {
      SFraction x(light_selem(rng, c));
      if (lower) m(j, i) = x;
      else m(i, j) = x;
    }
  }
  return m;
}

/// (A, B) = (φ(U)U⁻¹, ∂U·U⁻¹) from a fundamental matrix U.
inline std::pair<Mat, Mat> pair_from(const Mat& U) {
  Mat Ui = *U.inverse();
  return {apply_phi(U) * Ui, apply_partial(U) * Ui};
}

}  // namespace ellip::testing
