#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ellip/bigfloat.hpp"
#include "ellip/curve.hpp"
#include "ellip/ellfun.hpp"

namespace ellip {

/// Period lattice Zω1 + Zω2 with invariants and quasi-periods computed to
/// `digits` decimal digits (plus internal guard digits). Immutable.
class NumericLattice {
 public:
  NumericLattice(const Complex& omega1, const Complex& omega2, int digits);

  const Complex& omega1() const { return w1_; }
  const Complex& omega2() const { return w2_; }
  const Complex& g2() const { return g2_; }
  const Complex& g3() const { return g3_; }
  const Complex& eta1() const { return e1_; }
  const Complex& eta2() const { return e2_; }
  int digits() const { return digits_; }
  int working_digits() const { return working_; }
  /// Points closer than this (relative to the shortest period) count as poles.
  Real pole_floor() const;

  /// Gauss-reduced oriented basis of the same lattice and its quasi-periods.
  const Complex& reduced1() const { return r1_; }
  const Complex& reduced2() const { return r2_; }
  const Complex& reduced_eta1() const { return re1_; }
  const Complex& reduced_eta2() const { return re2_; }
  /// Laurent coefficients c_k of ℘ (index k, valid for k >= 2).
  const std::vector<Complex>& laurent() const { return c_; }
  Real shortest() const { return abs(r2_); }

  /// The lattice λΛ.
  NumericLattice scaled(const Complex& lambda) const;

 private:
  Complex w1_, w2_, g2_, g3_, e1_, e2_;
  Complex r1_, r2_, re1_, re2_;
  std::array<long, 4> m_{};  // (r1, r2)^T = m (w1, w2)^T
  std::vector<Complex> c_;
  int digits_;
  int working_;
};

NumericLattice make_numeric_lattice(const Complex& omega1, const Complex& omega2, int digits);

/// The lattice λΛ whose invariants equal the exact (g2, g3) of `curve`;
/// throws CurveMismatch when the j-invariants differ.
NumericLattice rescale_to_curve(const NumericLattice& L, const ExactCurve& curve);

/// A lattice with the exact invariants of `curve`, for the curve families
/// with a known period lattice: g3 = 0 (square), g2 = 0 (hexagonal) and
/// j = 287496 (τ = 2i). Throws Unsupported otherwise.
NumericLattice lattice_for_curve(const ExactCurve& curve, int digits);

Complex torsion_to_complex(const NumericLattice& L, const TorsionPoint& P);

struct WpValues {
  Complex wp;
  Complex dwp;
  Complex zeta;
};

/// ℘, ℘', ζ by argument reduction, Laurent series and duplication.
WpValues wp_eval(const NumericLattice& L, const Complex& z);
/// Same triple by trigonometric row sums; slower, used for cross-checks.
WpValues wp_eval_direct(const NumericLattice& L, const Complex& z);
std::pair<Complex, Complex> quasi_periods(const NumericLattice& L);

/// Evaluates a(℘(z0)) + b(℘(z0))·℘'(z0).
Complex eval_numeric(const EllFun& f, const NumericLattice& L, const Complex& z0);
/// Evaluates with given values of ℘, ℘'.
Complex eval_at(const EllFun& f, const Complex& wp, const Complex& dwp, const Real& floor);
Complex eval_poly(const Poly& p, const Complex& x);

using ComplexFn = std::function<Complex(const Complex&)>;

/// Laurent coefficients a_lo..a_hi of f around `center` by trapezoidal
/// quadrature on the circle of the given radius; the point count doubles
/// until two successive estimates agree to `digits`/2 digits.
std::vector<Complex> laurent_coeffs(const ComplexFn& f, const Complex& center, int lo, int hi,
                                    const Real& radius, int digits);

/// Max |lhs(z) - rhs(z)| over random points of the fundamental domain.
/// Points where either side throws NearPole or AtPole are resampled.
Real shadow_check(const ComplexFn& lhs, const ComplexFn& rhs, const NumericLattice& L,
                  int trials, std::uint64_t seed);

/// A point z with ℘(z) = w, by grid search and Newton iteration.
Complex wp_inverse(const NumericLattice& L, const Complex& w);

}  // namespace ellip
