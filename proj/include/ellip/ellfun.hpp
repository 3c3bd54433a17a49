#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ellip/curve.hpp"
#include "ellip/poly.hpp"

namespace ellip {

/// Element a(X) + b(X)·Y of the function field of a curve, X = ℘, Y = ℘'.
class EllFun {
 public:
  explicit EllFun(ExactCurve curve) : curve_(std::move(curve)) {}
  EllFun(ExactCurve curve, RatFun a, RatFun b = RatFun())
      : curve_(std::move(curve)), a_(std::move(a)), b_(std::move(b)) {}

  static EllFun X(const ExactCurve& c) { return EllFun(c, RatFun::x()); }
  static EllFun Y(const ExactCurve& c) { return EllFun(c, RatFun(), RatFun(1)); }
  static EllFun constant(const ExactCurve& c, const Scalar& s) { return EllFun(c, RatFun(s)); }

  const ExactCurve& curve() const { return curve_; }
  const RatFun& a() const { return a_; }
  const RatFun& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_constant() const { return b_.is_zero() && a_.is_constant(); }
  /// Value of a constant element; call only when is_constant().
  Scalar constant_value() const { return a_.constant_value(); }
  bool is_odd() const { return a_.is_zero(); }
  bool is_even() const { return b_.is_zero(); }

  EllFun operator-() const { return EllFun(curve_, -a_, -b_); }
  EllFun& operator+=(const EllFun& o);
  EllFun& operator-=(const EllFun& o);
  EllFun& operator*=(const EllFun& o);
  EllFun& operator/=(const EllFun& o);
  EllFun& operator*=(const Scalar& s);
  friend EllFun operator+(EllFun f, const EllFun& g) { return f += g; }
  friend EllFun operator-(EllFun f, const EllFun& g) { return f -= g; }
  friend EllFun operator*(EllFun f, const EllFun& g) { return f *= g; }
  friend EllFun operator/(EllFun f, const EllFun& g) { return f /= g; }
  friend EllFun operator*(EllFun f, const Scalar& s) { return f *= s; }
  friend EllFun operator*(const Scalar& s, EllFun f) { return f *= s; }
  friend bool operator==(const EllFun& f, const EllFun& g) {
    return f.a_ == g.a_ && f.b_ == g.b_ && f.curve_.same_curve(g.curve_);
  }

  EllFun inv() const;
  EllFun pow(int e) const;

  std::string str() const;

 private:
  void check(const EllFun& o) const;
  ExactCurve curve_;
  RatFun a_;
  RatFun b_;
};

std::ostream& operator<<(std::ostream& os, const EllFun& f);

/// The derivation d/dz: X' = Y, Y' = 6X^2 - g2/2.
EllFun derive(const EllFun& f);

/// f∘[n], i.e. the element g with g(z) = f(nz).
EllFun mult_by_n(const EllFun& f, int n);

/// The element e with mult_by_n(e, n) = f, if f lies in the image.
std::optional<EllFun> mult_by_n_preimage(const EllFun& f, int n);

/// ζ(nz) - nζ(z) as an element of the function field.
EllFun zeta_defect(const ExactCurve& curve, int n);

}  // namespace ellip
