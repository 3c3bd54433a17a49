#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "ellip/poly.hpp"
#include "ellip/scalar.hpp"

namespace ellip {

/// Memoised data of the multiplication-by-n maps of a curve:
/// X∘[n] = x, Y∘[n] = t·Y, ζ(nz) - nζ(z) = s·Y with x, t, s in Q(X).
struct IsogenyData {
  RatFun x;
  RatFun t;
  RatFun s;
};

/// Weierstrass curve Y^2 = 4X^3 - g2 X - g3 together with the integer
/// multiplier q. Copies share one memo table, so a handle is cheap to pass
/// around and safe to use from several threads.
class ExactCurve {
 public:
  ExactCurve(const Scalar& g2, const Scalar& g3, long q);

  const Scalar& g2() const { return d_->g2; }
  const Scalar& g3() const { return d_->g3; }
  long q() const { return d_->q; }
  Scalar discriminant() const;
  /// F(X) = 4X^3 - g2 X - g3.
  const Poly& cubic() const { return d_->cubic; }
  /// 6X^2 - g2/2, the derivative of Y.
  const Poly& dy() const { return d_->dy; }

  /// Same invariants (q is ignored).
  bool same_curve(const ExactCurve& o) const;
  friend bool operator==(const ExactCurve& a, const ExactCurve& b) {
    return a.same_curve(b) && a.q() == b.q();
  }

  /// Returns the memoised isogeny data for n >= 1, computing and caching
  /// all missing levels up to n.
  const IsogenyData& isogeny(int n) const;

  std::string str() const;

 private:
  struct Data {
    Scalar g2, g3;
    long q;
    Poly cubic, dy;
    mutable std::mutex mu;
    mutable std::map<int, std::unique_ptr<IsogenyData>> memo;
  };
  std::shared_ptr<Data> d_;
};

ExactCurve make_exact_curve(const Scalar& g2, const Scalar& g3, long q);

/// The point r1·ω1 + r2·ω2 of C/Λ, with 0 <= r_i < 1.
class TorsionPoint {
 public:
  TorsionPoint() = default;
  TorsionPoint(mpq_class r1, mpq_class r2);
  static TorsionPoint parse(std::string_view r1, std::string_view r2);

  const mpq_class& r1() const { return r1_; }
  const mpq_class& r2() const { return r2_; }
  bool is_zero() const { return sgn(r1_) == 0 && sgn(r2_) == 0; }
  /// Smallest n >= 1 with n·P = 0.
  long order() const;

  TorsionPoint operator-() const;
  TorsionPoint operator+(const TorsionPoint& o) const;
  TorsionPoint operator-(const TorsionPoint& o) const;
  TorsionPoint operator*(long n) const;
  friend TorsionPoint operator*(const mpq_class& n, const TorsionPoint& p);

  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.r1_ == b.r1_ && a.r2_ == b.r2_;
  }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) {
    int c = cmp(a.r1_, b.r1_);
    return c != 0 ? c < 0 : cmp(a.r2_, b.r2_) < 0;
  }

  std::string str() const;

 private:
  mpq_class r1_{0};
  mpq_class r2_{0};
};

/// x mod 1 in [0, 1).
mpq_class frac(const mpq_class& x);

}  // namespace ellip
