#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ellip/scalar.hpp"

namespace ellip {

/// Dense univariate polynomial over Q(i), coefficients degree-ascending.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Scalar(c)) {}  // NOLINT
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly x() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  static Poly monomial(const Scalar& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Scalar& lead() const;
  Scalar coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool is_real() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  Poly monic() const;
  Poly pow(int e) const;
  /// p(q(X)).
  Poly compose(const Poly& q) const;
  /// sum_k c_k N^k D^(m-k); requires m >= degree().
  Poly homogenized_compose(const Poly& num, const Poly& den, int m) const;

  std::string str(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);  // exact quotient, throws if not
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m (requires gcd(a, m) = 1).
Poly inverse_mod(const Poly& a, const Poly& m);
/// Squarefree decomposition (Yun): returns f_1..f_k monic and pairwise
/// coprime with p = lead(p) * prod f_i^i.
std::vector<Poly> squarefree(const Poly& p);

/// Reduced rational function num/den with monic den and gcd(num, den) = 1.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Scalar& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(long c) : RatFun(Scalar(c)) {}  // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFun(Poly num, Poly den);  // reduces

  static RatFun x() { return RatFun(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.degree() == 0; }
  bool is_constant() const { return is_poly() && num_.degree() <= 0; }
  Scalar constant_value() const { return num_.coeff(0); }
  /// max(deg num, deg den).
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  RatFun& operator*=(const Scalar& s);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator*(RatFun a, const Scalar& s) { return a *= s; }
  friend RatFun operator*(const Scalar& s, RatFun a) { return a *= s; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFun inv() const;
  RatFun pow(int e) const;
  RatFun derivative() const;
  Scalar eval(const Scalar& x) const;
  /// this(r(X)).
  RatFun compose(const RatFun& r) const;

  std::string str(const std::string& var = "X") const;

 private:
  struct NoReduce {};
  RatFun(Poly num, Poly den, NoReduce) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFun& r);

}  // namespace ellip
