#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

#include "ellip/scalar.hpp"

namespace ellip {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default MPFR working precision (decimal digits) for the
/// lifetime of the guard; values created inside inherit it.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// Arbitrary-precision complex number over MPFR reals.
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(long r) : re(r), im(0) {}  // NOLINT
  Complex(int r) : re(r), im(0) {}  // NOLINT
  Complex(double r) : re(r), im(0) {}  // NOLINT

  static Complex from_scalar(const Scalar& s);
  static Complex i() { return Complex(Real(0), Real(1)); }

  Complex conj() const { return {re, -im}; }
  Real norm() const { return re * re + im * im; }

  Complex operator-() const { return {-re, -im}; }
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sqrt(const Complex& z);
/// Principal n-th root times e^(2 pi i k / n).
Complex root(const Complex& z, int n, int k);
Complex pow(const Complex& z, int e);
Real pi();

/// Decimal-string pair ["re","im"] with the given number of significant digits.
std::string to_decimal(const Real& x, int digits);
Real parse_real(std::string_view text);

/// 10^e as a Real at the current precision.
Real pow10(int e);

}  // namespace ellip
