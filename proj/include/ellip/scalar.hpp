#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace ellip {

/// Exact element of the Gaussian rationals Q(i). Purely rational values
/// (imaginary part zero) take a fast path in every operation, so Q is
/// used at no extra cost.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& re) : re_(re) {}  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static Scalar ratio(long num, long den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Accepts "p", "p/q", and Gaussian forms such as "1/2+3/4i", "-2i", "i".
  static Scalar parse(std::string_view text);
  std::string str() const;

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_integer() const { return is_real() && re_.get_den() == 1; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inv() const;
  Scalar pow(long e) const;
  /// |x|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (real part, then imaginary part); only used for
  /// deterministic containers, not a field order.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p" or "p/q" into a canonical rational; throws ParseError.
mpq_class parse_rational(std::string_view text);
std::string rational_str(const mpq_class& q);

/// Returns r with q^r == a for integer r in [-lim, lim], if any.
std::optional<int> exact_log(const Scalar& a, long q, int lim = 64);

}  // namespace ellip
