#include "ellip/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>

#include "ellip/errors.hpp"

namespace ellip {

namespace bmp = boost::multiprecision;

Complex Complex::from_scalar(const Scalar& s) {
  auto conv = [](const mpq_class& q) {
    Real n(q.get_num().get_mpz_t());
    Real d(q.get_den().get_mpz_t());
    return Real(n / d);
  };
  return {conv(s.re()), conv(s.im())};
}

Complex& Complex::operator/=(const Complex& o) {
  Real d = o.norm();
  if (d == 0) throw DivisionByZero("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const Complex& z) { return bmp::sqrt(z.norm()); }

Real arg(const Complex& z) { return bmp::atan2(z.im, z.re); }

Complex exp(const Complex& z) {
  Real m = bmp::exp(z.re);
  return {m * bmp::cos(z.im), m * bmp::sin(z.im)};
}

Complex sin(const Complex& z) {
  return {bmp::sin(z.re) * bmp::cosh(z.im), bmp::cos(z.re) * bmp::sinh(z.im)};
}

Complex cos(const Complex& z) {
  return {bmp::cos(z.re) * bmp::cosh(z.im), -(bmp::sin(z.re) * bmp::sinh(z.im))};
}

Complex sqrt(const Complex& z) { return root(z, 2, 0); }

Complex root(const Complex& z, int n, int k) {
  if (z.re == 0 && z.im == 0) return {};
  Real r = bmp::pow(abs(z), Real(1) / n);
  Real t = (arg(z) + 2 * pi() * k) / n;
  return {r * bmp::cos(t), r * bmp::sin(t)};
}

Complex pow(const Complex& z, int e) {
  if (e < 0) return Complex(1) / pow(z, -e);
  Complex result(1);
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real pow10(int e) { return bmp::pow(Real(10), e); }

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

Real parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty real literal");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw ParseError("malformed real literal '" + s + "'");
  }
}

}  // namespace ellip
