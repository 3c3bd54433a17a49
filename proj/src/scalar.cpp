#include "ellip/scalar.hpp"

#include <cctype>
#include <ostream>

#include "ellip/errors.hpp"

namespace ellip {

Scalar Scalar::ratio(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.re_ = -re_;
  if (sgn(im_) != 0) r.im_ = -im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  if (sgn(im_) == 0) return Scalar(mpq_class(1) / re_);
  mpq_class n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

mpq_class parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    size_t k = (t[0] == '-') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  mpq_class q;
  q.get_num().set_str(num, 10);
  q.get_den().set_str(den, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s));
  s.pop_back();
  // split at the last sign that is not in leading position
  size_t split = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
  return Scalar(parse_rational(re_part), parse_rational(im_part));
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_str(re_);
  std::string im = rational_str(im_);
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += im + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

std::optional<int> exact_log(const Scalar& a, long q, int lim) {
  if (!a.is_real() || sgn(a.re()) <= 0) return std::nullopt;
  mpq_class v = a.re();
  mpq_class qq(q);
  int r = 0;
  while (v > 1 && r <= lim) {
    v /= qq;
    ++r;
  }
  while (v < 1 && r >= -lim) {
    v *= qq;
    --r;
  }
  if (v == 1) return r;
  return std::nullopt;
}

}  // namespace ellip
