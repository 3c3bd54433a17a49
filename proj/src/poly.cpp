#include "ellip/poly.hpp"

#include <ostream>
#include <sstream>

#include "ellip/errors.hpp"

namespace ellip {

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Scalar& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  Poly p;
  p.c_ = std::move(v);
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Scalar& Poly::lead() const {
  static const Scalar zero;
  return c_.empty() ? zero : c_.back();
}

Scalar Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<size_t>(k)];
}

bool Poly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
  bool real = a.is_real() && b.is_real();
  if (real) {
    // accumulate real products directly to avoid Scalar temporaries
    std::vector<mpq_class> acc(out.size());
    mpq_class t;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        mpq_mul(t.get_mpq_t(), a.c_[i].re().get_mpq_t(), b.c_[j].re().get_mpq_t());
        acc[i + j] += t;
      }
    }
    for (size_t k = 0; k < out.size(); ++k) out[k] = Scalar(acc[k]);
  } else {
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc;
  for (size_t k = c_.size(); k-- > 0;) {
    acc *= x;
    acc += c_[k];
  }
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return *this * lead().inv();
}

Poly Poly::pow(int e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::compose(const Poly& q) const {
  Poly acc;
  for (size_t k = c_.size(); k-- > 0;) {
    acc *= q;
    acc += Poly(c_[k]);
  }
  return acc;
}

Poly Poly::homogenized_compose(const Poly& num, const Poly& den, int m) const {
  if (is_zero()) return {};
  // Horner in the pair (num, den): acc = sum c_k num^k den^(deg-k), then
  // multiply by den^(m-deg).
  int d = degree();
  Poly acc(c_[static_cast<size_t>(d)]);
  Poly dpow(1);
  for (int k = d - 1; k >= 0; --k) {
    acc *= num;
    dpow *= den;
    if (!c_[static_cast<size_t>(k)].is_zero()) acc += dpow * c_[static_cast<size_t>(k)];
  }
  if (m > d) acc *= den.pow(m - d);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string c = c_[k].str();
    bool complex = !c_[k].is_real() && sgn(c_[k].re()) != 0;
    if (!first) os << (c[0] == '-' && !complex ? " - " : " + ");
    if (!first && c[0] == '-' && !complex) c.erase(0, 1);
    if (complex) c = "(" + c + ")";
    if (k == 0) {
      os << c;
    } else {
      if (c == "-1") os << "-";
      else if (c != "1") os << c << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(static_cast<size_t>(a.degree() - db) + 1);
  Scalar inv_lead = b.lead().inv();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    Scalar& top = r[static_cast<size_t>(k)];
    if (top.is_zero()) continue;
    Scalar f = top * inv_lead;
    for (int j = 0; j <= db; ++j) {
      if (bc[static_cast<size_t>(j)].is_zero()) continue;
      r[static_cast<size_t>(k - db + j)] -= f * bc[static_cast<size_t>(j)];
    }
    q[static_cast<size_t>(k - db)] = std::move(f);
  }
  r.resize(static_cast<size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return Poly(1);
    Poly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Scalar li = r0.lead().inv();
  return {r0 * li, s0 * li, t0 * li};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  ExtGcd e = ext_gcd(a % m, m);
  if (e.g.degree() != 0) throw DivisionByZero("polynomial not invertible modulo m");
  return e.s % m;
}

std::vector<Poly> squarefree(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() <= 0) return out;
  Poly f = p.monic();
  Poly fp = f.derivative();
  Poly a = gcd(f, fp);
  Poly b = f / a;
  Poly c = fp / a;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (!den_.is_monic()) {
    Scalar li = den_.lead().inv();
    num_ *= li;
    den_ *= li;
  }
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, NoReduce{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  if (is_poly() && o.is_poly()) {
    num_ += o.num_;
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  if (g.degree() == 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  Poly bd = den_ / g;
  Poly dd = o.den_ / g;
  num_ = num_ * dd + o.num_ * bd;
  den_ = bd * o.den_;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  Poly h = gcd(num_, g);
  if (h.degree() > 0) {
    num_ = num_ / h;
    den_ = den_ / h;
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (is_poly() && o.is_poly()) {
    num_ *= o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.degree() > 0 ? num_ / g1 : num_;
  Poly d2 = g1.degree() > 0 ? o.den_ / g1 : o.den_;
  Poly n2 = g2.degree() > 0 ? o.num_ / g2 : o.num_;
  Poly d1 = g2.degree() > 0 ? den_ / g2 : den_;
  num_ = n1 * n2;
  den_ = d1 * d2;
  if (!den_.is_monic()) {
    Scalar li = den_.lead().inv();
    num_ *= li;
    den_ *= li;
  }
  return *this;
}

RatFun& RatFun::operator*=(const Scalar& s) {
  if (s.is_zero()) return *this = RatFun();
  num_ *= s;
  return *this;
}

RatFun RatFun::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  RatFun r(den_, num_, NoReduce{});
  if (!r.den_.is_monic()) {
    Scalar li = r.den_.lead().inv();
    r.num_ *= li;
    r.den_ *= li;
  }
  return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inv(); }

RatFun RatFun::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  // powers of a reduced fraction stay reduced
  return RatFun(num_.pow(e), den_.pow(e), NoReduce{});
}

RatFun RatFun::derivative() const {
  if (is_poly()) return RatFun(num_.derivative() * den_.lead().inv());
  // (n/d)' = (n'd - nd')/d^2 ; reduce by gcd(d, d') structure
  Poly dp = den_.derivative();
  Poly g = gcd(den_, dp);
  Poly dg = den_ / g;
  Poly num = num_.derivative() * dg - num_ * (dp / g);
  return RatFun(std::move(num), dg * den_);
}

Scalar RatFun::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFun RatFun::compose(const RatFun& r) const {
  if (is_zero()) return RatFun();
  if (r.is_poly()) {
    Poly rp = r.num_ * r.den_.lead().inv();
    return RatFun(num_.compose(rp), den_.compose(rp));
  }
  // homogenized compositions of coprime pairs stay coprime
  int m = std::max(num_.degree(), den_.degree());
  Poly n = num_.homogenized_compose(r.num_, r.den_, m);
  Poly d = den_.homogenized_compose(r.num_, r.den_, m);
  RatFun out(std::move(n), std::move(d), NoReduce{});
  if (!out.den_.is_monic()) {
    Scalar li = out.den_.lead().inv();
    out.num_ *= li;
    out.den_ *= li;
  }
  return out;
}

std::string RatFun::str(const std::string& var) const {
  if (is_poly()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

}  // namespace ellip
