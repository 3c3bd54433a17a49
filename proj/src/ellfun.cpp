#include "ellip/ellfun.hpp"

#include <ostream>

#include "ellip/errors.hpp"
#include "ellip/linalg.hpp"

namespace ellip {

void EllFun::check(const EllFun& o) const {
  if (!curve_.same_curve(o.curve_))
    throw CurveMismatch("elements live on different curves");
}

EllFun& EllFun::operator+=(const EllFun& o) {
  check(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EllFun& EllFun::operator-=(const EllFun& o) {
  check(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EllFun& EllFun::operator*=(const EllFun& o) {
  check(o);
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  RatFun a = a_ * o.a_ + b_ * o.b_ * RatFun(curve_.cubic());
  RatFun b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

EllFun& EllFun::operator*=(const Scalar& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

EllFun EllFun::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero function");
  if (b_.is_zero()) return EllFun(curve_, a_.inv());
  if (a_.is_zero()) return EllFun(curve_, RatFun(), (b_ * RatFun(curve_.cubic())).inv());
  RatFun norm = a_ * a_ - b_ * b_ * RatFun(curve_.cubic());
  RatFun ni = norm.inv();
  return EllFun(curve_, a_ * ni, -(b_ * ni));
}

EllFun& EllFun::operator/=(const EllFun& o) {
  check(o);
  if (o.is_zero()) throw DivisionByZero("division by zero function");
  if (o.b_.is_zero()) {
    RatFun i = o.a_.inv();
    a_ *= i;
    b_ *= i;
    return *this;
  }
  return *this *= o.inv();
}

EllFun EllFun::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  EllFun result = constant(curve_, Scalar(1));
  EllFun base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string EllFun::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!a_.is_zero()) out = a_.str();
  if (!b_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += b_.is_constant() && b_.constant_value().is_one() ? "Y" : "(" + b_.str() + ")*Y";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const EllFun& f) { return os << f.str(); }

EllFun derive(const EllFun& f) {
  const ExactCurve& c = f.curve();
  // d(a + bY) = a' Y + b' Y·Y + b Y' with Y·Y = F
  RatFun even = f.b().derivative() * RatFun(c.cubic()) + f.b() * RatFun(c.dy());
  return EllFun(c, std::move(even), f.a().derivative());
}

EllFun mult_by_n(const EllFun& f, int n) {
  if (n < 1) throw DomainViolation("mult_by_n requires n >= 1");
  if (n == 1 || f.is_constant()) return f;
  const IsogenyData& iso = f.curve().isogeny(n);
  RatFun a = f.a().compose(iso.x);
  RatFun b = f.b().is_zero() ? RatFun() : f.b().compose(iso.x) * iso.t;
  return EllFun(f.curve(), std::move(a), std::move(b));
}

namespace {

struct ScalarField {
  Scalar v;
  bool is_zero() const { return v.is_zero(); }
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b) { return {a.v + b.v}; }
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b) { return {a.v - b.v}; }
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b) { return {a.v * b.v}; }
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b) { return {a.v / b.v}; }
};

/// A with A∘inner = r, where inner = P/Q has degree m.
std::optional<RatFun> decompose(const RatFun& r, const RatFun& inner) {
  if (r.is_constant()) return r;
  int m = inner.degree();
  int deg = r.degree();
  if (deg % m != 0) return std::nullopt;
  int d = deg / m;
  const Poly& P = inner.num();
  const Poly& Q = inner.den();
  std::vector<Poly> basis;
  for (int k = 0; k <= d; ++k) basis.push_back(P.pow(k) * Q.pow(d - k));
  std::vector<Poly> cols;
  for (int k = 0; k <= d; ++k) cols.push_back(r.num() * basis[static_cast<size_t>(k)]);
  for (int k = 0; k <= d; ++k) cols.push_back(-(r.den() * basis[static_cast<size_t>(k)]));
  int rows = 0;
  for (const auto& c : cols) rows = std::max(rows, c.degree() + 1);
  DenseMatrix<ScalarField> mat(static_cast<size_t>(rows), cols.size(), ScalarField{});
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i <= cols[j].degree(); ++i)
      mat(static_cast<size_t>(i), j) = ScalarField{cols[j].coeff(i)};
  auto ker = nullspace(mat, ScalarField{}, ScalarField{Scalar(1)});
  for (const auto& v : ker) {
    std::vector<Scalar> dn, nm;
    for (int k = 0; k <= d; ++k) {
      dn.push_back(v[static_cast<size_t>(k)].v);
      nm.push_back(v[static_cast<size_t>(d + 1 + k)].v);
    }
    Poly den(dn);
    if (den.is_zero()) continue;
    RatFun A(Poly(nm), den);
    if (A.compose(inner) == r) return A;
  }
  return std::nullopt;
}

}  // namespace

std::optional<EllFun> mult_by_n_preimage(const EllFun& f, int n) {
  if (n < 1) throw DomainViolation("mult_by_n_preimage requires n >= 1");
  if (n == 1 || f.is_constant()) return f;
  const IsogenyData& iso = f.curve().isogeny(n);
  auto a = decompose(f.a(), iso.x);
  if (!a) return std::nullopt;
  RatFun b;
  if (!f.b().is_zero()) {
    auto bb = decompose(f.b() / iso.t, iso.x);
    if (!bb) return std::nullopt;
    b = *bb;
  }
  return EllFun(f.curve(), *a, b);
}

EllFun zeta_defect(const ExactCurve& curve, int n) {
  if (n < 1) throw DomainViolation("zeta_defect requires n >= 1");
  return EllFun(curve, RatFun(), curve.isogeny(n).s);
}

}  // namespace ellip
