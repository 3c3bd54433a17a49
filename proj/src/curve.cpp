#include "ellip/curve.hpp"

#include "ellip/errors.hpp"

namespace ellip {

ExactCurve::ExactCurve(const Scalar& g2, const Scalar& g3, long q)
    : d_(std::make_shared<Data>()) {
  d_->g2 = g2;
  d_->g3 = g3;
  d_->q = q;
  if (q < 2) throw BadMultiplier("q must be an integer >= 2, got " + std::to_string(q));
  if (discriminant().is_zero())
    throw SingularCurve("g2^3 = 27 g3^2 for g2=" + g2.str() + ", g3=" + g3.str());
  d_->cubic = Poly(std::vector<Scalar>{-g3, -g2, Scalar(0), Scalar(4)});
  d_->dy = Poly(std::vector<Scalar>{-g2 / Scalar(2), Scalar(0), Scalar(6)});
}

ExactCurve make_exact_curve(const Scalar& g2, const Scalar& g3, long q) {
  return ExactCurve(g2, g3, q);
}

Scalar ExactCurve::discriminant() const {
  return g2().pow(3) - Scalar(27) * g3() * g3();
}

bool ExactCurve::same_curve(const ExactCurve& o) const {
  return d_ == o.d_ || (g2() == o.g2() && g3() == o.g3());
}

const IsogenyData& ExactCurve::isogeny(int n) const {
  if (n < 1) throw DomainViolation("isogeny level must be >= 1");
  std::lock_guard<std::mutex> lock(d_->mu);
  auto& memo = d_->memo;
  if (memo.empty()) {
    memo.emplace(1, std::make_unique<IsogenyData>(
                        IsogenyData{RatFun::x(), RatFun(1), RatFun(0)}));
  }
  int have = memo.rbegin()->first;
  const RatFun X = RatFun::x();
  const RatFun F(cubic());
  for (int k = have; k < n; ++k) {
    const IsogenyData& cur = *memo.at(k);
    // chord (or tangent at k = 1) slope, divided by Y
    RatFun l = k == 1 ? RatFun(dy(), cubic())
                      : (cur.t - RatFun(1)) / (cur.x - X);
    RatFun x = l * l * F * Scalar::ratio(1, 4) - cur.x - X;
    RatFun t = -(l * (x - X) + RatFun(1));
    RatFun s = cur.s + l * Scalar::ratio(1, 2);
    memo.emplace(k + 1, std::make_unique<IsogenyData>(
                            IsogenyData{std::move(x), std::move(t), std::move(s)}));
  }
  return *memo.at(n);
}

std::string ExactCurve::str() const {
  return "Y^2 = 4X^3 - (" + g2().str() + ")X - (" + g3().str() + "), q = " +
         std::to_string(q());
}

mpq_class frac(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class r = x - mpq_class(fl);
  r.canonicalize();
  return r;
}

TorsionPoint::TorsionPoint(mpq_class r1, mpq_class r2)
    : r1_(frac(r1)), r2_(frac(r2)) {}

TorsionPoint TorsionPoint::parse(std::string_view r1, std::string_view r2) {
  return TorsionPoint(parse_rational(r1), parse_rational(r2));
}

long TorsionPoint::order() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), r1_.get_den_mpz_t(), r2_.get_den_mpz_t());
  if (!l.fits_slong_p()) throw DomainViolation("torsion order too large");
  return l.get_si();
}

TorsionPoint TorsionPoint::operator-() const { return TorsionPoint(-r1_, -r2_); }

TorsionPoint TorsionPoint::operator+(const TorsionPoint& o) const {
  return TorsionPoint(r1_ + o.r1_, r2_ + o.r2_);
}

TorsionPoint TorsionPoint::operator-(const TorsionPoint& o) const {
  return TorsionPoint(r1_ - o.r1_, r2_ - o.r2_);
}

TorsionPoint TorsionPoint::operator*(long n) const {
  return TorsionPoint(r1_ * n, r2_ * n);
}

TorsionPoint operator*(const mpq_class& n, const TorsionPoint& p) {
  return TorsionPoint(n * p.r1_, n * p.r2_);
}

std::string TorsionPoint::str() const {
  return "(" + rational_str(r1_) + "," + rational_str(r2_) + ")";
}

}  // namespace ellip
