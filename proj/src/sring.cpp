#include "ellip/sring.hpp"

#include <sstream>

#include "ellip/errors.hpp"
#include "ellip/linalg.hpp"

namespace ellip {

SElem SElem::constant(const ExactCurve& c, const Scalar& s, bool s0) {
  return from(EllFun::constant(c, s), s0);
}

SElem SElem::from(const EllFun& f, bool s0) { return monomial(f, 0, 0, s0); }

SElem SElem::monomial(const EllFun& f, int i, int j, bool s0) {
  SElem e(f.curve(), s0);
  e.add_term(i, j, f);
  return e;
}

SElem SElem::z(const ExactCurve& c, bool s0) {
  return monomial(EllFun::constant(c, 1), 1, 0, s0);
}

SElem SElem::zeta(const ExactCurve& c, bool s0) {
  return monomial(EllFun::constant(c, 1), 0, 1, s0);
}

SElem SElem::in_s() const {
  SElem e = *this;
  e.s0_ = false;
  return e;
}

SElem SElem::in_s0() const {
  if (!t_.empty() && min_z() < 0)
    throw DomainViolation("element has negative powers of z and is not in S0");
  SElem e = *this;
  e.s0_ = true;
  return e;
}

EllFun SElem::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? EllFun(curve_) : it->second;
}

int SElem::deg_zeta() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

int SElem::min_z() const {
  if (t_.empty()) return 0;
  int m = t_.begin()->first.first;
  return m;
}

int SElem::max_z() const {
  if (t_.empty()) return 0;
  return t_.rbegin()->first.first;
}

bool SElem::in_k() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
}

bool SElem::is_scalar() const {
  return t_.empty() || (in_k() && t_.begin()->second.is_constant());
}

void SElem::add_term(int i, int j, const EllFun& c) {
  if (j < 0) throw DomainViolation("negative power of zeta");
  if (s0_ && i < 0) throw DomainViolation("z^" + std::to_string(i) + " is not in S0");
  if (c.is_zero()) return;
  if (!curve_.same_curve(c.curve())) throw CurveMismatch("coefficient lives on another curve");
  auto [it, fresh] = t_.try_emplace({i, j}, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

void SElem::check(const SElem& o) const {
  if (!curve_.same_curve(o.curve_)) throw CurveMismatch("elements live on different curves");
}

SElem SElem::operator-() const {
  SElem e = *this;
  for (auto& [k, v] : e.t_) v = -v;
  return e;
}

SElem& SElem::operator+=(const SElem& o) {
  check(o);
  s0_ = s0_ && o.s0_;
  for (const auto& [k, v] : o.t_) add_term(k.first, k.second, v);
  return *this;
}

SElem& SElem::operator-=(const SElem& o) {
  check(o);
  s0_ = s0_ && o.s0_;
  for (const auto& [k, v] : o.t_) add_term(k.first, k.second, -v);
  return *this;
}

SElem& SElem::operator*=(const EllFun& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

SElem& SElem::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= s;
  return *this;
}

SElem operator*(const SElem& a, const SElem& b) {
  a.check(b);
  SElem out(a.curve_, a.s0_ && b.s0_);
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return out;
}

SElem SElem::shift_z(int k) const {
  SElem out(curve_, s0_);
  for (const auto& [key, v] : t_) out.add_term(key.first + k, key.second, v);
  return out;
}

SElem SElem::pow(int e) const {
  if (e < 0) throw DomainViolation("negative power of an S element");
  SElem result = constant(curve_, 1, s0_);
  SElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string SElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    auto [i, j] = it->first;
    if (i != 0) os << "*z^" << i;
    if (j != 0) os << "*zeta^" << j;
  }
  return os.str();
}

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// (qζ + f_ζ)^j as a polynomial in ζ: coefficient list indexed by ζ-power.
std::vector<EllFun> phi_zeta_power(const ExactCurve& c, int j) {
  EllFun fz = zeta_defect(c, static_cast<int>(c.q()));
  Scalar q(c.q());
  std::vector<EllFun> out;
  std::vector<EllFun> fpow{EllFun::constant(c, 1)};
  for (int k = 1; k <= j; ++k) fpow.push_back(fpow.back() * fz);
  for (int k = 0; k <= j; ++k)
    out.push_back(fpow[static_cast<size_t>(j - k)] * (Scalar(binomial(j, k)) * q.pow(k)));
  return out;
}

}  // namespace

SElem apply_phi(const SElem& f) {
  const ExactCurve& c = f.curve();
  SElem out(c, f.s0());
  if (f.is_zero()) return out;
  int q = static_cast<int>(c.q());
  std::vector<std::vector<EllFun>> powers;
  for (int j = 0; j <= f.deg_zeta(); ++j) powers.push_back(phi_zeta_power(c, j));
  for (const auto& [k, v] : f.terms()) {
    auto [i, j] = k;
    EllFun pc = mult_by_n(v, q) * Scalar(q).pow(i);
    const auto& pw = powers[static_cast<size_t>(j)];
    for (int l = 0; l <= j; ++l) out.add_term(i, l, pc * pw[static_cast<size_t>(l)]);
  }
  return out;
}

SElem apply_phi_inv(const SElem& f) {
  const ExactCurve& c = f.curve();
  int q = static_cast<int>(c.q());
  SElem rest = f;
  SElem out(c, f.s0());
  // φ is triangular in ζ with diagonal q^(i+j) φ on coefficients
  while (!rest.is_zero()) {
    int J = rest.deg_zeta();
    SElem top(c, f.s0());
    for (const auto& [k, v] : rest.terms()) {
      if (k.second != J) continue;
      auto pre = mult_by_n_preimage(v, q);
      if (!pre) throw DomainViolation("element is not in the image of phi");
      top.add_term(k.first, J, *pre * Scalar(q).pow(-(k.first + J)));
    }
    out += top;
    rest -= apply_phi(top);
    if (rest.deg_zeta() >= J) throw DomainViolation("element is not in the image of phi");
  }
  return out;
}

SElem apply_partial(const SElem& f) {
  const ExactCurve& c = f.curve();
  SElem out(c, f.s0());
  EllFun X = EllFun::X(c);
  for (const auto& [k, v] : f.terms()) {
    auto [i, j] = k;
    out.add_term(i, j, derive(v));
    if (i != 0) out.add_term(i - 1, j, v * Scalar(i));
    if (j != 0) out.add_term(i, j - 1, -(v * X) * Scalar(j));
  }
  return out;
}

SElem apply_delta(const SElem& f) { return apply_partial(f).shift_z(1); }

std::vector<SElem> kernel_phi_minus_a(const Scalar& a, const ExactCurve& curve,
                                      KernelDomain domain) {
  if (a.is_zero()) throw DomainViolation("a must be nonzero");
  if (domain == KernelDomain::KZeta) {
    if (a.is_one()) return {SElem::constant(curve, 1)};
    return {};
  }
  auto r = exact_log(a, curve.q());
  if (!r) return {};
  SElem e(curve, false);
  e.add_term(*r, 0, EllFun::constant(curve, 1));
  return {e};
}

std::vector<std::pair<int, SElem>> z_coefficients(const SElem& f) {
  std::map<int, SElem> parts;
  for (const auto& [k, v] : f.terms()) {
    auto it = parts.try_emplace(k.first, SElem(f.curve())).first;
    it->second.add_term(0, k.second, v);
  }
  return {parts.begin(), parts.end()};
}

SElem from_z_coefficients(const ExactCurve& c, const std::vector<std::pair<int, SElem>>& parts,
                          bool s0) {
  SElem out(c, s0);
  for (const auto& [i, g] : parts) {
    for (const auto& [k, v] : g.terms()) {
      if (k.first != 0) throw DomainViolation("z-coefficient contains a power of z");
      out.add_term(i, k.second, v);
    }
  }
  return out;
}

namespace {

/// Exact division of Laurent polynomials in z (ζ-free elements).
std::optional<SElem> divide_z(const SElem& a, const SElem& b) {
  SElem q(a.curve(), false);
  if (a.is_zero()) return q;
  int sa = a.min_z(), sb = b.min_z();
  SElem r = a.shift_z(-sa).in_s();
  SElem d = b.shift_z(-sb).in_s();
  int dd = d.max_z();
  EllFun lead = d.coeff(dd, 0);
  while (!r.is_zero()) {
    int dr = r.max_z();
    if (dr < dd) return std::nullopt;
    EllFun t = r.coeff(dr, 0) / lead;
    SElem m = SElem::monomial(t, dr - dd, 0, false);
    q += m;
    r -= m * d;
  }
  return q.shift_z(sa - sb);
}

SElem zeta_part(const SElem& f, int j) {
  SElem out(f.curve(), false);
  for (const auto& [k, v] : f.terms())
    if (k.second == j) out.add_term(k.first, 0, v);
  return out;
}

}  // namespace

namespace {

int low_zeta(const SElem& f) {
  int d = -1;
  for (const auto& [k, v] : f.terms())
    if (d < 0 || k.second < d) d = k.second;
  return d;
}

int z_span(const SElem& f) { return f.is_zero() ? 0 : f.max_z() - f.min_z(); }

/// Necessary conditions for b | a read off the Newton polygon.
bool may_divide(const SElem& a, const SElem& b) {
  int ja = a.deg_zeta(), jb = b.deg_zeta();
  int la = low_zeta(a), lb = low_zeta(b);
  if (ja - la < jb - lb || la < lb) return false;
  if (z_span(a) < z_span(b)) return false;
  if (z_span(zeta_part(a, ja)) < z_span(zeta_part(b, jb))) return false;
  if (z_span(zeta_part(a, la)) < z_span(zeta_part(b, lb))) return false;
  return true;
}

}  // namespace

std::optional<SElem> exact_divide(const SElem& a, const SElem& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero S element");
  bool s0 = a.s0() && b.s0();
  if (!a.is_zero() && !may_divide(a, b)) return std::nullopt;
  SElem q(a.curve(), false);
  SElem r = a.in_s();
  int jb = b.deg_zeta();
  SElem lb = zeta_part(b, jb);
  SElem bs = b.in_s();
  while (!r.is_zero()) {
    int jr = r.deg_zeta();
    if (jr < jb) return std::nullopt;
    auto c = divide_z(zeta_part(r, jr), lb);
    if (!c) return std::nullopt;
    SElem term(a.curve(), false);
    for (const auto& [k, v] : c->terms()) term.add_term(k.first, jr - jb, v);
    q += term;
    r -= term * bs;
    if (!r.is_zero() && r.deg_zeta() >= jr) return std::nullopt;
  }
  if (s0) {
    if (!q.is_zero() && q.min_z() < 0) return std::nullopt;
    return q.in_s0();
  }
  return q;
}

Complex eval_numeric(const SElem& f, const NumericLattice& L, const Complex& z) {
  WpValues v = wp_eval(L, z);
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  Complex out;
  Real floor = L.pole_floor();
  for (const auto& [k, c] : f.terms())
    out += eval_at(c, v.wp, v.dwp, floor) * pow(z, k.first) * pow(v.zeta, k.second);
  return out;
}

// ---------------------------------------------------------------- SFraction

SFraction::SFraction(const ExactCurve& c)
    : num_(c, false), den_(SElem::constant(c, 1, false)) {}

SFraction::SFraction(const SElem& num)
    : num_(num.in_s()), den_(SElem::constant(num.curve(), 1, false)) {}

SFraction::SFraction(const SElem& num, const SElem& den) : num_(num.in_s()), den_(den.in_s()) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (!num_.curve().same_curve(den_.curve())) throw CurveMismatch("fraction parts differ in curve");
  normalize();
}

SFraction SFraction::constant(const ExactCurve& c, const Scalar& s) {
  return SFraction(SElem::constant(c, s, false));
}

void SFraction::normalize() {
  const ExactCurve& c = num_.curve();
  if (num_.is_zero()) {
    den_ = SElem::constant(c, 1, false);
    return;
  }
  if (den_.terms().size() == 1) {
    // monomial denominator: c z^i ζ^j; z^i and c are units
    auto [key, v] = *den_.terms().begin();
    EllFun inv = v.inv();
    num_ = (num_ * inv).shift_z(-key.first);
    den_ = SElem::monomial(EllFun::constant(c, 1), 0, key.second, false);
    if (key.second == 0) return;
  }
  if (auto q = exact_divide(num_, den_)) {
    num_ = *q;
    den_ = SElem::constant(c, 1, false);
    return;
  }
  // make the leading coefficient of the denominator 1 and its lowest z-power 0
  int j = den_.deg_zeta();
  int lo = den_.min_z();
  EllFun lead(c);
  for (const auto& [k, v] : den_.terms())
    if (k.second == j) lead = v;  // highest z-power in top ζ-degree
  EllFun inv = lead.inv();
  num_ = (num_ * inv).shift_z(-lo);
  den_ = (den_ * inv).shift_z(-lo);
}

std::optional<SElem> SFraction::as_selem() const {
  if (den_.is_scalar()) {
    return num_ * den_.coeff(0, 0).constant_value().inv();
  }
  return exact_divide(num_, den_);
}

SFraction SFraction::operator-() const {
  SFraction f = *this;
  f.num_ = -f.num_;
  return f;
}

SFraction& SFraction::operator+=(const SFraction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    *this = SFraction(num_ + o.num_, den_);
  } else {
    *this = SFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

SFraction& SFraction::operator-=(const SFraction& o) { return *this += -o; }

SFraction& SFraction::operator*=(const SFraction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  *this = SFraction(num_ * o.num_, den_ * o.den_);
  return *this;
}

SFraction SFraction::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero fraction");
  return SFraction(den_, num_);
}

SFraction& SFraction::operator/=(const SFraction& o) { return *this *= o.inv(); }

bool operator==(const SFraction& a, const SFraction& b) {
  return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string SFraction::str() const {
  if (den_.is_scalar()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

SFraction apply_phi(const SFraction& f) {
  return SFraction(apply_phi(f.num()), apply_phi(f.den()));
}

SFraction apply_partial(const SFraction& f) {
  if (f.den().is_scalar()) return SFraction(apply_partial(f.num()), f.den());
  SElem n = apply_partial(f.num()) * f.den() - f.num() * apply_partial(f.den());
  return SFraction(n, f.den() * f.den());
}

SFraction apply_delta(const SFraction& f) {
  return apply_partial(f) * SFraction(SElem::z(f.curve(), false));
}

Complex eval_numeric(const SFraction& f, const NumericLattice& L, const Complex& z) {
  Complex d = eval_numeric(f.den(), L, z);
  PrecisionGuard guard(static_cast<unsigned>(L.working_digits()));
  if (abs(d) < L.pole_floor()) throw NearPole("denominator vanishes to working precision");
  return eval_numeric(f.num(), L, z) / d;
}

MembershipResult s_membership_test(const SFraction& f, int bound) {
  if (bound < 1) throw DomainViolation("bound must be >= 1");
  const ExactCurve& c = f.curve();
  MembershipResult res;
  if (f.is_zero()) {
    res.in_s = true;
    res.witness = {EllFun::constant(c, 1)};
    return res;
  }
  std::vector<SElem> nums{f.num()}, dens{f.den()};
  for (int m = 1; m <= bound; ++m) {
    nums.push_back(apply_phi(nums.back()));
    dens.push_back(apply_phi(dens.back()));
    // Σ λ_i N_i Π_{k≠i} D_k = 0
    std::vector<SElem> cols;
    for (int i = 0; i <= m; ++i) {
      SElem t = nums[static_cast<size_t>(i)];
      for (int k = 0; k <= m; ++k)
        if (k != i) t = t * dens[static_cast<size_t>(k)];
      cols.push_back(t);
    }
    std::map<SElem::Key, size_t> row_of;
    for (const auto& col : cols)
      for (const auto& [k, v] : col.terms()) row_of.try_emplace(k, row_of.size());
    DenseMatrix<EllFun> mat(row_of.size(), cols.size(), EllFun(c));
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, v] : cols[j].terms()) mat(row_of[k], j) = v;
    auto ker = nullspace(mat, EllFun(c), EllFun::constant(c, 1));
    if (!ker.empty()) {
      res.in_s = true;
      res.order = m;
      res.witness = ker.front();
      return res;
    }
  }
  return res;
}

}  // namespace ellip
