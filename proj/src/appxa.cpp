#include "ellip/appxa.hpp"

#include <algorithm>
#include <map>

#include "ellip/errors.hpp"
#include "ellip/integration.hpp"

namespace ellip {

const char* branch_name(A9Branch b) {
  switch (b) {
    case A9Branch::Base: return "base";
    case A9Branch::ConstantLeading: return "constant-leading";
    case A9Branch::ConstantLeadingResonant: return "constant-leading-resonant";
    case A9Branch::Generic: return "generic";
    case A9Branch::ShiftOne: return "shift-one";
    case A9Branch::ShiftTwo: return "shift-two";
  }
  return "?";
}

BranchStats& BranchStats::operator+=(const BranchStats& o) {
  for (size_t k = 0; k < hits.size(); ++k) hits[k] += o.hits[k];
  return *this;
}

SElem phi_minus(const SElem& u, const Scalar& a) { return apply_phi(u) - u * a; }

SElem apply_delta_poly(const SElem& b, const std::vector<Scalar>& roots) {
  SElem cur = b;
  for (const Scalar& c : roots) cur = apply_delta(cur) - cur * c;
  return cur;
}

SElem z_poly(const ExactCurve& c, const Poly& p) {
  SElem out(c);
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeff(i).is_zero()) out.add_term(i, 0, EllFun::constant(c, p.coeff(i)));
  return out;
}

std::optional<int> q_exponent(const Scalar& a, long q) {
  Scalar qs(q), cur(1);
  for (int r = 0; r < 64; ++r) {
    if (cur == a) return r;
    if (!a.is_real() || cmp(cur.re(), abs(a.re())) > 0) return std::nullopt;
    cur *= qs;
  }
  return std::nullopt;
}

namespace {

bool in_k_zeta(const SElem& f) {
  for (const auto& [k, v] : f.terms())
    if (k.first != 0) return false;
  return true;
}

Scalar scalar_value(const SElem& s) { return s.is_zero() ? Scalar(0) : s.coeff(0, 0).constant_value(); }

/// (q^l φ - a)(w).
SElem scaled_phi_minus(const SElem& w, const Scalar& ql, const Scalar& a) {
  return apply_phi(w) * ql - w * a;
}

PrimitiveResult primitive_or_trip(const EllFun& h, const char* where) {
  auto res = elliptic_primitive(h);
  if (auto* p = std::get_if<PrimitiveResult>(&res)) return *p;
  throw ImpossibleCase(std::string(where) + ": coefficient has residual points");
}

A9Result a9_core(const SElem& g, const SElem& f, const Scalar& a, BranchStats* stats) {
  const ExactCurve& c = g.curve();
  Scalar qs(c.q());
  SElem zeta = SElem::zeta(c);
  SElem u(c), G = g, F = f;
  Scalar beta;
  auto hit = [&](A9Branch b) {
    if (stats) stats->hit(b);
  };
  while (!G.is_zero()) {
    int l = G.deg_zeta();
    const EllFun gl = G.coeff(0, l);
    if (l == 0) {
      hit(A9Branch::Base);
      // f of ζ-degree 1 with constant leading term and a = q² is excluded
      if (F.deg_zeta() >= 1) throw ImpossibleCase("base case with f outside K");
      PrimitiveResult w = primitive_or_trip(F.coeff(0, 0), "base case");
      SElem v = SElem::from(w.u) + zeta * w.r;
      SElem R = G - phi_minus(v, a);
      if (!R.is_scalar()) throw ImpossibleCase("base case remainder is not constant");
      u += v;
      beta = scalar_value(R);
      break;
    }
    Scalar ql = qs.pow(l);
    SElem U(c);
    if (gl.is_constant()) {
      if (ql == a) {
        hit(A9Branch::ConstantLeadingResonant);
        throw ImpossibleCase("constant leading coefficient with a = q^l");
      }
      hit(A9Branch::ConstantLeading);
      U = SElem::monomial(EllFun::constant(c, gl.constant_value() / (ql - a)), 0, l);
    } else if (a == ql * qs) {
      hit(A9Branch::ShiftOne);
      if (F.deg_zeta() > l) throw ImpossibleCase("f has too high a degree");
      PrimitiveResult w = primitive_or_trip(F.coeff(0, l), "shift-one case");
      // (q^l φ - q^(l+1)) kills z, so s plays no role
      SElem R = SElem::from(gl) - scaled_phi_minus(SElem::from(w.u) + zeta * w.r, ql, a);
      if (!R.is_scalar()) throw ImpossibleCase("shift-one remainder is not constant");
      EllFun h = w.u + EllFun::constant(c, scalar_value(R) / (ql - a));
      U = SElem::monomial(h, 0, l) + SElem::monomial(EllFun::constant(c, w.r / Scalar(l + 1)), 0, l + 1);
    } else {
      bool two = a == ql * qs * qs;
      hit(two ? A9Branch::ShiftTwo : A9Branch::Generic);
      if (F.deg_zeta() > l) throw ImpossibleCase("f has too high a degree");
      PrimitiveResult w = primitive_or_trip(F.coeff(0, l), "leading coefficient");
      if (!w.r.is_zero() || !w.s.is_zero()) throw ImpossibleCase("primitive of f_l is not elliptic");
      SElem v = SElem::from(w.u);
      if (two) {
        SElem R = SElem::from(gl) - scaled_phi_minus(v, ql, a);
        if (!R.is_scalar()) throw ImpossibleCase("shift-two remainder is not constant");
        v += SElem::constant(c, scalar_value(R) / (ql - a));
      }
      U = v * SElem::monomial(EllFun::constant(c, 1), 0, l);
    }
    SElem next = G - phi_minus(U, a);
    int nl = next.deg_zeta();
    // only the generic step may leave a constant ζ^l coefficient behind
    bool generic = !gl.is_constant() && !(a == ql * qs) && !(a == ql * qs * qs);
    if (nl > l || (nl == l && (!generic || !next.coeff(0, l).is_constant())))
      throw ImpossibleCase("degree did not drop");
    u += U;
    F -= apply_partial(U);
    G = std::move(next);
  }
  if (!a.is_one() && !beta.is_zero()) {
    u += SElem::constant(c, beta / (Scalar(1) - a));
    beta = Scalar(0);
  }
  return {u, beta};
}

void check_a9(const SElem& g, const SElem& f, const Scalar& a, const Scalar& gamma) {
  if (!in_k_zeta(g) || !in_k_zeta(f)) throw HypothesisViolated("g and f must lie in K[zeta]");
  if (a.is_zero()) throw HypothesisViolated("a must be nonzero");
  Scalar qs(g.curve().q());
  SElem res = apply_partial(g) - (apply_phi(f) * qs - f * a) - SElem::constant(g.curve(), gamma);
  if (!res.is_zero()) throw HypothesisViolated("g' != (q phi - a)(f) + gamma");
}

/// z-coefficient i of f, as an element of K[ζ].
SElem part(const std::map<int, SElem>& m, int i, const ExactCurve& c) {
  auto it = m.find(i);
  return it == m.end() ? SElem(c) : it->second;
}

std::map<int, SElem> split(const SElem& f) {
  auto v = z_coefficients(f);
  return {v.begin(), v.end()};
}

}  // namespace

LeadingData leading_analysis(const SElem& f, const Scalar& a) {
  if (f.is_zero()) throw DomainViolation("leading analysis of zero");
  if (!in_k_zeta(f)) throw DomainViolation("f must lie in K[zeta]");
  const ExactCurve& c = f.curve();
  Scalar qs(c.q());
  int d = f.deg_zeta();
  EllFun fd = f.coeff(0, d);
  Scalar qd = qs.pow(d);
  LeadingData out(c);
  auto phi = [&](const EllFun& e) { return mult_by_n(e, static_cast<int>(c.q())); };
  if (!(a == qd) || !fd.is_constant()) {
    out.tag = LeadingCase::I;
    out.degree = d;
    out.coefficient = phi(fd) * qd - fd * a;
    return out;
  }
  if (d == 0) {
    out.tag = LeadingCase::II;
    return out;
  }
  out.tag = LeadingCase::III;
  out.degree = d - 1;
  Scalar qd1 = qs.pow(d - 1);
  EllFun fd1 = f.coeff(0, d - 1);
  out.coefficient = zeta_defect(c, static_cast<int>(c.q())) * (Scalar(d) * fd.constant_value() * qd1) +
                    (phi(fd1) - fd1 * qs) * qd1;
  return out;
}

A9Result solve_A9(const SElem& g, const SElem& f, const Scalar& a, const Scalar& gamma,
                  BranchStats* stats) {
  check_a9(g, f, a, gamma);
  return a9_core(g, f, a, stats);
}

AppxAInstance::AppxAInstance(SElem g_, SElem f_, Scalar a_, Scalar c_, Poly p_)
    : g(std::move(g_)), f(std::move(f_)), a(std::move(a_)), c(std::move(c_)), p(std::move(p_)) {
  if (!g.curve().same_curve(f.curve())) throw CurveMismatch("g and f live on different curves");
  if (a.is_zero()) throw HypothesisViolated("a must be nonzero");
  if (g.min_z() < 0 || f.min_z() < 0) throw HypothesisViolated("g and f must lie in S0");
  if (!residual().is_zero()) throw HypothesisViolated("(delta - c)(g) != (phi - a)(f) + p");
}

SElem AppxAInstance::residual() const {
  return apply_delta(g) - g * c - phi_minus(f, a) - z_poly(g.curve(), p);
}

AppxASolution solve_prop_A(const AppxAInstance& inst, BranchStats* stats) {
  const ExactCurve& cv = inst.g.curve();
  Scalar qs(cv.q());
  auto gs = split(inst.g), fs = split(inst.f);
  int M = std::max({inst.g.is_zero() ? 0 : inst.g.max_z(), inst.f.is_zero() ? 0 : inst.f.max_z(),
                    std::max(inst.p.degree(), 0)});
  // g_i = (q^i φ - a)(u_i) + β_i, solved from i = M down to 0
  SElem u_next(cv);
  Scalar b_next;
  std::vector<SElem> us(static_cast<size_t>(M) + 1, SElem(cv));
  std::vector<Scalar> bs(static_cast<size_t>(M) + 1);
  for (int i = M + 1; i >= 1; --i) {
    Scalar k = Scalar(i) - inst.c;
    // g_{i-1}' = (q^i φ - a)(f_i - (i - c) u_i) + p_i - (i - c) β_i
    SElem F = part(fs, i, cv) - u_next * k;
    Scalar gamma = inst.p.coeff(i) - k * b_next;
    int j = i - 1;
    Scalar qj = qs.pow(j), qji = qj.inv();
    A9Result r = solve_A9(part(gs, j, cv) * qji, F, inst.a * qji, gamma * qji, stats);
    us[static_cast<size_t>(j)] = r.u;
    bs[static_cast<size_t>(j)] = r.beta * qj;
    u_next = r.u;
    b_next = bs[static_cast<size_t>(j)];
  }
  AppxASolution sol{SElem(cv), Poly(), q_exponent(inst.a, cv.q()), Scalar(0)};
  std::vector<Scalar> pt;
  for (int j = 0; j <= M; ++j) {
    const SElem& uj = us[static_cast<size_t>(j)];
    for (const auto& [key, v] : uj.terms()) sol.u.add_term(j, key.second, v);
    const Scalar& b = bs[static_cast<size_t>(j)];
    if (b.is_zero()) continue;
    // (φ - a)(z^j) = (q^j - a) z^j
    Scalar qj = qs.pow(j);
    if (qj == inst.a) {
      sol.d = b;
    } else {
      sol.u.add_term(j, 0, EllFun::constant(cv, b / (qj - inst.a)));
    }
  }
  if (sol.r) sol.p_tilde = Poly::monomial(sol.d, *sol.r);
  return sol;
}

SElem solution_residual(const SElem& g, const Scalar& a, const AppxASolution& s) {
  return g - phi_minus(s.u, a) - z_poly(g.curve(), s.p_tilde);
}

CorollaryResult solve_corollary(const SElem& b, const SElem& f, const Scalar& a,
                                const std::vector<Scalar>& roots, BranchStats* stats) {
  if (!(apply_delta_poly(b, roots) == phi_minus(f, a)))
    throw HypothesisViolated("L(b) != (phi - a)(f)");
  size_t k = roots.size();
  std::optional<int> r = q_exponent(a, b.curve().q());
  // b = (φ - a)(f) already
  if (k == 0) return {f, Poly(), r};
  // b_j = (δ - c_j)∘⋯∘(δ - c_1)(b)
  std::vector<SElem> bj{b};
  for (size_t j = 0; j + 1 < k; ++j) bj.push_back(apply_delta(bj.back()) - bj.back() * roots[j]);
  SElem fj = f;
  Poly pj;
  for (size_t j = k; j-- > 0;) {
    AppxAInstance inst(bj[j], fj, a, roots[j], pj);
    AppxASolution s = solve_prop_A(inst, stats);
    fj = s.u;
    pj = s.p_tilde;
  }
  return {fj, pj, r};
}

}  // namespace ellip
