#include "ellip/monodromy.hpp"

#include <random>

#include "ellip/errors.hpp"

namespace ellip {

bool operator==(const QMat& x, const QMat& y) { return x.n == y.n && x.a == y.a; }

bool is_zero(const QMat& m) {
  for (const auto& v : m.a)
    if (!v.is_zero()) return false;
  return true;
}

QMat parse_qmat(const std::vector<std::vector<std::string>>& rows) {
  QMat m(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix must be square");
    for (size_t j = 0; j < rows.size(); ++j) m(i, j) = Scalar::parse(rows[i][j]);
  }
  return m;
}

std::optional<QMat> inverse(const QMat& m) {
  size_t n = m.n;
  QMat a = m, inv = QMat::identity(n);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return std::nullopt;
    for (size_t k = 0; k < n; ++k) {
      std::swap(a(p, k), a(c, k));
      std::swap(inv(p, k), inv(c, k));
    }
    Scalar d = a(c, c).inv();
    for (size_t k = 0; k < n; ++k) {
      a(c, k) *= d;
      inv(c, k) *= d;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (size_t k = 0; k < n; ++k) {
        a(i, k) -= f * a(c, k);
        inv(i, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

namespace {

template <class T>
SqMat<T> mat_pow(const SqMat<T>& m, size_t e) {
  SqMat<T> r = SqMat<T>::identity(m.n);
  for (size_t k = 0; k < e; ++k) r = r * m;
  return r;
}

bool nilpotent(const QMat& N) { return is_zero(mat_pow(N, N.n)); }

/// Σ_{k=1}^{n} (-1)^{k-1}/k (M - I)^k, no checks.
template <class T>
SqMat<T> log_series(const SqMat<T>& M) {
  SqMat<T> D = M - SqMat<T>::identity(M.n), acc(M.n), p = D;
  for (size_t k = 1; k <= M.n; ++k) {
    T c = T(k % 2 == 1 ? 1L : -1L) / T(static_cast<long>(k));
    acc = acc + c * p;
    p = p * D;
  }
  return acc;
}

template <class T>
SqMat<T> exp_series(const SqMat<T>& N) {
  SqMat<T> acc = SqMat<T>::identity(N.n), p = SqMat<T>::identity(N.n);
  T fact(1L);
  for (size_t k = 1; k < N.n; ++k) {
    p = p * N;
    fact = fact * T(static_cast<long>(k));
    acc = acc + (T(1L) / fact) * p;
  }
  return acc;
}

CMat to_complex(const QMat& m) {
  CMat c(m.n);
  for (size_t k = 0; k < m.a.size(); ++k) c.a[k] = Complex::from_scalar(m.a[k]);
  return c;
}

using PolyEntry = std::map<std::pair<int, int>, Complex>;
using PolyMat = std::vector<PolyEntry>;

void add_term(PolyEntry& e, int i, int j, const Complex& c) {
  auto [it, fresh] = e.emplace(std::make_pair(i, j), c);
  if (!fresh) it->second += c;
}

PolyMat poly_mul(const PolyMat& x, const PolyMat& y, size_t n) {
  PolyMat out(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        for (const auto& [m1, c1] : x[i * n + k])
          for (const auto& [m2, c2] : y[k * n + j])
            add_term(out[i * n + j], m1.first + m2.first, m1.second + m2.second, c1 * c2);
  return out;
}

/// exp(u·N) = Σ u^k N^k / k! where u is given as a list of monomials.
PolyMat exp_linear(const std::vector<std::pair<std::pair<int, int>, Complex>>& u, const CMat& N) {
  size_t n = N.n;
  PolyMat acc(n * n);
  // u^k as a polynomial
  PolyEntry uk{{{0, 0}, Complex(1)}};
  CMat Nk = CMat::identity(n);
  Real fact(1);
  for (size_t k = 0; k < n; ++k) {
    if (k > 0) {
      PolyEntry next;
      for (const auto& [m, c] : uk)
        for (const auto& [m2, c2] : u) add_term(next, m.first + m2.first, m.second + m2.second, c * c2);
      uk = std::move(next);
      Nk = Nk * N;
      fact *= static_cast<long>(k);
    }
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const Complex& v = Nk(i, j);
        if (v.re == 0 && v.im == 0) continue;
        for (const auto& [m, c] : uk) add_term(acc[i * n + j], m.first, m.second, c * v * (Real(1) / fact));
      }
  }
  return acc;
}

Real max_entry(const CMat& m) {
  Real r(0);
  for (const auto& v : m.a) r = std::max(r, abs(v));
  return r;
}

}  // namespace

bool is_unipotent(const QMat& M) { return nilpotent(M - QMat::identity(M.n)); }

QMat nilpotent_log(const QMat& M) {
  if (!is_unipotent(M)) throw NotUnipotent("(M - I)^n is not zero");
  return log_series(M);
}

QMat nilpotent_exp(const QMat& N) {
  if (!nilpotent(N)) throw NotNilpotent("N^n is not zero");
  return exp_series(N);
}

void UnipotentPair::validate() const {
  if (M1.n != M2.n || M1.n == 0) throw DimensionMismatch("M1 and M2 must be square of the same size");
  if (!is_unipotent(M1)) throw NotUnipotent("M1 is not unipotent");
  if (!is_unipotent(M2)) throw NotUnipotent("M2 is not unipotent");
  if (!(M1 * M2 == M2 * M1)) throw NotCommuting("M1 M2 != M2 M1");
}

PeriodFunction period_function(const NumericLattice& L) {
  // [[ω2, η2], [ω1, η1]] (a, b)ᵀ = (0, 1)ᵀ
  const Complex &w1 = L.omega1(), &w2 = L.omega2(), &e1 = L.eta1(), &e2 = L.eta2();
  PeriodFunction p;
  p.det = w2 * e1 - e2 * w1;
  p.a = -e2 / p.det;
  p.b = w2 / p.det;
  return p;
}

CMat RealizationMatrix::eval(const NumericLattice& L, const Complex& z) const {
  Complex zeta = wp_eval(L, z).zeta;
  int max_i = 0, max_j = 0;
  for (const auto& e : entries)
    for (const auto& [m, c] : e) {
      max_i = std::max(max_i, m.first);
      max_j = std::max(max_j, m.second);
    }
  std::vector<Complex> zp{Complex(1)}, tp{Complex(1)};
  for (int k = 0; k < max_i; ++k) zp.push_back(zp.back() * z);
  for (int k = 0; k < max_j; ++k) tp.push_back(tp.back() * zeta);
  CMat out(n);
  for (size_t k = 0; k < entries.size(); ++k)
    for (const auto& [m, c] : entries[k])
      out.a[k] += c * zp[static_cast<size_t>(m.first)] * tp[static_cast<size_t>(m.second)];
  return out;
}

RealizationMatrix realize(const UnipotentPair& P, const NumericLattice& L) {
  P.validate();
  PrecisionGuard g(static_cast<unsigned>(L.working_digits()));
  size_t n = P.M1.n;
  CMat N2 = to_complex(nilpotent_log(P.M2));
  Complex tau = L.omega1() / L.omega2();
  // V commutes with N2 and is unipotent, so the finite series are exact
  CMat V = to_complex(P.M1) * exp_series(-tau * N2);
  CMat logV = log_series(V);
  PeriodFunction pf = period_function(L);
  PolyMat left = exp_linear({{{1, 0}, pf.a}, {{0, 1}, pf.b}}, logV);
  PolyMat right = exp_linear({{{1, 0}, Complex(1) / L.omega2()}}, N2);
  RealizationMatrix Z;
  Z.n = n;
  Z.entries = poly_mul(left, right, n);
  // drop exact zeros left by cancellation-free products
  for (auto& e : Z.entries)
    for (auto it = e.begin(); it != e.end();)
      it = it->second.re == 0 && it->second.im == 0 ? e.erase(it) : std::next(it);
  return Z;
}

Real verify_monodromy(const RealizationMatrix& Z, const UnipotentPair& P, const NumericLattice& L,
                      int trials, std::uint64_t seed) {
  PrecisionGuard g(static_cast<unsigned>(L.working_digits()));
  CMat M1 = to_complex(P.M1), M2 = to_complex(P.M2);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  Real worst(0);
  for (int t = 0; t < trials; ++t) {
    Complex z0 = L.omega1() * Real(u(rng)) + L.omega2() * Real(u(rng));
    CMat base = Z.eval(L, z0);
    worst = std::max(worst, max_entry(Z.eval(L, z0 + L.omega1()) - base * M1));
    worst = std::max(worst, max_entry(Z.eval(L, z0 + L.omega2()) - base * M2));
  }
  return worst;
}

Complex realization_det(const RealizationMatrix& Z, const NumericLattice& L, const Complex& z) {
  PrecisionGuard g(static_cast<unsigned>(L.working_digits()));
  CMat m = Z.eval(L, z);
  size_t n = m.n;
  Complex det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t i = c + 1; i < n; ++i)
      if (abs(m(i, c)) > abs(m(p, c))) p = i;
    if (abs(m(p, c)) == 0) return Complex(0);
    if (p != c) {
      for (size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (size_t i = c + 1; i < n; ++i) {
      Complex f = m(i, c) / m(c, c);
      for (size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

Poly charpoly(const QMat& M) {
  // det(xI - M) = Σ c_k x^k with c_n = 1; Faddeev–LeVerrier recursion
  size_t n = M.n;
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  QMat Mk(n), I = QMat::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    Mk = M * (Mk + c[n - k + 1] * I);
    Scalar tr;
    for (size_t i = 0; i < n; ++i) tr += Mk(i, i);
    c[n - k] = -tr / Scalar(static_cast<long>(k));
  }
  return Poly(c);
}

namespace {

Poly cyclotomic(long k, std::vector<Poly>& memo) {
  if (static_cast<long>(memo.size()) > k && !memo[static_cast<size_t>(k)].is_zero())
    return memo[static_cast<size_t>(k)];
  Poly p = Poly::monomial(Scalar(1), static_cast<int>(k)) - Poly(1);
  for (long d = 1; d < k; ++d)
    if (k % d == 0) p = divmod(p, cyclotomic(d, memo)).first;
  if (static_cast<long>(memo.size()) <= k) memo.resize(static_cast<size_t>(k) + 1);
  memo[static_cast<size_t>(k)] = p;
  return p;
}

long euler_phi(long k) {
  long r = k;
  for (long p = 2; p * p <= k; ++p)
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      r -= r / p;
    }
  if (k > 1) r -= r / k;
  return r;
}

}  // namespace

bool eigenvalues_are_roots_of_unity(const QMat& M) {
  Poly p = charpoly(M);
  long n = static_cast<long>(M.n);
  std::vector<Poly> memo;
  // φ(k) >= sqrt(k/2), so k <= 2n² covers every cyclotomic factor of degree <= n
  for (long k = 1; k <= 2 * n * n + 2 && p.degree() > 0; ++k) {
    if (euler_phi(k) > p.degree()) continue;
    Poly f = cyclotomic(k, memo);
    for (;;) {
      auto [quo, rem] = divmod(p, f);
      if (!rem.is_zero()) break;
      p = quo;
    }
  }
  return p.degree() == 0;
}

bool potentially_unipotent(const QMat& M, const QMat& C, long q) {
  if (M.n != C.n) throw DimensionMismatch("M and C must have the same size");
  auto Ci = inverse(C);
  if (!Ci) throw HypothesisViolated("C is not invertible");
  if (!(C * mat_pow(M, static_cast<size_t>(q)) * *Ci == M)) throw HypothesisViolated("M != C M^q C^-1");
  return eigenvalues_are_roots_of_unity(M);
}

}  // namespace ellip
