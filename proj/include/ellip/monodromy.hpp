#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellip/numerics.hpp"
#include "ellip/poly.hpp"

namespace ellip {

/// Square matrix over a ring with value semantics; used with Scalar for
/// exact work and Complex for the realization.
template <class T>
struct SqMat {
  size_t n = 0;
  std::vector<T> a;

  SqMat() = default;
  explicit SqMat(size_t n_) : n(n_), a(n_ * n_, T(0)) {}
  static SqMat identity(size_t n_) {
    SqMat m(n_);
    for (size_t i = 0; i < n_; ++i) m(i, i) = T(1);
    return m;
  }
  T& operator()(size_t i, size_t j) { return a[i * n + j]; }
  const T& operator()(size_t i, size_t j) const { return a[i * n + j]; }

  friend SqMat operator+(SqMat x, const SqMat& y) {
    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
    return x;
  }
  friend SqMat operator-(SqMat x, const SqMat& y) {
    for (size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
    return x;
  }
  friend SqMat operator*(const SqMat& x, const SqMat& y) {
    SqMat m(x.n);
    for (size_t i = 0; i < x.n; ++i)
      for (size_t k = 0; k < x.n; ++k)
        for (size_t j = 0; j < x.n; ++j) m(i, j) += x(i, k) * y(k, j);
    return m;
  }
  friend SqMat operator*(const T& s, SqMat x) {
    for (auto& v : x.a) v = s * v;
    return x;
  }
};

using QMat = SqMat<Scalar>;
using CMat = SqMat<Complex>;

bool operator==(const QMat& x, const QMat& y);
bool is_zero(const QMat& m);
QMat parse_qmat(const std::vector<std::vector<std::string>>& rows);
/// Exact inverse; nullopt when singular.
std::optional<QMat> inverse(const QMat& m);

/// log M = Σ_{k=1}^{n} (-1)^{k-1}/k (M - I)^k; throws NotUnipotent.
QMat nilpotent_log(const QMat& M);
/// exp N = Σ_{k<n} N^k/k!; throws NotNilpotent.
QMat nilpotent_exp(const QMat& N);
bool is_unipotent(const QMat& M);

/// Monodromy around ω1 and ω2.
struct UnipotentPair {
  QMat M1, M2;
  /// Throws NotUnipotent, NotCommuting or DimensionMismatch.
  void validate() const;
};

/// ℓ = a z + b ζ with ℓ(z + ω2) = ℓ(z) and ℓ(z + ω1) = ℓ(z) + 1.
struct PeriodFunction {
  Complex a, b;
  /// Determinant of the system [[ω2, η2], [ω1, η1]].
  Complex det;
};
PeriodFunction period_function(const NumericLattice& L);

/// n×n matrix whose entries are Σ c_ij z^i ζ^j with numeric c_ij.
struct RealizationMatrix {
  size_t n = 0;
  std::vector<std::map<std::pair<int, int>, Complex>> entries;

  CMat eval(const NumericLattice& L, const Complex& z) const;
};

/// Z = exp(ℓ log V) exp((z/ω2) N2) with N2 = log M2, V = M1 exp(-τ N2),
/// τ = ω1/ω2.
RealizationMatrix realize(const UnipotentPair& P, const NumericLattice& L);

/// max over random z0 and i of max-entry |Z(z0 + ω_i) - Z(z0) M_i|.
Real verify_monodromy(const RealizationMatrix& Z, const UnipotentPair& P, const NumericLattice& L,
                      int trials, std::uint64_t seed = 1);

/// det of Z at z (numerically).
Complex realization_det(const RealizationMatrix& Z, const NumericLattice& L, const Complex& z);

/// Characteristic polynomial by Faddeev–LeVerrier.
Poly charpoly(const QMat& M);
/// True when every eigenvalue of M is a root of unity (the characteristic
/// polynomial splits into cyclotomic factors).
bool eigenvalues_are_roots_of_unity(const QMat& M);
/// Checks M = C M^q C⁻¹ exactly (HypothesisViolated otherwise) and returns
/// whether M is potentially unipotent, i.e. has root-of-unity eigenvalues.
bool potentially_unipotent(const QMat& M, const QMat& C, long q);

}  // namespace ellip
