#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellip/ellfun.hpp"
#include "ellip/numerics.hpp"

namespace ellip {

/// Element of K[z, z^-1, ζ] as a finite sum of c_ij z^i ζ^j, c_ij in the
/// function field. With s0 set, negative powers of z are rejected.
class SElem {
 public:
  using Key = std::pair<int, int>;  // (power of z, power of ζ)

  explicit SElem(ExactCurve curve, bool s0 = true) : curve_(std::move(curve)), s0_(s0) {}
  static SElem constant(const ExactCurve& c, const Scalar& s, bool s0 = true);
  static SElem from(const EllFun& f, bool s0 = true);
  static SElem monomial(const EllFun& f, int i, int j, bool s0 = true);
  static SElem z(const ExactCurve& c, bool s0 = true);
  static SElem zeta(const ExactCurve& c, bool s0 = true);

  const ExactCurve& curve() const { return curve_; }
  bool s0() const { return s0_; }
  /// Same element with the S0 restriction lifted.
  SElem in_s() const;
  /// Same element restricted to S0; throws DomainViolation on z^-k terms.
  SElem in_s0() const;

  const std::map<Key, EllFun>& terms() const { return t_; }
  EllFun coeff(int i, int j) const;
  bool is_zero() const { return t_.empty(); }
  /// Degree in ζ, -1 for zero.
  int deg_zeta() const;
  int min_z() const;
  int max_z() const;
  /// True when the element is c·z^0ζ^0 with c in the function field.
  bool in_k() const;
  /// True when the element is a constant scalar.
  bool is_scalar() const;

  void add_term(int i, int j, const EllFun& c);

  SElem operator-() const;
  SElem& operator+=(const SElem& o);
  SElem& operator-=(const SElem& o);
  SElem& operator*=(const EllFun& c);
  SElem& operator*=(const Scalar& s);
  friend SElem operator+(SElem a, const SElem& b) { return a += b; }
  friend SElem operator-(SElem a, const SElem& b) { return a -= b; }
  friend SElem operator*(const SElem& a, const SElem& b);
  friend SElem operator*(SElem a, const EllFun& c) { return a *= c; }
  friend SElem operator*(const EllFun& c, SElem a) { return a *= c; }
  friend SElem operator*(SElem a, const Scalar& s) { return a *= s; }
  friend SElem operator*(const Scalar& s, SElem a) { return a *= s; }
  friend bool operator==(const SElem& a, const SElem& b) { return (a - b).is_zero(); }

  /// Multiplication by z^k.
  SElem shift_z(int k) const;
  SElem pow(int e) const;

  std::string str() const;

 private:
  void check(const SElem& o) const;
  ExactCurve curve_;
  bool s0_;
  std::map<Key, EllFun> t_;
};

/// φ: z ↦ qz, ζ ↦ qζ + (ζ(qz) - qζ(z)), f ↦ f∘[q] on coefficients.
SElem apply_phi(const SElem& f);
/// Inverse of φ on its image; throws DomainViolation when f ∉ φ(S).
SElem apply_phi_inv(const SElem& f);
/// ∂ = d/dz with ∂z = 1, ∂ζ = -X.
SElem apply_partial(const SElem& f);
/// δ = z∂.
SElem apply_delta(const SElem& f);

enum class KernelDomain { S, KZeta };
/// Basis of ker(φ - a) in S or in K[ζ].
std::vector<SElem> kernel_phi_minus_a(const Scalar& a, const ExactCurve& curve,
                                      KernelDomain domain);

/// (i, g_i) with f = Σ g_i z^i and g_i ∈ K[ζ], ascending i.
std::vector<std::pair<int, SElem>> z_coefficients(const SElem& f);
/// Σ g_i z^i.
SElem from_z_coefficients(const ExactCurve& c, const std::vector<std::pair<int, SElem>>& parts,
                          bool s0 = true);

/// a / b when b divides a in S (or in S0 if both are S0 elements).
std::optional<SElem> exact_divide(const SElem& a, const SElem& b);

Complex eval_numeric(const SElem& f, const NumericLattice& L, const Complex& z);

/// Element of Frac(S) kept as num/den with light normalisation.
class SFraction {
 public:
  explicit SFraction(const ExactCurve& c);
  SFraction(const SElem& num);  // NOLINT(google-explicit-constructor)
  SFraction(const SElem& num, const SElem& den);

  static SFraction constant(const ExactCurve& c, const Scalar& s);
  static SFraction from(const EllFun& f) { return SFraction(SElem::from(f)); }

  const SElem& num() const { return num_; }
  const SElem& den() const { return den_; }
  const ExactCurve& curve() const { return num_.curve(); }
  bool is_zero() const { return num_.is_zero(); }
  /// The element as an SElem if its denominator is a unit.
  std::optional<SElem> as_selem() const;

  SFraction operator-() const;
  SFraction& operator+=(const SFraction& o);
  SFraction& operator-=(const SFraction& o);
  SFraction& operator*=(const SFraction& o);
  SFraction& operator/=(const SFraction& o);
  friend SFraction operator+(SFraction a, const SFraction& b) { return a += b; }
  friend SFraction operator-(SFraction a, const SFraction& b) { return a -= b; }
  friend SFraction operator*(SFraction a, const SFraction& b) { return a *= b; }
  friend SFraction operator/(SFraction a, const SFraction& b) { return a /= b; }
  friend bool operator==(const SFraction& a, const SFraction& b);

  SFraction inv() const;
  std::string str() const;

 private:
  void normalize();
  SElem num_;
  SElem den_;
};

SFraction apply_phi(const SFraction& f);
SFraction apply_partial(const SFraction& f);
SFraction apply_delta(const SFraction& f);
Complex eval_numeric(const SFraction& f, const NumericLattice& L, const Complex& z);

struct MembershipResult {
  bool in_s = false;
  /// Smallest m with f, φf, ..., φ^m f dependent over K.
  int order = 0;
  /// Coefficients λ_0..λ_m of the dependence Σ λ_i φ^i(f) = 0.
  std::vector<EllFun> witness;
};

/// Searches a K-linear dependence among φ^i(f), i <= bound, lowest order
/// first. A dependence certifies f ∈ S; otherwise the result is inconclusive.
MembershipResult s_membership_test(const SFraction& f, int bound);

}  // namespace ellip
