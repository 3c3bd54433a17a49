#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellip/curve.hpp"

namespace ellip {

/// Finitely supported function on C/Λ with torsion support and exact
/// rational values. Zero values are never stored.
class PeriodicDivisor {
 public:
  PeriodicDivisor() = default;
  static PeriodicDivisor point(const TorsionPoint& p, const mpq_class& v = 1);

  const std::map<TorsionPoint, mpq_class>& entries() const { return e_; }
  mpq_class value(const TorsionPoint& p) const;
  void add(const TorsionPoint& p, const mpq_class& v);
  bool is_zero() const { return e_.empty(); }
  /// All values are integers.
  bool integral() const;
  std::vector<TorsionPoint> support() const;
  /// Least common multiple of the orders of the support points.
  long torsion_level() const;

  PeriodicDivisor operator-() const;
  PeriodicDivisor& operator+=(const PeriodicDivisor& o);
  PeriodicDivisor& operator-=(const PeriodicDivisor& o);
  PeriodicDivisor& operator*=(const mpq_class& c);
  friend PeriodicDivisor operator+(PeriodicDivisor a, const PeriodicDivisor& b) { return a += b; }
  friend PeriodicDivisor operator-(PeriodicDivisor a, const PeriodicDivisor& b) { return a -= b; }
  friend PeriodicDivisor operator*(const mpq_class& c, PeriodicDivisor a) { return a *= c; }
  friend bool operator==(const PeriodicDivisor& a, const PeriodicDivisor& b) { return a.e_ == b.e_; }

  std::string str() const;

 private:
  std::map<TorsionPoint, mpq_class> e_;
};

mpq_class degree(const PeriodicDivisor& D);

/// Σ r_ξ ξ in (Q/Z)^2. For m > 1 the divisor is read on the sublattice mΛ
/// and the sum is returned in mΛ-coordinates, i.e. m Σ n_ξ ξ̃ mod 1 with
/// ξ̃ the representative in [0,1)^2. Throws NonIntegralValues when values
/// are not integers and NonzeroDegree when m > 1 and deg D != 0.
TorsionPoint abel_jacobi(const PeriodicDivisor& D, long m = 1);

/// (φD)(ξ) = D(qξ).
PeriodicDivisor phi_pullback(const PeriodicDivisor& D, long q);

/// All η with qη = ξ.
std::vector<TorsionPoint> preimages(const TorsionPoint& xi, long q);

struct PhiSolveResult {
  bool solved = false;
  PeriodicDivisor D;
  /// When unsolved: the violated constraint in words, and the point
  /// where it fails together with the residual there.
  std::string certificate;
  std::optional<TorsionPoint> witness_point;
  mpq_class residual = 0;
};

/// The unique finitely supported D with D(qξ) - D(ξ) = E(ξ), if any.
PhiSolveResult solve_phi_minus_one(const PeriodicDivisor& E, long q);

/// Independent oracle: linear solve for D supported on N-torsion against
/// the equations at every Nq-torsion point. Throws SupportTooLarge when
/// supp(E) is not N-torsion or N is beyond the enumeration limit.
PhiSolveResult brute_force_solve(const PeriodicDivisor& E, long q, long N);

/// Integral, degree 0 and Abel–Jacobi sum 0.
bool is_principal(const PeriodicDivisor& D);

enum class CatalogKind { XMinusConst, Yfun };
/// div(℘ - ℘(P)) or div(℘′).
PeriodicDivisor catalog_divisor(CatalogKind kind, const TorsionPoint& P = TorsionPoint());

}  // namespace ellip
