#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ellip/poly.hpp"
#include "ellip/sring.hpp"

namespace ellip {

/// Cases of the leading-term analysis of (φ - a)(f) for f in K[ζ] of degree d:
/// I   degree d, coefficient q^d φ(f_d) - a f_d;
/// II  d = 0, a = 1, f constant, so (φ - 1)(f) = 0;
/// III a = q^d with f_d constant, d >= 1: degree d - 1, coefficient
///     d f_d q^(d-1) f_ζ + q^(d-1)(φ - q)(f_(d-1)).
enum class LeadingCase { I, II, III };

struct LeadingData {
  explicit LeadingData(const ExactCurve& c) : coefficient(c) {}
  LeadingCase tag = LeadingCase::I;
  /// ζ-degree of (φ - a)(f); -1 when it vanishes.
  int degree = -1;
  EllFun coefficient;
};

/// Throws DomainViolation when f is zero or not in K[ζ].
LeadingData leading_analysis(const SElem& f, const Scalar& a);

/// Branches of the degree induction behind solve_A9, with ℓ = deg_ζ g:
///   Base                     ℓ = 0
///   ConstantLeading          g_ℓ constant, a != q^ℓ
///   ConstantLeadingResonant  g_ℓ constant, a = q^ℓ (cannot occur)
///   Generic                  g_ℓ not constant, a != q^(ℓ+1), q^(ℓ+2)
///   ShiftOne                 g_ℓ not constant, a = q^(ℓ+1)
///   ShiftTwo                 g_ℓ not constant, a = q^(ℓ+2)
enum class A9Branch { Base, ConstantLeading, ConstantLeadingResonant, Generic, ShiftOne, ShiftTwo };
inline constexpr int kA9BranchCount = 6;
const char* branch_name(A9Branch b);

struct BranchStats {
  std::array<long, kA9BranchCount> hits{};
  void hit(A9Branch b) { ++hits[static_cast<size_t>(b)]; }
  long count(A9Branch b) const { return hits[static_cast<size_t>(b)]; }
  BranchStats& operator+=(const BranchStats& o);
};

struct A9Result {
  SElem u;
  Scalar beta;
};

/// Given g' = (qφ - a)(f) + γ with g, f in K[ζ], returns u in K[ζ] and a
/// constant β with g = (φ - a)(u) + β; β = 0 unless a = 1.
/// Throws HypothesisViolated when the premise fails, ImpossibleCase when a
/// branch excluded by the premise is reached.
A9Result solve_A9(const SElem& g, const SElem& f, const Scalar& a, const Scalar& gamma,
                  BranchStats* stats = nullptr);

/// (δ - c)(g) = (φ - a)(f) + p with g, f in S0 and p in C[z].
struct AppxAInstance {
  SElem g, f;
  Scalar a, c;
  Poly p;

  /// Throws HypothesisViolated when the identity does not hold exactly.
  AppxAInstance(SElem g_, SElem f_, Scalar a_, Scalar c_, Poly p_);
  SElem residual() const;
};

struct AppxASolution {
  SElem u;
  Poly p_tilde;
  /// Set when a = q^r with r >= 0; then p_tilde = d z^r. Otherwise p_tilde = 0.
  std::optional<int> r;
  Scalar d;
};

/// g = (φ - a)(u) + p̃.
AppxASolution solve_prop_A(const AppxAInstance& inst, BranchStats* stats = nullptr);

/// g - (φ - a)(u) - p̃.
SElem solution_residual(const SElem& g, const Scalar& a, const AppxASolution& s);

struct CorollaryResult {
  SElem h;
  Poly p;
  std::optional<int> r;
};

/// With L = (δ - c_k)∘⋯∘(δ - c_1) and L(b) = (φ - a)(f), returns h and
/// p = d z^r (or 0) with b = (φ - a)(h) + p.
CorollaryResult solve_corollary(const SElem& b, const SElem& f, const Scalar& a,
                                const std::vector<Scalar>& roots, BranchStats* stats = nullptr);

/// (φ - a)(u).
SElem phi_minus(const SElem& u, const Scalar& a);
/// (δ - c_k)∘⋯∘(δ - c_1)(b).
SElem apply_delta_poly(const SElem& b, const std::vector<Scalar>& roots);
/// Σ p_i z^i as an element of S0.
SElem z_poly(const ExactCurve& c, const Poly& p);
/// r >= 0 with a = q^r, if any.
std::optional<int> q_exponent(const Scalar& a, long q);

}  // namespace ellip
