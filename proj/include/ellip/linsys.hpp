#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellip/divisors.hpp"
#include "ellip/sring.hpp"

namespace ellip {

/// Dense matrix over Frac(S).
class Mat {
 public:
  Mat(const ExactCurve& c, size_t rows, size_t cols);
  static Mat identity(const ExactCurve& c, size_t n);
  static Mat from_rows(const ExactCurve& c, const std::vector<std::vector<SFraction>>& rows);

  const ExactCurve& curve() const { return curve_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  SFraction& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const SFraction& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  bool is_zero() const;
  bool is_square() const { return r_ == c_; }

  Mat operator-() const;
  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const SFraction& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(Mat a, const SFraction& s) { return a *= s; }
  friend Mat operator*(const SFraction& s, Mat a) { return a *= s; }
  friend bool operator==(const Mat& a, const Mat& b);

  Mat transpose() const;
  SFraction determinant() const;
  /// Adjugate over determinant; nullopt when singular.
  std::optional<Mat> inverse() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  void set_block(size_t r0, size_t c0, const Mat& m);

  std::string str() const;

 private:
  ExactCurve curve_;
  size_t r_, c_;
  std::vector<SFraction> a_;
};

Mat apply_phi(const Mat& m);
Mat apply_partial(const Mat& m);
Mat apply_delta(const Mat& m);

enum class GaugeMode { Difference, Differential };

/// Difference: φ(P) M P⁻¹. Differential: P M P⁻¹ + ∂P·P⁻¹.
/// Throws SingularGauge when P is not invertible.
Mat gauge(GaugeMode mode, const Mat& M, const Mat& P);
/// Both transforms at once for a pair (A, B).
std::pair<Mat, Mat> gauge_pair(const Mat& A, const Mat& B, const Mat& P);

/// qφ(B) - ABA⁻¹ - ∂A·A⁻¹; throws SingularA.
Mat consistency_residual(const Mat& A, const Mat& B);

enum class IntegrabilityMode { Partial, Delta };
/// Partial: ∂A - (qφ(B)A - AB). Delta: δA - (φ(B)A - AB).
Mat integrability_residual(IntegrabilityMode mode, const Mat& A, const Mat& B);

/// [[A, ∂A], [0, A]].
Mat prolongation(const Mat& A);
/// The gauge transform of prolongation(A) induced by P over the dual
/// numbers, where φ(bε) = qφ(b)ε: φ_ε(Q) prolongation(A) Q⁻¹ with
/// Q = [[P, ∂P], [0, P]] and φ_ε(Q) = [[φP, qφ(∂P)], [0, φP]].
Mat prolongation_gauge(const Mat& A, const Mat& P);

/// Companion matrix of φⁿy + a_1φⁿ⁻¹y + ... + a_n y = 0; a = (a_1..a_n).
/// Throws ZeroTrailingCoefficient when a_n = 0.
Mat companion(const std::vector<SFraction>& a);
/// φ^{r-1}(A)⋯φ(A)A.
Mat iterate_system(const Mat& A, int r);
/// (ᵗA⁻¹, -ᵗB).
std::pair<Mat, Mat> dual_pair(const Mat& A, const Mat& B);

/// The consistent pair attached to the fundamental matrix
/// U = [[z, ζ], [0, 1]]: A = [[q, f_ζ], [0, 1]], B = [[1/z, -X - ζ/z], [0, 0]].
std::pair<Mat, Mat> zeta_pair(const ExactCurve& c);

struct Rank1Verdict {
  bool algebraic = false;
  PeriodicDivisor witness;
  /// abel_jacobi(witness, q(q-1)) == 0, checked on every Algebraic verdict.
  bool sublattice_principal = false;
  std::string certificate;
};

/// Decides whether φ(f) = af has ∂-algebraic solutions from div(a).
/// Throws NotADivisorOfAFunction unless div_a is integral, of degree 0
/// and has Abel–Jacobi sum 0.
Rank1Verdict rank1_test(const PeriodicDivisor& div_a, long q);

}  // namespace ellip
