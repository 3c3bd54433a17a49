#include "ellip/linsys.hpp"

#include <cstdint>
#include <sstream>

#include "ellip/errors.hpp"

namespace ellip {

Mat::Mat(const ExactCurve& c, size_t rows, size_t cols)
    : curve_(c), r_(rows), c_(cols), a_(rows * cols, SFraction(c)) {}

Mat Mat::identity(const ExactCurve& c, size_t n) {
  Mat m(c, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = SFraction::constant(c, 1);
  return m;
}

Mat Mat::from_rows(const ExactCurve& c, const std::vector<std::vector<SFraction>>& rows) {
  size_t nc = rows.empty() ? 0 : rows[0].size();
  Mat m(c, rows.size(), nc);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DimensionMismatch("ragged matrix rows");
    for (size_t j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix sum of different shapes");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("matrix difference of different shapes");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(const SFraction& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw DimensionMismatch("matrix product of incompatible shapes");
  Mat m(a.curve_, a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const SFraction& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t k = 0; k < a.a_.size(); ++k)
    if (!(a.a_[k] == b.a_[k])) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat m(curve_, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

namespace {

/// Laplace expansion along the first row over the given row/column sets;
/// zero entries prune the recursion.
SFraction det_minor(const Mat& m, std::vector<size_t>& rows, std::vector<size_t>& cols) {
  const ExactCurve& c = m.curve();
  if (rows.empty()) return SFraction::constant(c, 1);
  if (rows.size() == 1) return m(rows[0], cols[0]);
  size_t r = rows.front();
  std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
  SFraction acc(c);
  for (size_t k = 0; k < cols.size(); ++k) {
    const SFraction& x = m(r, cols[k]);
    if (x.is_zero()) continue;
    std::vector<size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<long>(k));
    SFraction minor = det_minor(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    if (k % 2 == 0) acc += x * minor;
    else acc -= x * minor;
  }
  return acc;
}

std::vector<size_t> iota(size_t n, size_t skip = SIZE_MAX) {
  std::vector<size_t> v;
  for (size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

}  // namespace

SFraction Mat::determinant() const {
  if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  auto rows = iota(r_), cols = iota(c_);
  return det_minor(*this, rows, cols);
}

std::optional<Mat> Mat::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  size_t n = r_;
  SFraction d = determinant();
  if (d.is_zero()) return std::nullopt;
  SFraction di = d.inv();
  Mat inv(curve_, n, n);
  // inverse = adj / det with adj(j, i) the (i, j) cofactor
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto rows = iota(n, i), cols = iota(n, j);
      SFraction cof = det_minor(*this, rows, cols);
      if (cof.is_zero()) continue;
      inv(j, i) = (i + j) % 2 == 0 ? cof * di : -(cof * di);
    }
  return inv;
}

Mat Mat::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  Mat m(curve_, nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Mat::set_block(size_t r0, size_t c0, const Mat& m) {
  for (size_t i = 0; i < m.r_; ++i)
    for (size_t j = 0; j < m.c_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

template <class F>
Mat entrywise(const Mat& m, F f) {
  Mat out(m.curve(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out(i, j) = f(m(i, j));
  return out;
}

SFraction qconst(const ExactCurve& c) { return SFraction::constant(c, Scalar(c.q())); }

Mat invert(const Mat& m, bool gauge) {
  auto inv = m.inverse();
  if (!inv) {
    if (gauge) throw SingularGauge("gauge matrix is not invertible");
    throw SingularA("system matrix is not invertible");
  }
  return *inv;
}

}  // namespace

Mat apply_phi(const Mat& m) {
  return entrywise(m, [](const SFraction& x) { return apply_phi(x); });
}

Mat apply_partial(const Mat& m) {
  return entrywise(m, [](const SFraction& x) { return apply_partial(x); });
}

Mat apply_delta(const Mat& m) {
  return entrywise(m, [](const SFraction& x) { return apply_delta(x); });
}

Mat gauge(GaugeMode mode, const Mat& M, const Mat& P) {
  if (!M.is_square() || !P.is_square() || M.rows() != P.rows())
    throw DimensionMismatch("gauge needs square matrices of the same size");
  Mat Pi = invert(P, true);
  if (mode == GaugeMode::Difference) return apply_phi(P) * M * Pi;
  return P * M * Pi + apply_partial(P) * Pi;
}

std::pair<Mat, Mat> gauge_pair(const Mat& A, const Mat& B, const Mat& P) {
  return {gauge(GaugeMode::Difference, A, P), gauge(GaugeMode::Differential, B, P)};
}

Mat consistency_residual(const Mat& A, const Mat& B) {
  // (qφ(B)A - AB - ∂A)A⁻¹, inverting only when the bracket is nonzero
  if (A.determinant().is_zero()) throw SingularA("system matrix is not invertible");
  Mat R = qconst(A.curve()) * apply_phi(B) * A - A * B - apply_partial(A);
  if (R.is_zero()) return R;
  return R * invert(A, false);
}

Mat integrability_residual(IntegrabilityMode mode, const Mat& A, const Mat& B) {
  if (mode == IntegrabilityMode::Partial)
    return apply_partial(A) - (qconst(A.curve()) * apply_phi(B) * A - A * B);
  return apply_delta(A) - (apply_phi(B) * A - A * B);
}

Mat prolongation(const Mat& A) {
  size_t n = A.rows();
  Mat m(A.curve(), 2 * n, 2 * n);
  m.set_block(0, 0, A);
  m.set_block(0, n, apply_partial(A));
  m.set_block(n, n, A);
  return m;
}

Mat prolongation_gauge(const Mat& A, const Mat& P) {
  size_t n = P.rows();
  Mat Q(P.curve(), 2 * n, 2 * n), phiQ(P.curve(), 2 * n, 2 * n);
  Mat dP = apply_partial(P), phiP = apply_phi(P);
  Q.set_block(0, 0, P);
  Q.set_block(0, n, dP);
  Q.set_block(n, n, P);
  phiQ.set_block(0, 0, phiP);
  phiQ.set_block(0, n, qconst(P.curve()) * apply_phi(dP));
  phiQ.set_block(n, n, phiP);
  return phiQ * prolongation(A) * invert(Q, true);
}

Mat companion(const std::vector<SFraction>& a) {
  if (a.empty()) throw DimensionMismatch("companion needs at least one coefficient");
  if (a.back().is_zero()) throw ZeroTrailingCoefficient("a_n must be nonzero");
  const ExactCurve& c = a[0].curve();
  size_t n = a.size();
  Mat m(c, n, n);
  for (size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = SFraction::constant(c, 1);
  // last row: -a_n, -a_{n-1}, ..., -a_1
  for (size_t j = 0; j < n; ++j) m(n - 1, j) = -a[n - 1 - j];
  return m;
}

Mat iterate_system(const Mat& A, int r) {
  if (r < 1) throw DomainViolation("iterate_system needs r >= 1");
  Mat acc = A;
  Mat cur = A;
  for (int k = 1; k < r; ++k) {
    cur = apply_phi(cur);
    acc = cur * acc;
  }
  return acc;
}

std::pair<Mat, Mat> dual_pair(const Mat& A, const Mat& B) {
  return {invert(A, false).transpose(), -B.transpose()};
}

std::pair<Mat, Mat> zeta_pair(const ExactCurve& c) {
  SElem z = SElem::z(c, false), zeta = SElem::zeta(c, false);
  SFraction one = SFraction::constant(c, 1), zero(c);
  SFraction fz = SFraction::from(zeta_defect(c, static_cast<int>(c.q())));
  Mat A = Mat::from_rows(c, {{qconst(c), fz}, {zero, one}});
  SFraction invz(SElem::constant(c, 1, false), z);
  SFraction b12 = -SFraction::from(EllFun::X(c)) - SFraction(zeta, z);
  Mat B = Mat::from_rows(c, {{invz, b12}, {zero, zero}});
  return {A, B};
}

Rank1Verdict rank1_test(const PeriodicDivisor& div_a, long q) {
  if (!div_a.integral()) throw NotADivisorOfAFunction("div(a) must have integer values");
  if (sgn(degree(div_a)) != 0) throw NotADivisorOfAFunction("div(a) must have degree 0");
  if (!abel_jacobi(div_a, 1).is_zero())
    throw NotADivisorOfAFunction("Abel-Jacobi sum of div(a) is not zero");
  Rank1Verdict v;
  auto s = solve_phi_minus_one(div_a, q);
  if (!s.solved) {
    v.certificate = s.certificate;
    return v;
  }
  v.algebraic = true;
  v.witness = s.D;
  v.sublattice_principal = abel_jacobi(s.D, q * (q - 1)).is_zero();
  return v;
}

}  // namespace ellip
