#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ellip {

/// Row-major dense matrix over a field-like type T (needs +, -, *, /,
/// is_zero()). `zero` supplies the additive identity for types that
/// cannot be default-constructed meaningfully.
template <class T>
struct DenseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c, const T& zero) : rows(r), cols(c), a(r * c, zero) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(DenseMatrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(p, k), m(r, k));
    T inv = m(r, c);
    for (std::size_t k = c; k < m.cols; ++k) m(r, k) = m(r, k) / inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      T f = m(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        if (!m(r, k).is_zero()) m(i, k) = m(i, k) - f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// A basis of the right kernel {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(DenseMatrix<T> m, const T& zero, const T& one) {
  auto piv = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols, zero);
    v[f] = one;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = zero - m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = rhs; nullopt if inconsistent. Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> solve(const DenseMatrix<T>& m, const std::vector<T>& rhs,
                                    const T& zero) {
  DenseMatrix<T> aug(m.rows, m.cols + 1, zero);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
    aug(i, m.cols) = rhs[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols) return std::nullopt;
  std::vector<T> x(m.cols, zero);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols);
  return x;
}

}  // namespace ellip
