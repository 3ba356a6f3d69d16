#pragma once

#include <optional>
#include <vector>

#include "fanorat/ints.hpp"

namespace fanorat {

// Dense matrix over a field presented as a context object (FqField,
// RationalField). Entries default to the field's zero.
template <class F>
struct Mat {
  using Elem = typename F::Elem;

  int rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(const F& f, int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
Mat<F> mat_mul(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.cols != y.rows) throw MathError("matrix product shape mismatch");
  Mat<F> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (f.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = f.add(z.at(i, j), f.mul(x.at(i, k), y.at(k, j)));
    }
  return z;
}

template <class F>
Mat<F> mat_transpose(const Mat<F>& x) {
  Mat<F> z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

template <class F>
bool mat_eq(const F& f, const Mat<F>& x, const Mat<F>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!f.eq(x.a[i], y.a[i])) return false;
  return true;
}

// In-place reduced row echelon form; returns the pivot columns in order.
template <class F>
std::vector<int> rref(const F& f, Mat<F>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int i = row; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    auto scale = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), scale);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || f.is_zero(m.at(i, col))) continue;
      auto c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
int mat_rank(const F& f, Mat<F> m) {
  return static_cast<int>(rref(f, m).size());
}

// Basis of the right kernel of m, one vector (length m.cols) per column of
// the returned list.
template <class F>
std::vector<std::vector<typename F::Elem>> mat_kernel(const F& f, Mat<F> m) {
  std::vector<int> pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename F::Elem>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<typename F::Elem> v(m.cols, f.zero());
    v[c] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m.at(static_cast<int>(r), c));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
typename F::Elem mat_det(const F& f, Mat<F> m) {
  if (m.rows != m.cols) throw MathError("determinant of non-square matrix");
  auto det = f.one();
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int i = col; i < m.rows; ++i)
      if (!f.is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != col) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    auto scale = f.inv(m.at(col, col));
    for (int i = col + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      auto c = f.mul(m.at(i, col), scale);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(col, j)));
    }
  }
  return det;
}

// One solution of A x = b, or nullopt when the system is inconsistent.
template <class F>
std::optional<std::vector<typename F::Elem>> mat_solve(
    const F& f, const Mat<F>& m, const std::vector<typename F::Elem>& b) {
  if (static_cast<int>(b.size()) != m.rows) throw MathError("solve shape mismatch");
  Mat<F> aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<typename F::Elem> x(m.cols, f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace fanorat
