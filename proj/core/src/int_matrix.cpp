#include "fanorat/int_matrix.hpp"

#include <algorithm>
#include <map>
#include <type_traits>

namespace fanorat {

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
  if (c_ != o.r_) throw MathError("matrix dimension mismatch in product");
  IntMatrix out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.c_; ++j) out.at(i, j) += x * o.at(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Int IntMatrix::det() const {
  if (r_ != c_) throw MathError("determinant of a non-square matrix");
  const int n = r_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = t / prev;  // exact by the Bareiss identity
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

std::vector<Int> SnfResult::invariant_factors() const {
  std::vector<Int> out;
  const int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i)
    if (d.at(i, i) != 0) out.push_back(d.at(i, i));
  return out;
}

int SnfResult::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

// Generic dense Smith reduction over an integer-like type Z. Transform
// tracking is optional. Determinant signs of the transforms are tracked
// through the elementary operations.
template <class Z>
struct DenseSnf {
  int m, n;
  std::vector<Z> a;
  std::vector<Z>*u = nullptr, *v = nullptr;
  int sign_u = 1, sign_v = 1;

  Z& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  Z& uat(int i, int j) { return (*u)[static_cast<std::size_t>(i) * m + j]; }
  Z& vat(int i, int j) { return (*v)[static_cast<std::size_t>(i) * n + j]; }

  static Z zabs(const Z& x) { return x < Z(0) ? Z(Z(0) - x) : x; }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
    if (u)
      for (int c = 0; c < m; ++c) std::swap(uat(i, c), uat(j, c));
    sign_u = -sign_u;
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(at(r, i), at(r, j));
    if (v)
      for (int r = 0; r < n; ++r) std::swap(vat(r, i), vat(r, j));
    sign_v = -sign_v;
  }
  void addmul_row(int dst, int src, const Z& c) {  // row dst += c * row src
    for (int j = 0; j < n; ++j) at(dst, j) += c * at(src, j);
    if (u)
      for (int j = 0; j < m; ++j) uat(dst, j) += c * uat(src, j);
  }
  void addmul_col(int dst, int src, const Z& c) {
    for (int i = 0; i < m; ++i) at(i, dst) += c * at(i, src);
    if (v)
      for (int i = 0; i < n; ++i) vat(i, dst) += c * vat(i, src);
  }
  void negate_row(int i) {
    for (int j = 0; j < n; ++j) at(i, j) = Z(0) - at(i, j);
    if (u)
      for (int j = 0; j < m; ++j) uat(i, j) = Z(0) - uat(i, j);
    sign_u = -sign_u;
  }

  bool find_pivot(int t, int& pi, int& pj) {
    bool found = false;
    Z best = Z(0);
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Z& x = at(i, j);
        if (x == Z(0)) continue;
        Z ax = zabs(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
          if (best == Z(1)) return true;
        }
      }
    return found;
  }

  // Clears row t and column t outside the pivot at (t, t).
  void clear_cross(int t) {
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i) {
        if (at(i, t) == Z(0)) continue;
        Z q = at(i, t) / at(t, t);
        if (q != Z(0)) addmul_row(i, t, Z(0) - q);
        if (at(i, t) != Z(0)) {  // remainder becomes the smaller pivot
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (at(t, j) == Z(0)) continue;
        Z q = at(t, j) / at(t, t);
        if (q != Z(0)) addmul_col(j, t, Z(0) - q);
        if (at(t, j) != Z(0)) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) {
        bool clean = true;
        for (int i = t + 1; i < m && clean; ++i)
          if (at(i, t) != Z(0)) clean = false;
        for (int j = t + 1; j < n && clean; ++j)
          if (at(t, j) != Z(0)) clean = false;
        if (clean) return;
      }
    }
  }

  int run() {
    int t = 0;
    int pi = 0, pj = 0;
    while (t < m && t < n && find_pivot(t, pi, pj)) {
      swap_rows(t, pi);
      swap_cols(t, pj);
      clear_cross(t);
      ++t;
    }
    // Divisibility chain: d_i | d_{i+1}.
    for (;;) {
      bool stable = true;
      for (int i = 0; i + 1 < t; ++i) {
        if (at(i + 1, i + 1) % at(i, i) != Z(0)) {
          addmul_col(i, i + 1, Z(1));
          clear_cross(i);
          stable = false;
        }
      }
      if (!stable) continue;
      break;
    }
    for (int i = 0; i < t; ++i)
      if (at(i, i) < Z(0)) negate_row(i);
    return t;
  }
};

struct ExGcd {
  long long g, s, t;
};

template <class Z>
void sparse_combine(std::vector<std::pair<int, Z>>& out, const std::vector<std::pair<int, Z>>& x,
                    const Z& cx, const std::vector<std::pair<int, Z>>& y, const Z& cy) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      Z val = cx * x[i].second;
      if (!(val == Z(0))) out.emplace_back(x[i].first, val);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      Z val = cy * y[j].second;
      if (!(val == Z(0))) out.emplace_back(y[j].first, val);
      ++j;
    } else {
      Z val = cx * x[i].second + cy * y[j].second;
      if (!(val == Z(0))) out.emplace_back(x[i].first, val);
      ++i;
      ++j;
    }
  }
}

template <class Z>
Z zgcd(Z a, Z b) {
  if (a < Z(0)) a = Z(0) - a;
  if (b < Z(0)) b = Z(0) - b;
  while (!(b == Z(0))) {
    Z t = a % b;
    a = b;
    b = t;
  }
  return a;
}

template <class Z>
void zexgcd(const Z& a, const Z& b, Z& g, Z& s, Z& t) {
  // Iterative extended Euclid.
  Z old_r = a, r = b, old_s = Z(1), s1 = Z(0), old_t = Z(0), t1 = Z(1);
  while (!(r == Z(0))) {
    Z q = old_r / r;
    Z tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < Z(0)) {
    old_r = Z(0) - old_r;
    old_s = Z(0) - old_s;
    old_t = Z(0) - old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

// Row echelon pass over sparse rows; returns pivot rows keyed by lead column.
// Left-multiplication by unimodular matrices preserves the Smith form, so the
// surviving block has the same invariant factors as the input.
template <class Z>
std::map<int, std::vector<std::pair<int, Z>>> sparse_echelon(
    const std::vector<SparseIntRow>& rows) {
  using Row = std::vector<std::pair<int, Z>>;
  std::map<int, Row> pivots;
  Row work, tmp;
  for (const auto& r0 : rows) {
    work.clear();
    for (const auto& [c, val] : r0)
      if (val != 0) work.emplace_back(c, Z(val));
    while (!work.empty()) {
      const int lead = work.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        pivots.emplace(lead, work);
        break;
      }
      Row& piv = it->second;
      const Z a = piv.front().second, b = work.front().second;
      if (Z(b % a) == Z(0)) {
        const Z negq = Z(Z(0) - Z(b / a));
        sparse_combine(tmp, work, Z(1), piv, negq);
        work.swap(tmp);
      } else {
        Z g, s, t;
        zexgcd(a, b, g, s, t);
        // new pivot = s*piv + t*work has lead g; new work has lead 0.
        sparse_combine(tmp, piv, s, work, t);
        Row newpiv;
        newpiv.swap(tmp);
        const Z qa = Z(a / g), qb = Z(Z(0) - Z(b / g));
        sparse_combine(tmp, work, qa, piv, qb);
        work.swap(tmp);
        piv.swap(newpiv);
      }
    }
  }
  return pivots;
}

template <class Z>
std::vector<Int> factors_from_sparse(const std::vector<SparseIntRow>& rows, int ncols) {
  auto pivots = sparse_echelon<Z>(rows);
  const int m = static_cast<int>(pivots.size());
  DenseSnf<Z> snf;
  snf.m = m;
  snf.n = ncols;
  snf.a.assign(static_cast<std::size_t>(m) * ncols, Z(0));
  int i = 0;
  for (const auto& [lead, row] : pivots) {
    (void)lead;
    for (const auto& [c, val] : row) snf.at(i, c) = val;
    ++i;
  }
  const int rank = snf.run();
  std::vector<Int> out;
  out.reserve(rank);
  for (int k = 0; k < rank; ++k) {
    if constexpr (std::is_same_v<Z, CheckedI64>) {
      out.emplace_back(snf.at(k, k).v);
    } else {
      out.emplace_back(snf.at(k, k));
    }
  }
  return out;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  const int m = a.rows(), n = a.cols();
  DenseSnf<Int> snf;
  snf.m = m;
  snf.n = n;
  snf.a.resize(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) snf.at(i, j) = a.at(i, j);
  std::vector<Int> ubuf(static_cast<std::size_t>(m) * m), vbuf(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < m; ++i) ubuf[static_cast<std::size_t>(i) * m + i] = 1;
  for (int i = 0; i < n; ++i) vbuf[static_cast<std::size_t>(i) * n + i] = 1;
  snf.u = &ubuf;
  snf.v = &vbuf;
  snf.run();

  SnfResult res;
  res.d = IntMatrix(m, n);
  res.u = IntMatrix(m, m);
  res.v = IntMatrix(n, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) res.d.at(i, j) = snf.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) res.u.at(i, j) = ubuf[static_cast<std::size_t>(i) * m + j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) res.v.at(i, j) = vbuf[static_cast<std::size_t>(i) * n + j];
  res.det_u = snf.sign_u;
  res.det_v = snf.sign_v;
  return res;
}

std::vector<Int> invariant_factors_sparse(const std::vector<SparseIntRow>& rows, int ncols) {
  try {
    return factors_from_sparse<CheckedI64>(rows, ncols);
  } catch (const OverflowError&) {
    return factors_from_sparse<Int>(rows, ncols);
  }
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
  std::vector<SparseIntRow> rows(a.rows());
  bool fits = true;
  for (int i = 0; i < a.rows() && fits; ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Int& x = a.at(i, j);
      if (x == 0) continue;
      if (x > INT64_MAX || x < INT64_MIN) {
        fits = false;
        break;
      }
      rows[i].emplace_back(j, static_cast<long long>(x));
    }
  if (fits) return invariant_factors_sparse(rows, a.cols());
  return smith_normal_form(a).invariant_factors();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SnfResult s = smith_normal_form(a);
  const int n = a.cols();
  std::vector<int> kernel_cols;
  for (int j = 0; j < n; ++j) {
    bool zero = j >= std::min(a.rows(), n) || s.d.at(j, j) == 0;
    if (zero) kernel_cols.push_back(j);
  }
  IntMatrix k(n, static_cast<int>(kernel_cols.size()));
  for (int c = 0; c < static_cast<int>(kernel_cols.size()); ++c)
    for (int i = 0; i < n; ++i) k.at(i, c) = s.v.at(i, kernel_cols[c]);
  return k;
}

IntMatrix express_in_lattice(const IntMatrix& k, const IntMatrix& b) {
  if (k.rows() != b.rows()) throw MathError("lattice dimension mismatch");
  SnfResult s = smith_normal_form(k);
  const int rank = s.rank();
  if (rank != k.cols()) throw MathError("lattice basis is not linearly independent");
  IntMatrix ub = s.u.mul(b);
  IntMatrix w(k.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    for (int i = 0; i < k.rows(); ++i) {
      if (i < rank) {
        if (ub.at(i, j) % s.d.at(i, i) != 0)
          throw MathError("vector has non-integral coordinates in the lattice");
        w.at(i, j) = ub.at(i, j) / s.d.at(i, i);
      } else if (ub.at(i, j) != 0) {
        throw MathError("vector lies outside the lattice span");
      }
    }
  }
  return s.v.mul(w);
}

}  // namespace fanorat
