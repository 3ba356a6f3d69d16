#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/ints.hpp"
#include "fanorat/linalg.hpp"
#include "fanorat/multipoly.hpp"
#include "fanorat/rng.hpp"

namespace fanorat {

// A net of three bilinear forms on a pair of 4-dimensional spaces, stored as
// 4x4 matrices acting as (x, y) -> x^T A y. The three forms must be linearly
// independent as vectors of the 16-dimensional form space.
template <class F>
struct Net33 {
  const F* field = nullptr;
  std::array<Mat<F>, 3> forms;

  Net33(const F& f, std::array<Mat<F>, 3> ms) : field(&f), forms(std::move(ms)) {
    Mat<F> flat(3, 16);
    for (int i = 0; i < 3; ++i) {
      const auto& m = forms[static_cast<std::size_t>(i)];
      if (m.rows != 4 || m.cols != 4) throw MathError("net forms must be 4x4");
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) flat.at(i, 4 * r + c) = m.at(r, c);
    }
    if (mat_rank(f, flat) != 3)
      throw MathError("net forms must be linearly independent");
  }
};

// A triple of bilinear forms on three 3-dimensional spaces, one per pair of
// factors, together with a base point annihilated by all of them. Every form
// must be nondegenerate; a degenerate one would make two of the pair
// restrictions of the structured matrix everywhere degenerate.
template <class F>
struct Net222 {
  const F* field = nullptr;
  std::array<Mat<F>, 3> forms;  // f01 on (V1,V2), f02 on (V1,V3), f12 on (V2,V3)
  std::array<std::vector<typename F::Elem>, 3> base;
  std::array<int, 3> pivot{};

  Net222(const F& f, std::array<Mat<F>, 3> ms,
         std::array<std::vector<typename F::Elem>, 3> v)
      : field(&f), forms(std::move(ms)), base(std::move(v)) {
    static const char* names[3] = {"F12", "F13", "F23"};
    for (int i = 0; i < 3; ++i) {
      const auto& m = forms[static_cast<std::size_t>(i)];
      if (m.rows != 3 || m.cols != 3) throw MathError("pair forms must be 3x3");
      if (f.is_zero(mat_det(f, m)))
        throw MathError(std::string("bilinear form ") + names[i] +
                        " is degenerate: two pair restrictions of the"
                        " structured matrix would be everywhere degenerate");
    }
    for (int i = 0; i < 3; ++i) {
      if (base[static_cast<std::size_t>(i)].size() != 3)
        throw MathError("base point coordinates must have length 3");
      pivot[static_cast<std::size_t>(i)] = -1;
      for (int c = 0; c < 3; ++c)
        if (!f.is_zero(base[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)])) {
          pivot[static_cast<std::size_t>(i)] = c;
          break;
        }
      if (pivot[static_cast<std::size_t>(i)] < 0)
        throw MathError("base point coordinates must be nonzero");
    }
    // pair index -> (left factor, right factor)
    static const int lf[3] = {0, 0, 1};
    static const int rf[3] = {1, 2, 2};
    for (int k = 0; k < 3; ++k) {
      typename F::Elem val = f.zero();
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          val = f.add(val, f.mul(base[static_cast<std::size_t>(lf[k])][static_cast<std::size_t>(r)],
                                 f.mul(forms[static_cast<std::size_t>(k)].at(r, c),
                                       base[static_cast<std::size_t>(rf[k])][static_cast<std::size_t>(c)])));
      if (!f.is_zero(val))
        throw MathError(std::string("base point does not annihilate ") + names[k]);
    }
  }
};

template <class F>
typename F::Elem bilinear_eval(const F& f, const Mat<F>& m,
                               const std::vector<typename F::Elem>& x,
                               const std::vector<typename F::Elem>& y) {
  if (static_cast<int>(x.size()) != m.rows || static_cast<int>(y.size()) != m.cols)
    throw MathError("bilinear evaluation length mismatch");
  typename F::Elem acc = f.zero();
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      acc = f.add(acc, f.mul(x[static_cast<std::size_t>(r)],
                             f.mul(m.at(r, c), y[static_cast<std::size_t>(c)])));
  return acc;
}

// Base point on the common zero locus of a Net33, with the complement
// splitting fixed by the pivot convention: the complement of v is the span
// of the standard basis vectors away from v's first nonzero coordinate.
template <class F>
struct BasePoint33 {
  std::vector<typename F::Elem> v1, v2;
  int piv1 = -1, piv2 = -1;

  BasePoint33(const F& f, const Net33<F>& net, std::vector<typename F::Elem> a,
              std::vector<typename F::Elem> b)
      : v1(std::move(a)), v2(std::move(b)) {
    if (v1.size() != 4 || v2.size() != 4)
      throw MathError("base point coordinates must have length 4");
    for (int c = 0; c < 4; ++c) {
      if (piv1 < 0 && !f.is_zero(v1[static_cast<std::size_t>(c)])) piv1 = c;
      if (piv2 < 0 && !f.is_zero(v2[static_cast<std::size_t>(c)])) piv2 = c;
    }
    if (piv1 < 0 || piv2 < 0) throw MathError("base point coordinates must be nonzero");
    for (const auto& m : net.forms)
      if (!f.is_zero(bilinear_eval(f, m, v1, v2)))
        throw MathError("base point does not annihilate the net");
  }
};

namespace detail {

// Insert a zero at position piv, producing a full-length coordinate vector
// from complement coordinates.
template <class F>
std::vector<typename F::Elem> embed_at_pivot(const F& f,
                                             const std::vector<typename F::Elem>& bar,
                                             int piv, int n) {
  std::vector<typename F::Elem> out(static_cast<std::size_t>(n), f.zero());
  int w = 0;
  for (int c = 0; c < n; ++c) {
    if (c == piv) continue;
    out[static_cast<std::size_t>(c)] = bar[static_cast<std::size_t>(w++)];
  }
  return out;
}

template <class T>
std::vector<T> drop_index(const std::vector<T>& v, int piv) {
  std::vector<T> out;
  out.reserve(v.size() - 1);
  for (std::size_t c = 0; c < v.size(); ++c)
    if (static_cast<int>(c) != piv) out.push_back(v[c]);
  return out;
}

// Restriction of a bilinear form to the two pivot complements: delete the
// pivot row and pivot column.
template <class F>
Mat<F> restrict_form(const F& f, const Mat<F>& m, int piv_row, int piv_col) {
  (void)f;
  Mat<F> out(m.rows - 1, m.cols - 1);
  int rr = 0;
  for (int r = 0; r < m.rows; ++r) {
    if (r == piv_row) continue;
    int cc = 0;
    for (int c = 0; c < m.cols; ++c) {
      if (c == piv_col) continue;
      out.at(rr, cc) = m.at(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

template <class F>
std::vector<typename F::Elem> mat_vec(const F& f, const Mat<F>& m,
                                      const std::vector<typename F::Elem>& x) {
  std::vector<typename F::Elem> out(static_cast<std::size_t>(m.rows), f.zero());
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      out[static_cast<std::size_t>(r)] =
          f.add(out[static_cast<std::size_t>(r)],
                f.mul(m.at(r, c), x[static_cast<std::size_t>(c)]));
  return out;
}

template <class F>
std::vector<typename F::Elem> vec_mat(const F& f, const std::vector<typename F::Elem>& x,
                                      const Mat<F>& m) {
  std::vector<typename F::Elem> out(static_cast<std::size_t>(m.cols), f.zero());
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r)
      out[static_cast<std::size_t>(c)] =
          f.add(out[static_cast<std::size_t>(c)],
                f.mul(x[static_cast<std::size_t>(r)], m.at(r, c)));
  return out;
}

template <class F>
bool all_zero(const F& f, const std::vector<typename F::Elem>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
void normalize_leading_vec(const F& f, std::vector<typename F::Elem>& v) {
  for (const auto& x : v) {
    if (f.is_zero(x)) continue;
    auto inv = f.inv(x);
    for (auto& y : v) y = f.mul(inv, y);
    return;
  }
}

// Linear polynomial sum(coeffs[j] * variable(block, j)) in the given block.
template <class F>
MultiPoly<F> linear_in_block(const F& f, const BlockStructure& bs, int block,
                             const std::vector<typename F::Elem>& coeffs) {
  MultiPoly<F> p(bs);
  for (int j = 0; j < bs.block_size(block); ++j) {
    ExpVec e(static_cast<std::size_t>(bs.total_vars()), 0);
    e[static_cast<std::size_t>(bs.var_index(block, j))] = 1;
    p.add_term(f, e, coeffs[static_cast<std::size_t>(j)]);
  }
  return p;
}

// Bilinear polynomial sum(m[r][c] * variable(b1, r) * variable(b2, c)).
template <class F>
MultiPoly<F> bilinear_in_blocks(const F& f, const BlockStructure& bs, int b1, int b2,
                                const Mat<F>& m) {
  MultiPoly<F> p(bs);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      if (f.is_zero(m.at(r, c))) continue;
      ExpVec e(static_cast<std::size_t>(bs.total_vars()), 0);
      e[static_cast<std::size_t>(bs.var_index(b1, r))] = 1;
      e[static_cast<std::size_t>(bs.var_index(b2, c))] = 1;
      p.add_term(f, e, m.at(r, c));
    }
  return p;
}

}  // namespace detail

// Kernel dimensions of the two evaluation maps sending a form of the net to
// its contraction with one base-point coordinate. A nonzero kernel on either
// side detects a line of the degeneracy model through the base point.
struct LineDetection {
  int left_kernel_dim = 0;
  int right_kernel_dim = 0;
  bool has_line = false;
};

template <class F>
LineDetection lines_through_base_point(const F& f, const Net33<F>& net,
                                       const BasePoint33<F>& x0) {
  Mat<F> left(4, 3), right(4, 3);
  for (int i = 0; i < 3; ++i) {
    auto lw = detail::vec_mat(f, x0.v1, net.forms[static_cast<std::size_t>(i)]);
    auto rw = detail::mat_vec(f, net.forms[static_cast<std::size_t>(i)], x0.v2);
    for (int r = 0; r < 4; ++r) {
      left.at(r, i) = lw[static_cast<std::size_t>(r)];
      right.at(r, i) = rw[static_cast<std::size_t>(r)];
    }
  }
  LineDetection out;
  out.left_kernel_dim = 3 - mat_rank(f, left);
  out.right_kernel_dim = 3 - mat_rank(f, right);
  out.has_line = out.left_kernel_dim > 0 || out.right_kernel_dim > 0;
  return out;
}

// The 3x3 structured matrix of the net at a base point, with entries in
// complement coordinates: column 0 carries the restricted bilinear forms
// (bidegree (1,1)), column 1 the contractions against the second base
// coordinate (bidegree (1,0)), column 2 the contractions against the first
// (bidegree (0,1)).
template <class F>
struct Xi33 {
  BlockStructure bs;
  std::vector<std::vector<MultiPoly<F>>> m;
};

template <class F>
Xi33<F> build_xi_33(const F& f, const Net33<F>& net, const BasePoint33<F>& x0) {
  BlockStructure bs({{"w1", 3}, {"w2", 3}});
  Xi33<F> xi{bs, {}};
  xi.m.assign(3, std::vector<MultiPoly<F>>(3, MultiPoly<F>(bs)));
  for (int i = 0; i < 3; ++i) {
    const auto& a = net.forms[static_cast<std::size_t>(i)];
    Mat<F> bar = detail::restrict_form(f, a, x0.piv1, x0.piv2);
    auto col1 = detail::drop_index(detail::mat_vec(f, a, x0.v2), x0.piv1);
    auto col2 = detail::drop_index(detail::vec_mat(f, x0.v1, a), x0.piv2);
    xi.m[static_cast<std::size_t>(i)][0] = detail::bilinear_in_blocks(f, bs, 0, 1, bar);
    xi.m[static_cast<std::size_t>(i)][1] = detail::linear_in_block(f, bs, 0, col1);
    xi.m[static_cast<std::size_t>(i)][2] = detail::linear_in_block(f, bs, 1, col2);
  }
  return xi;
}

inline const std::array<std::array<int, 2>, 3>& xi33_column_bidegrees() {
  static const std::array<std::array<int, 2>, 3> deg{{{1, 1}, {1, 0}, {0, 1}}};
  return deg;
}

template <class F>
bool xi33_degrees_ok(const Xi33<F>& xi) {
  const auto& expect = xi33_column_bidegrees();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& e = xi.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.is_zero()) continue;
      auto deg = e.block_multidegree();
      if (!deg) return false;
      if ((*deg)[0] != expect[static_cast<std::size_t>(j)][0] ||
          (*deg)[1] != expect[static_cast<std::size_t>(j)][1])
        return false;
    }
  return true;
}

// Determinant of the structured matrix: the equation of the image of the
// degeneracy model in the product of the two complement projective planes.
template <class F>
struct BidegreeSurface {
  MultiPoly<F> equation;
  bool degenerate = false;
};

template <class F>
BidegreeSurface<F> xplus_equation(const F& f, const Net33<F>& net,
                                  const BasePoint33<F>& x0) {
  Xi33<F> xi = build_xi_33(f, net, x0);
  BidegreeSurface<F> out{poly_det(f, xi.m), false};
  if (out.equation.is_zero()) {
    out.degenerate = true;
    return out;
  }
  auto deg = out.equation.block_multidegree();
  out.degenerate = !deg || (*deg)[0] != 2 || (*deg)[1] != 2;
  return out;
}

// Determinant of the pencil matrix l1*A1 + l2*A2 + l3*A3: a plane quartic in
// the net coordinates, flagged degenerate when it drops degree or vanishes.
template <class F>
struct PlaneQuartic {
  MultiPoly<F> poly;
  bool degenerate = false;
};

template <class F>
PlaneQuartic<F> discriminant_quartic(const F& f, const Net33<F>& net) {
  BlockStructure bs({{"l", 3}});
  std::vector<std::vector<MultiPoly<F>>> m(4, std::vector<MultiPoly<F>>(4, MultiPoly<F>(bs)));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      std::vector<typename F::Elem> coeffs;
      for (int i = 0; i < 3; ++i)
        coeffs.push_back(net.forms[static_cast<std::size_t>(i)].at(r, c));
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          detail::linear_in_block(f, bs, 0, coeffs);
    }
  PlaneQuartic<F> out{poly_det(f, m), false};
  auto deg = out.poly.block_multidegree();
  out.degenerate = out.poly.is_zero() || !deg || (*deg)[0] != 4;
  return out;
}

// Fiber of the pencil over one net coordinate vector: the 2x2 restriction of
// the restricted form to the two kernel lines cut by the contraction
// functionals, plus the bases of those kernel lines.
template <class F>
struct ConicFiber {
  Mat<F> basis1 = Mat<F>(3, 2);  // columns span the kernel of the functional on side 1
  Mat<F> basis2 = Mat<F>(3, 2);  // same on side 2
  Mat<F> block = Mat<F>(2, 2);
  bool degenerate_fiber = false;
  bool is_singular_fiber = false;
};

template <class F>
ConicFiber<F> conic_fiber(const F& f, const Net33<F>& net, const BasePoint33<F>& x0,
                          const std::vector<typename F::Elem>& lambda) {
  if (lambda.size() != 3) throw MathError("pencil coordinate must have length 3");
  bool lz = true;
  for (const auto& x : lambda)
    if (!f.is_zero(x)) lz = false;
  if (lz) throw MathError("pencil coordinate must be nonzero");
  if (lines_through_base_point(f, net, x0).has_line)
    throw MathError("fiber computation requires a base point with no line through it");
  Mat<F> a(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      typename F::Elem v = f.zero();
      for (int i = 0; i < 3; ++i)
        v = f.add(v, f.mul(lambda[static_cast<std::size_t>(i)],
                           net.forms[static_cast<std::size_t>(i)].at(r, c)));
      a.at(r, c) = v;
    }
  ConicFiber<F> out;
  auto fun1 = detail::drop_index(detail::mat_vec(f, a, x0.v2), x0.piv1);
  auto fun2 = detail::drop_index(detail::vec_mat(f, x0.v1, a), x0.piv2);
  if (detail::all_zero(f, fun1) || detail::all_zero(f, fun2)) {
    out.degenerate_fiber = true;
    return out;
  }
  Mat<F> row1(1, 3), row2(1, 3);
  for (int c = 0; c < 3; ++c) {
    row1.at(0, c) = fun1[static_cast<std::size_t>(c)];
    row2.at(0, c) = fun2[static_cast<std::size_t>(c)];
  }
  auto k1 = mat_kernel(f, row1);
  auto k2 = mat_kernel(f, row2);
  if (k1.size() != 2 || k2.size() != 2) throw MathError("kernel line has wrong dimension");
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) {
      out.basis1.at(r, c) = k1[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      out.basis2.at(r, c) = k2[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
  Mat<F> bar = detail::restrict_form(f, a, x0.piv1, x0.piv2);
  out.block = mat_mul(f, mat_transpose(out.basis1), mat_mul(f, bar, out.basis2));
  out.is_singular_fiber = f.is_zero(mat_det(f, out.block));
  return out;
}

// Splitting of a rank-one 2x2 block u * w^T into its two zero lines, each
// pinned in one factor. The pinned coordinates are the perpendiculars of u
// and w, normalized to leading coefficient one; the coincident flag marks
// blocks proportional to u * u^T, where the two pinned coordinates agree.
template <class F>
struct RankOneSplit {
  bool zero_block = false;
  bool coincident = false;
  std::vector<typename F::Elem> pinned1, pinned2;
};

template <class F>
RankOneSplit<F> split_rank_one(const F& f, const Mat<F>& b) {
  if (b.rows != 2 || b.cols != 2) throw MathError("block must be 2x2");
  RankOneSplit<F> out;
  std::vector<typename F::Elem> u(2, f.zero());
  int col = -1;
  for (int c = 0; c < 2 && col < 0; ++c)
    if (!f.is_zero(b.at(0, c)) || !f.is_zero(b.at(1, c))) col = c;
  if (col < 0) {
    out.zero_block = true;
    return out;
  }
  u[0] = b.at(0, col);
  u[1] = b.at(1, col);
  int i0 = f.is_zero(u[0]) ? 1 : 0;
  std::vector<typename F::Elem> w(2, f.zero());
  for (int c = 0; c < 2; ++c)
    w[static_cast<std::size_t>(c)] = f.div(b.at(i0, c), u[static_cast<std::size_t>(i0)]);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (!f.eq(b.at(r, c), f.mul(u[static_cast<std::size_t>(r)], w[static_cast<std::size_t>(c)])))
        throw MathError("block has rank two; the fiber is not singular");
  out.pinned1 = {f.neg(u[1]), u[0]};
  out.pinned2 = {f.neg(w[1]), w[0]};
  detail::normalize_leading_vec(f, out.pinned1);
  detail::normalize_leading_vec(f, out.pinned2);
  out.coincident = f.eq(out.pinned1[0], out.pinned2[0]) && f.eq(out.pinned1[1], out.pinned2[1]);
  return out;
}

// The two lines of a singular fiber with their contraction directions: the
// component pinned in factor one projects to a single point of the first
// complement plane, and symmetrically for factor two.
template <class F>
struct FiberComponent {
  int contracted_factor = 0;
  std::vector<typename F::Elem> pinned_kernel;   // coordinates in the kernel-line basis
  std::vector<typename F::Elem> pinned_ambient;  // coordinates in the complement space
};

template <class F>
struct FiberComponents {
  bool non_reduced = false;
  bool coincident = false;
  FiberComponent<F> one, two;
};

template <class F>
FiberComponents<F> singular_fiber_components(const F& f, const Net33<F>& net,
                                             const BasePoint33<F>& x0,
                                             const std::vector<typename F::Elem>& lambda) {
  ConicFiber<F> fib = conic_fiber(f, net, x0, lambda);
  if (fib.degenerate_fiber) throw MathError("fiber is degenerate, not a conic");
  if (!fib.is_singular_fiber) throw MathError("fiber block is nonsingular");
  RankOneSplit<F> split = split_rank_one(f, fib.block);
  FiberComponents<F> out;
  if (split.zero_block) {
    out.non_reduced = true;
    return out;
  }
  out.coincident = split.coincident;
  out.one.contracted_factor = 1;
  out.one.pinned_kernel = split.pinned1;
  out.one.pinned_ambient = detail::mat_vec(
      f, fib.basis1, split.pinned1);
  detail::normalize_leading_vec(f, out.one.pinned_ambient);
  out.two.contracted_factor = 2;
  out.two.pinned_kernel = split.pinned2;
  out.two.pinned_ambient = detail::mat_vec(f, fib.basis2, split.pinned2);
  detail::normalize_leading_vec(f, out.two.pinned_ambient);
  return out;
}

// The 3x4 structured matrix of a Net222 at its base point. Row k restricts
// the k-th pair form; the first column carries the restricted bilinear
// forms, the remaining three the point contractions, with one structural
// zero per row.
template <class F>
struct Xi222 {
  BlockStructure bs;
  std::vector<std::vector<MultiPoly<F>>> m;
};

inline const std::array<std::array<int, 3>, 4>& xi222_column_multidegrees() {
  static const std::array<std::array<int, 3>, 4> deg{
      {{1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}};
  return deg;
}

inline const std::array<std::array<int, 3>, 3>& xi222_row_multidegrees() {
  static const std::array<std::array<int, 3>, 3> deg{{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}};
  return deg;
}

template <class F>
Xi222<F> build_xi_222(const F& f, const Net222<F>& net) {
  BlockStructure bs({{"w1", 2}, {"w2", 2}, {"w3", 2}});
  Xi222<F> xi{bs, {}};
  xi.m.assign(3, std::vector<MultiPoly<F>>(4, MultiPoly<F>(bs)));
  static const int lf[3] = {0, 0, 1};
  static const int rf[3] = {1, 2, 2};
  for (int k = 0; k < 3; ++k) {
    const auto& m = net.forms[static_cast<std::size_t>(k)];
    int a = lf[k], b = rf[k];
    int pa = net.pivot[static_cast<std::size_t>(a)], pb = net.pivot[static_cast<std::size_t>(b)];
    Mat<F> bar = detail::restrict_form(f, m, pa, pb);
    auto left_fun = detail::drop_index(detail::mat_vec(f, m, net.base[static_cast<std::size_t>(b)]), pa);
    auto right_fun = detail::drop_index(detail::vec_mat(f, net.base[static_cast<std::size_t>(a)], m), pb);
    auto& row = xi.m[static_cast<std::size_t>(k)];
    row[0] = detail::bilinear_in_blocks(f, bs, a, b, bar);
    // Contraction columns: column 3 - i is the one whose source twist skips
    // factor i, so the functional free in factor a sits in column 3 - b and
    // vice versa. The column skipping the factor absent from the row's own
    // pair stays structurally zero.
    row[static_cast<std::size_t>(3 - b)] = detail::linear_in_block(f, bs, a, left_fun);
    row[static_cast<std::size_t>(3 - a)] = detail::linear_in_block(f, bs, b, right_fun);
  }
  return xi;
}

template <class F>
bool xi222_degrees_ok(const Xi222<F>& xi) {
  const auto& col = xi222_column_multidegrees();
  const auto& row = xi222_row_multidegrees();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& e = xi.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      bool structural_zero = (j == 1 + i);
      if (structural_zero) {
        if (!e.is_zero()) return false;
        continue;
      }
      if (e.is_zero()) return false;
      auto deg = e.block_multidegree();
      if (!deg) return false;
      for (int b = 0; b < 3; ++b) {
        int want = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)] -
                   row[static_cast<std::size_t>(i)][static_cast<std::size_t>(b)];
        if ((*deg)[static_cast<std::size_t>(b)] != want) return false;
      }
    }
  return true;
}

// For each two-column restriction of the structured matrix (skipping the
// bilinear first column), search for an evaluation point where the 3x2
// matrix reaches rank two. Nondegeneracy of the pair forms guarantees such
// points exist; the certificate records how many samples were needed.
struct PairRestrictionCertificates {
  std::array<bool, 3> rank_two_found{};
  std::array<int, 3> samples_used{};
};

template <class F>
PairRestrictionCertificates certify_pair_restrictions(const F& f, const Xi222<F>& xi,
                                                      Rng& rng, int max_tries = 64) {
  static const std::array<std::array<int, 2>, 3> col_pairs{{{2, 3}, {1, 3}, {1, 2}}};
  PairRestrictionCertificates out;
  int nv = xi.bs.total_vars();
  for (int k = 0; k < 3; ++k) {
    for (int t = 1; t <= max_tries && !out.rank_two_found[static_cast<std::size_t>(k)]; ++t) {
      std::vector<typename F::Elem> pt;
      for (int v = 0; v < nv; ++v) pt.push_back(f.random(rng));
      Mat<F> m(3, 2);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
          m.at(i, j) = xi.m[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(col_pairs[static_cast<std::size_t>(k)]
                                                              [static_cast<std::size_t>(j)])]
                           .evaluate(f, pt);
      if (mat_rank(f, m) == 2) {
        out.rank_two_found[static_cast<std::size_t>(k)] = true;
        out.samples_used[static_cast<std::size_t>(k)] = t;
      }
    }
  }
  return out;
}

// Scale every form of a net by a constant.
template <class F>
Net33<F> scale_net(const F& f, const Net33<F>& net, const typename F::Elem& c) {
  std::array<Mat<F>, 3> ms = net.forms;
  for (auto& m : ms)
    for (auto& x : m.a) x = f.mul(x, c);
  return Net33<F>(f, std::move(ms));
}

// Corank analysis of one member of the pencil: a singular member either has
// corank at least two, or corank one with its kernel pair annihilating the
// whole net. Both outcomes place a point on the degeneracy model.
struct PencilMemberDiagnosis {
  int corank = 0;
  bool kernel_pair_annihilates = false;
};

template <class F>
PencilMemberDiagnosis diagnose_singular_pencil_member(
    const F& f, const Net33<F>& net, const std::vector<typename F::Elem>& lambda) {
  if (lambda.size() != 3) throw MathError("pencil coordinate must have length 3");
  Mat<F> a(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      typename F::Elem v = f.zero();
      for (int i = 0; i < 3; ++i)
        v = f.add(v, f.mul(lambda[static_cast<std::size_t>(i)],
                           net.forms[static_cast<std::size_t>(i)].at(r, c)));
      a.at(r, c) = v;
    }
  PencilMemberDiagnosis out;
  out.corank = 4 - mat_rank(f, a);
  if (out.corank == 1) {
    auto right = mat_kernel(f, a);
    auto left = mat_kernel(f, mat_transpose(a));
    if (right.size() != 1 || left.size() != 1)
      throw MathError("corank-one member with kernel of the wrong size");
    out.kernel_pair_annihilates = true;
    for (const auto& m : net.forms)
      if (!f.is_zero(bilinear_eval(f, m, left[0], right[0])))
        out.kernel_pair_annihilates = false;
  }
  return out;
}

// Lift a net and base point through the canonical prime-subfield inclusion.
inline Net33<FqField> embed_net33(const FqField& src, const FqField& dst,
                                  const Net33<FqField>& net) {
  std::array<Mat<FqField>, 3> ms = net.forms;
  for (auto& m : ms)
    for (auto& x : m.a) x = embed_prime_field(src, dst, x);
  return Net33<FqField>(dst, std::move(ms));
}

inline BasePoint33<FqField> embed_base_point33(const FqField& src, const FqField& dst,
                                               const Net33<FqField>& net_dst,
                                               const BasePoint33<FqField>& x0) {
  std::vector<FqElem> v1, v2;
  for (auto x : x0.v1) v1.push_back(embed_prime_field(src, dst, x));
  for (auto x : x0.v2) v2.push_back(embed_prime_field(src, dst, x));
  return BasePoint33<FqField>(dst, net_dst, std::move(v1), std::move(v2));
}

// For a net defined over the prime subfield, the splitting of a singular
// fiber commutes with the Frobenius of the extension: the pinned points over
// lambda^(p) must be the coordinatewise Frobenius images of the pinned
// points over lambda. Normalized coordinates make the comparison exact.
inline bool frobenius_consistent_components(const FqField& ext, const Net33<FqField>& net_ext,
                                            const BasePoint33<FqField>& x0_ext,
                                            const std::vector<FqElem>& lambda) {
  std::vector<FqElem> conj;
  for (auto x : lambda) conj.push_back(ext.frobenius(x));
  auto here = singular_fiber_components(ext, net_ext, x0_ext, lambda);
  auto there = singular_fiber_components(ext, net_ext, x0_ext, conj);
  if (here.non_reduced != there.non_reduced) return false;
  if (here.non_reduced) return true;
  if (here.coincident != there.coincident) return false;
  auto matches = [&](const FiberComponent<FqField>& a, const FiberComponent<FqField>& b) {
    if (a.pinned_ambient.size() != b.pinned_ambient.size()) return false;
    for (std::size_t i = 0; i < a.pinned_ambient.size(); ++i)
      if (!ext.eq(ext.frobenius(a.pinned_ambient[i]), b.pinned_ambient[i])) return false;
    return true;
  };
  return matches(here.one, there.one) && matches(here.two, there.two);
}

}  // namespace fanorat
