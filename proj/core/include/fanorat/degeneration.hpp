#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/ints.hpp"
#include "fanorat/linalg.hpp"
#include "fanorat/multipoly.hpp"

namespace fanorat {

// A form of multidegree (1,1,1,1) on a product of four projective lines.
// Coefficients are indexed by a bitmask: bit i-1 set means the monomial
// takes u_i from factor i, clear means it takes v_i. Points are coordinate
// vectors (u_1..u_4, v_1..v_4).
template <class F>
struct QuadrilinearForm {
  std::array<typename F::Elem, 16> coeff{};
};

template <class F>
QuadrilinearForm<F> quadrilinear_add(const F& f, const QuadrilinearForm<F>& a,
                                     const QuadrilinearForm<F>& b) {
  QuadrilinearForm<F> r;
  for (int s = 0; s < 16; ++s)
    r.coeff[static_cast<std::size_t>(s)] = f.add(a.coeff[static_cast<std::size_t>(s)],
                                                 b.coeff[static_cast<std::size_t>(s)]);
  return r;
}

template <class F>
QuadrilinearForm<F> quadrilinear_scale(const F& f, const typename F::Elem& c,
                                       const QuadrilinearForm<F>& a) {
  QuadrilinearForm<F> r;
  for (int s = 0; s < 16; ++s)
    r.coeff[static_cast<std::size_t>(s)] = f.mul(c, a.coeff[static_cast<std::size_t>(s)]);
  return r;
}

template <class F>
typename F::Elem quadrilinear_eval(const F& f, const QuadrilinearForm<F>& g,
                                   const std::array<typename F::Elem, 8>& pt) {
  typename F::Elem acc = f.zero();
  for (int s = 0; s < 16; ++s) {
    typename F::Elem t = g.coeff[static_cast<std::size_t>(s)];
    for (int i = 0; i < 4; ++i)
      t = f.mul(t, (s >> i) & 1 ? pt[static_cast<std::size_t>(i)]
                                : pt[static_cast<std::size_t>(4 + i)]);
    acc = f.add(acc, t);
  }
  return acc;
}

// All eight partial derivatives at a point, ordered u_1..u_4, v_1..v_4.
template <class F>
std::array<typename F::Elem, 8> quadrilinear_gradient(const F& f, const QuadrilinearForm<F>& g,
                                                      const std::array<typename F::Elem, 8>& pt) {
  std::array<typename F::Elem, 8> out;
  for (auto& x : out) x = f.zero();
  for (int s = 0; s < 16; ++s) {
    if (f.is_zero(g.coeff[static_cast<std::size_t>(s)])) continue;
    for (int i = 0; i < 4; ++i) {
      typename F::Elem t = g.coeff[static_cast<std::size_t>(s)];
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        t = f.mul(t, (s >> j) & 1 ? pt[static_cast<std::size_t>(j)]
                                  : pt[static_cast<std::size_t>(4 + j)]);
      }
      int slot = (s >> i) & 1 ? i : 4 + i;
      out[static_cast<std::size_t>(slot)] = f.add(out[static_cast<std::size_t>(slot)], t);
    }
  }
  return out;
}

// A point is admissible when no factor pair (u_i, v_i) is identically zero.
template <class F>
bool admissible_point(const F& f, const std::array<typename F::Elem, 8>& pt) {
  for (int i = 0; i < 4; ++i)
    if (f.is_zero(pt[static_cast<std::size_t>(i)]) &&
        f.is_zero(pt[static_cast<std::size_t>(4 + i)]))
      return false;
  return true;
}

template <class F>
bool is_singular_point(const F& f, const QuadrilinearForm<F>& g,
                       const std::array<typename F::Elem, 8>& pt) {
  if (!admissible_point(f, pt)) return false;
  auto grad = quadrilinear_gradient(f, g, pt);
  for (const auto& x : grad)
    if (!f.is_zero(x)) return false;
  return true;
}

// Character of the scaling torus acting one factor at a time, reduced modulo
// the diagonal: the representative has last entry zero.
struct TorusWeight {
  std::array<int, 4> w{};

  static TorusWeight canonical(std::array<int, 4> raw) {
    TorusWeight t;
    for (int i = 0; i < 4; ++i) t.w[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)] - raw[3];
    return t;
  }
  auto operator<=>(const TorusWeight&) const = default;
  std::string to_string() const;
};

// Weight of one monomial: the v-variables are the ones the torus scales, so
// the raw weight is the indicator of the complement of the mask.
TorusWeight monomial_weight(int mask);

// Masks grouped by weight. The zero weight appears with multiplicity two
// (the two extreme monomials); every other weight is simple.
std::map<TorusWeight, std::vector<int>> weight_decomposition();

// The unique torus-invariant member of the zero-weight pencil through a
// point whose coordinates are all projectively (1:1). Normalized so the
// all-u monomial has coefficient one; at the standard point this is
// u_1 u_2 u_3 u_4 - v_1 v_2 v_3 v_4.
template <class F>
QuadrilinearForm<F> invariant_divisor_through(const F& f,
                                              const std::array<typename F::Elem, 8>& y0) {
  for (int i = 0; i < 4; ++i) {
    const auto& u = y0[static_cast<std::size_t>(i)];
    const auto& v = y0[static_cast<std::size_t>(4 + i)];
    if (f.is_zero(u) || !f.eq(u, v))
      throw MathError("marked point must have every coordinate pair equal and nonzero");
  }
  typename F::Elem mu = f.one(), mv = f.one();
  for (int i = 0; i < 4; ++i) {
    mu = f.mul(mu, y0[static_cast<std::size_t>(i)]);
    mv = f.mul(mv, y0[static_cast<std::size_t>(4 + i)]);
  }
  QuadrilinearForm<F> g;
  g.coeff[15] = f.one();
  g.coeff[0] = f.neg(f.div(mu, mv));
  return g;
}

template <class F>
std::array<typename F::Elem, 8> standard_marked_point(const F& f) {
  std::array<typename F::Elem, 8> y0;
  for (auto& x : y0) x = f.one();
  return y0;
}

// Local model at an invariant singular point: constant and linear parts of
// the chart equation vanish and the quadratic part has full rank four.
template <class F>
struct OdpCertificate {
  bool constant_zero = false;
  bool linear_zero = false;
  int quadratic_rank = 0;
  MultiPoly<F> local_equation;
};

template <class F>
struct InvariantSingularPoint {
  int p = 0, q = 0;  // 1-based labels of the factors with u = 0
  std::array<typename F::Elem, 8> coords;
  OdpCertificate<F> cert;
};

namespace detail {

// Chart at the point x_{p,q}: in factors p, q set v = 1 and keep u as the
// chart variable, elsewhere set u = 1 and keep v. Chart variable i belongs
// to factor i + 1.
template <class F>
MultiPoly<F> chart_equation(const F& f, const QuadrilinearForm<F>& g, int p, int q,
                            const BlockStructure& bs) {
  MultiPoly<F> out(bs);
  for (int s = 0; s < 16; ++s) {
    if (f.is_zero(g.coeff[static_cast<std::size_t>(s)])) continue;
    ExpVec e(4, 0);
    for (int i = 0; i < 4; ++i) {
      bool in_pq = (i + 1 == p) || (i + 1 == q);
      bool takes_u = ((s >> i) & 1) != 0;
      // u contributes the chart variable inside {p, q}, the constant one
      // outside; v does the opposite.
      if (takes_u == in_pq) e[static_cast<std::size_t>(i)] = 1;
    }
    out.add_term(f, e, g.coeff[static_cast<std::size_t>(s)]);
  }
  return out;
}

template <class F>
OdpCertificate<F> certify_odp(const F& f, const MultiPoly<F>& local) {
  if (f.characteristic() == 2)
    throw MathError("rank of a quadratic part needs odd or zero characteristic");
  OdpCertificate<F> out;
  out.local_equation = local;
  ExpVec zero(4, 0);
  out.constant_zero = f.is_zero(local.coefficient(f, zero));
  out.linear_zero = true;
  for (int i = 0; i < 4; ++i) {
    ExpVec e(4, 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (!f.is_zero(local.coefficient(f, e))) out.linear_zero = false;
  }
  Mat<F> h(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      ExpVec e(4, 0);
      e[static_cast<std::size_t>(a)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(a)] + 1);
      e[static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(b)] + 1);
      typename F::Elem c = local.coefficient(f, e);
      h.at(a, b) = a == b ? f.add(c, c) : c;
    }
  out.quadratic_rank = mat_rank(f, h);
  return out;
}

}  // namespace detail

// The six invariant singular points of the invariant divisor: u = 0 in two
// factors, v = 0 in the others. Each comes with its chart equation and the
// certificate that it is an ordinary double point.
template <class F>
std::vector<InvariantSingularPoint<F>> invariant_divisor_singular_points(const F& f) {
  QuadrilinearForm<F> g = invariant_divisor_through(f, standard_marked_point(f));
  BlockStructure bs({{"c", 4}});
  std::vector<InvariantSingularPoint<F>> out;
  for (int p = 1; p <= 4; ++p)
    for (int q = p + 1; q <= 4; ++q) {
      InvariantSingularPoint<F> pt;
      pt.p = p;
      pt.q = q;
      for (int i = 0; i < 4; ++i) {
        bool in_pq = (i + 1 == p) || (i + 1 == q);
        pt.coords[static_cast<std::size_t>(i)] = in_pq ? f.zero() : f.one();
        pt.coords[static_cast<std::size_t>(4 + i)] = in_pq ? f.one() : f.zero();
      }
      if (!is_singular_point(f, g, pt.coords))
        throw MathError("expected invariant point is not singular");
      pt.cert = detail::certify_odp(f, detail::chart_equation(f, g, p, q, bs));
      out.push_back(std::move(pt));
    }
  return out;
}

// One-parameter invariant curve: factors in the first pair run as (t : 1),
// factors in the second as (1 : t). The limits at t = 0 and t = infinity are
// the invariant singular points labeled by the two pairs.
template <class F>
struct OrbitCurve {
  std::array<int, 2> first{}, second{};  // 1-based factor labels
  std::array<std::array<MultiPoly<F>, 2>, 4> param;  // per factor: (u(t), v(t))
  std::array<typename F::Elem, 8> limit_zero, limit_infinity;
  std::array<int, 2> limit_zero_label{}, limit_infinity_label{};
};

template <class F>
OrbitCurve<F> orbit_curve(const F& f, std::array<int, 2> first, std::array<int, 2> second) {
  std::array<bool, 5> seen{};
  for (int x : {first[0], first[1], second[0], second[1]}) {
    if (x < 1 || x > 4) throw MathError("factor labels must lie in 1..4");
    if (seen[static_cast<std::size_t>(x)]) throw MathError("factor labels must be distinct");
    seen[static_cast<std::size_t>(x)] = true;
  }
  OrbitCurve<F> out;
  out.first = first;
  out.second = second;
  BlockStructure bs({{"t", 1}});
  MultiPoly<F> tvar = MultiPoly<F>::variable(f, bs, 0);
  MultiPoly<F> one = MultiPoly<F>::constant(f, bs, f.one());
  for (int i = 1; i <= 4; ++i) {
    bool in_first = i == first[0] || i == first[1];
    auto& slot = out.param[static_cast<std::size_t>(i - 1)];
    slot[0] = in_first ? tvar : one;
    slot[1] = in_first ? one : tvar;
    out.limit_zero[static_cast<std::size_t>(i - 1)] = in_first ? f.zero() : f.one();
    out.limit_zero[static_cast<std::size_t>(3 + i)] = in_first ? f.one() : f.zero();
    out.limit_infinity[static_cast<std::size_t>(i - 1)] = in_first ? f.one() : f.zero();
    out.limit_infinity[static_cast<std::size_t>(3 + i)] = in_first ? f.zero() : f.one();
  }
  out.limit_zero_label = first;
  out.limit_infinity_label = second;
  return out;
}

// Pull a form back along the curve parametrization; identically zero exactly
// when the curve lies on the zero locus.
template <class F>
MultiPoly<F> restrict_to_curve(const F& f, const QuadrilinearForm<F>& g,
                               const OrbitCurve<F>& curve) {
  BlockStructure bs({{"t", 1}});
  MultiPoly<F> out(bs);
  for (int s = 0; s < 16; ++s) {
    if (f.is_zero(g.coeff[static_cast<std::size_t>(s)])) continue;
    int e = 0;
    for (int i = 0; i < 4; ++i) {
      const auto& comp = curve.param[static_cast<std::size_t>(i)][(s >> i) & 1 ? 0 : 1];
      auto deg = comp.block_multidegree();
      e += deg ? (*deg)[0] : 0;
    }
    ExpVec ev{static_cast<std::uint16_t>(e)};
    out.add_term(f, ev, g.coeff[static_cast<std::size_t>(s)]);
  }
  return out;
}

// Census of singular points of one pencil member over the extensions of the
// coefficient field up to a degree cap.
struct PencilProbeRow {
  FqElem t;
  std::vector<std::uint64_t> count_per_degree;  // index d-1
  bool smooth_member = false;
  std::vector<std::array<FqElem, 8>> base_field_points;  // degree-one census
};

struct PencilProbeReport {
  std::uint32_t p = 0;
  std::uint32_t max_degree = 0;
  std::vector<PencilProbeRow> rows;
};

// For each sampled t, counts the singular points of (invariant divisor) +
// t * (second form) over F_{p^d}, d = 1..max_degree, by exhausting the first
// two factor coordinates and solving the remaining linear conditions. The
// second form must vanish at the standard marked point and the base field
// must be prime.
PencilProbeReport pencil_smoothness_probe(const FqField& f,
                                          const QuadrilinearForm<FqField>& second,
                                          const std::vector<FqElem>& ts,
                                          std::uint32_t max_degree = 4,
                                          std::uint64_t bound = FqField::kDefaultCardinalityBound);

}  // namespace fanorat
