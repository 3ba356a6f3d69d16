#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanorat/ints.hpp"

namespace fanorat {

// Divisor class written in a named basis, e.g. basis "H,E" with coefficients
// (1, -2) for H - 2E. Operations refuse to mix bases.
struct DivClass {
  std::string basis;
  std::vector<long long> coeffs;

  bool operator==(const DivClass&) const = default;
};

DivClass div_add(const DivClass& a, const DivClass& b);
DivClass div_scale(long long c, const DivClass& a);
std::string div_to_string(const DivClass& a, const std::vector<std::string>& names);

// Chow ring of P^{n_1} x ... x P^{n_r}: polynomials in the hyperplane
// pullbacks H_1..H_r truncated by H_i^{n_i + 1} = 0. Elements are kept
// reduced; terms that meet the truncation are dropped on sight.
class ProductChowRing {
 public:
  using Elt = std::map<std::vector<int>, Int>;

  explicit ProductChowRing(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int factors() const { return static_cast<int>(dims_.size()); }
  int top_degree() const { return top_degree_; }

  Elt one() const;
  // Degree-one element sum_i coeffs[i] * H_i.
  Elt divisor(const std::vector<long long>& coeffs) const;
  Elt add(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, int e) const;

  // Coefficient of the point class H_1^{n_1} ... H_r^{n_r}.
  Int point_coefficient(const Elt& a) const;

  // Product of degree-one classes, which must number exactly sum(n_i); the
  // result is the coefficient of the point class.
  Int top_intersection(const std::vector<DivClass>& classes) const;

 private:
  std::vector<int> dims_;
  int top_degree_ = 0;
};

// Anticanonical degree of a three-dimensional complete intersection of the
// given multidegrees in a product of projective spaces. The anticanonical
// class is computed by adjunction; its coefficient vector is reported along
// with whether every coefficient is positive (the computation proceeds
// either way).
struct CiDegreeResult {
  Int degree;
  std::vector<long long> minus_k;  // coefficients over H_1..H_r
  bool minus_k_positive = true;
};

CiDegreeResult ci_anticanonical_degree(const std::vector<int>& dims,
                                       const std::vector<std::vector<long long>>& divisors);

// Triple products on a blowup along a curve, recorded for a divisor class H
// and the exceptional divisor E.
struct BlowupTriple {
  long long h3 = 0;   // H^3
  long long h2e = 0;  // H^2 E
  long long he2 = 0;  // H E^2
  long long e3 = 0;   // E^3

  bool operator==(const BlowupTriple&) const = default;
};

// Triple products of (pullback of D, E) on the blowup of a smooth threefold
// Y along a smooth curve C of genus g: D^3 unchanged, D^2 E = 0,
// D E^2 = -(D.C), E^3 = 2 - 2g - (-K_Y.C).
BlowupTriple divisor_blowup_triple(long long d_cubed, long long d_dot_c,
                                   long long minus_k_dot_c, long long genus_c);

// Specialization tracking the anticanonical pullback itself (D = -K_Y).
BlowupTriple curve_blowup_products(long long minus_k_cubed, long long minus_k_dot_c,
                                   long long genus_c);

// The uniform triple (2g - 2, 0, 2(m - 2), m - 1) for the two curve cases
// m = 1 (line) and m = 2 (conic); other m is rejected.
BlowupTriple hhe_products(long long g, long long m);

// (aH + bE)^3 expanded through the recorded triple products.
long long cube_on_blowup(const BlowupTriple& t, long long a, long long b);

// Intersection numerology of the degree-(2g-2) link with a curve of type m:
// anticanonical cube 2(g-m-3), the square-against-canonical value 2(g-m-8),
// the candidate surface self-intersection 7-m, and the residual curve degree
// 8-2m. Values outside m in {1, 2} are computed but flagged.
struct X44Numerology {
  long long anticanonical_cube = 0;
  long long a_square_times_k = 0;
  long long would_be_surface_degree = 0;
  long long deg_b = 0;
  bool m_in_range = true;
};

X44Numerology x44_link_numerology(long long g, long long m);

// Named classes on the blowup, basis "H,E".
DivClass blowup_anticanonical_class();           // H - E
DivClass mobile_class(long long m);              // H - (m+1)E
DivClass residual_class(long long m);            // H - (m+2)E

}  // namespace fanorat
