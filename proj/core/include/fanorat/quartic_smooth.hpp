#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/ints.hpp"
#include "fanorat/linalg.hpp"
#include "fanorat/multipoly.hpp"

namespace fanorat {

// A common zero of the three partials of a plane quartic, found over an
// extension of degree d of the prime field of size p. Coordinates are
// printable field elements of that extension.
struct SingularWitness {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::vector<std::string> coords;
};

struct QuarticSmoothness {
  bool smooth = false;
  std::string route;
  std::optional<SingularWitness> witness;
  std::string note;
};

inline constexpr int kDegree7MonomialCount = 36;

// Rejects anything that is not a homogeneous quartic in one block of three
// variables, and any even-characteristic field: in characteristic two the
// quartic is not recovered from its partials and rank arguments break down.
template <class F>
void require_plane_quartic(const F& f, const MultiPoly<F>& q) {
  const BlockStructure& bs = q.vars();
  if (bs.block_count() != 1 || bs.block_size(0) != 3)
    throw MathError("plane quartic must live in one block of three variables");
  if (q.is_zero()) throw MathError("plane quartic must be nonzero");
  auto deg = q.block_multidegree();
  if (!deg || (*deg)[0] != 4)
    throw MathError("plane quartic must be homogeneous of degree four");
  if (f.characteristic() == 2)
    throw MathError("smoothness analysis needs odd or zero characteristic");
}

// Rank of the span of the 45 products (degree-three partial) * (degree-four
// monomial) inside the 36-dimensional space of degree-seven forms. Full rank
// is equivalent to the three partials having no common projective zero over
// any extension: degree seven is past the top of the regular-sequence
// obstruction, where the ideal of the partials is everything exactly when
// the partials never vanish together.
template <class F>
int partial_span_rank_degree7(const F& f, const MultiPoly<F>& q) {
  std::map<std::array<int, 3>, int> col;
  int n = 0;
  for (int e0 = 7; e0 >= 0; --e0)
    for (int e1 = 7 - e0; e1 >= 0; --e1) col[{e0, e1, 7 - e0 - e1}] = n++;
  if (n != kDegree7MonomialCount) throw MathError("degree-seven monomial count is off");
  std::vector<std::array<int, 3>> mono4;
  for (int e0 = 4; e0 >= 0; --e0)
    for (int e1 = 4 - e0; e1 >= 0; --e1) mono4.push_back({e0, e1, 4 - e0 - e1});
  Mat<F> m(static_cast<int>(3 * mono4.size()), kDegree7MonomialCount);
  int row = 0;
  for (int i = 0; i < 3; ++i) {
    MultiPoly<F> pi = q.partial_derivative(f, i);
    for (const auto& alpha : mono4) {
      for (const auto& [e, c] : pi.terms()) {
        std::array<int, 3> target{alpha[0] + e[0], alpha[1] + e[1], alpha[2] + e[2]};
        m.at(row, col.at(target)) = c;
      }
      ++row;
    }
  }
  return mat_rank(f, m);
}

// Exhaustive search for a common zero of the partials over the extensions
// F_{p^d}, d = 1..max_degree, within the table cardinality bound. The base
// field must be prime. Any singular closed point of a quartic has degree at
// most nine, so a search through degree nine is complete whenever the bound
// allows it. Deterministic: extensions in increasing degree, shadow points
// in index order.
std::optional<SingularWitness> singular_point_search(
    const FqField& base, const MultiPoly<FqField>& q, std::uint32_t max_degree = 9,
    std::uint64_t bound = FqField::kDefaultCardinalityBound);

// Clears denominators and the integer content, then reduces mod p. The
// result is never zero: after content division the integer coefficients are
// coprime. Requires an odd prime table of degree one.
MultiPoly<FqField> reduce_quartic_mod_p(const MultiPoly<RationalField>& q, const FqField& k);

// Smoothness of a plane quartic, decided by the partial-span rank over the
// coefficient field itself. Over a prime finite field a singular verdict is
// accompanied by an explicit witness from the exhaustive search; over the
// rationals the witness comes from a reduction at a small odd prime, where
// the vanishing of the same rank certificate persists.
QuarticSmoothness is_smooth_quartic(const FqField& f, const MultiPoly<FqField>& q);
QuarticSmoothness is_smooth_quartic(const RationalField& f, const MultiPoly<RationalField>& q);

// Lift a quartic over a prime field into an extension, coefficientwise.
MultiPoly<FqField> lift_quartic(const FqField& src, const FqField& dst,
                                const MultiPoly<FqField>& q);

}  // namespace fanorat
