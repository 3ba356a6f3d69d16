// Independent reference implementations used to cross-check the library.
// These are deliberately written along different routes than the production
// code (permutation sums instead of cofactor expansion, a polynomial model
// of the intersection ring instead of the bespoke monomial map) and stay
// frozen: fix the library, never the oracle, when the two disagree.
#pragma once

#include <algorithm>
#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/linalg.hpp"
#include "fanorat/multipoly.hpp"

namespace oracles {

// All permutations of {0..n-1} with their signs, by plain lexicographic
// enumeration.
inline void all_permutations(int n, std::vector<std::pair<std::vector<int>, int>>& out) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (idx[static_cast<std::size_t>(i)] > idx[static_cast<std::size_t>(j)]) ++inversions;
    out.push_back({idx, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(idx.begin(), idx.end()));
}

// Determinant of a polynomial matrix as the full Leibniz sum.
template <class F>
fanorat::MultiPoly<F> det_leibniz(const F& f,
                                  const std::vector<std::vector<fanorat::MultiPoly<F>>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::pair<std::vector<int>, int>> perms;
  all_permutations(n, perms);
  fanorat::MultiPoly<F> acc(m[0][0].vars());
  for (const auto& [p, sign] : perms) {
    fanorat::MultiPoly<F> prod =
        fanorat::MultiPoly<F>::constant(f, m[0][0].vars(), f.one());
    for (int i = 0; i < n; ++i)
      prod = prod.mul(f, m[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                             p[static_cast<std::size_t>(i)])]);
    acc = sign > 0 ? acc.add(f, prod) : acc.sub(f, prod);
  }
  return acc;
}

// Determinant of a scalar matrix as the full Leibniz sum.
template <class F>
typename F::Elem det_leibniz_scalar(const F& f, const fanorat::Mat<F>& m) {
  int n = m.rows;
  std::vector<std::pair<std::vector<int>, int>> perms;
  all_permutations(n, perms);
  typename F::Elem acc = f.zero();
  for (const auto& [p, sign] : perms) {
    typename F::Elem prod = f.one();
    for (int i = 0; i < n; ++i) prod = f.mul(prod, m.at(i, p[static_cast<std::size_t>(i)]));
    acc = sign > 0 ? f.add(acc, prod) : f.sub(acc, prod);
  }
  return acc;
}

// Anticanonical degree of a complete intersection in a product of projective
// spaces, modeled with ordinary polynomial arithmetic: hyperplane classes
// become polynomial variables, truncation above h_i^(n_i) replaces the ring
// relations, and the degree is one coefficient of the expanded product.
inline long long ci_degree_poly_model(const std::vector<int>& dims,
                                      const std::vector<std::vector<long long>>& divisors) {
  using fanorat::BlockStructure;
  using fanorat::ExpVec;
  using fanorat::MultiPoly;
  using fanorat::RationalField;
  const RationalField& f = RationalField::get();
  int r = static_cast<int>(dims.size());
  std::vector<std::pair<std::string, int>> blocks;
  for (int i = 0; i < r; ++i) blocks.push_back({"h" + std::to_string(i), 1});
  BlockStructure bs(blocks);

  auto truncate = [&](const MultiPoly<RationalField>& p) {
    MultiPoly<RationalField> out(bs);
    for (const auto& [e, c] : p.terms()) {
      bool keep = true;
      for (int i = 0; i < r; ++i)
        if (e[static_cast<std::size_t>(i)] > dims[static_cast<std::size_t>(i)]) keep = false;
      if (keep) out.add_term(f, e, c);
    }
    return out;
  };
  auto linear = [&](const std::vector<long long>& coeffs) {
    MultiPoly<RationalField> p(bs);
    for (int i = 0; i < r; ++i) {
      ExpVec e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(i)] = 1;
      p.add_term(f, e, fanorat::Rational(coeffs[static_cast<std::size_t>(i)]));
    }
    return p;
  };

  // -K of the intersection, by adjunction on the ambient product.
  std::vector<long long> mk(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) mk[static_cast<std::size_t>(i)] = dims[static_cast<std::size_t>(i)] + 1;
  for (const auto& d : divisors)
    for (int i = 0; i < r; ++i) mk[static_cast<std::size_t>(i)] -= d[static_cast<std::size_t>(i)];

  int dim = 0;
  for (int d : dims) dim += d;
  dim -= static_cast<int>(divisors.size());

  MultiPoly<RationalField> acc = linear(mk).pow(f, dim);
  for (const auto& d : divisors) acc = acc.mul(f, linear(d));
  acc = truncate(acc);

  ExpVec top(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i)
    top[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(dims[static_cast<std::size_t>(i)]);
  fanorat::Rational c = acc.coefficient(f, top);
  return boost::multiprecision::numerator(c).convert_to<long long>();
}

}  // namespace oracles
