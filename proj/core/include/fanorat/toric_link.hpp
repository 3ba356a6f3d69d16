#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanorat/chow.hpp"
#include "fanorat/int_matrix.hpp"
#include "fanorat/ints.hpp"
#include "fanorat/rng.hpp"

namespace fanorat {

// Factor dimensions n_1 >= ... >= n_p >= 2 > n_{p+1} = ... = n_r = 1 of a
// product of projective spaces. The source model is the blowup of the
// product at a point; the target model is a projective bundle over the
// product of the first p factors' complement spaces, blown up along q
// sections.
struct LinkDims {
  std::vector<int> n;
  int r = 0;  // number of factors
  int p = 0;  // factors of dimension >= 2
  int q = 0;  // factors of dimension 1
  int total = 0;

  explicit LinkDims(std::vector<int> dims);
};

// Unimodular change of basis between the divisor-class bases
// {H_1..H_r, E} (basis label "H,E") of the blown-up product and
// {h_1..h_p, e_{p+1}..e_r, h} (basis label "h,e,h") of the target model.
class DivisorClassMap {
 public:
  explicit DivisorClassMap(const LinkDims& dims);

  DivClass forward(const DivClass& c) const;   // from "H,E"
  DivClass backward(const DivClass& c) const;  // from "h,e,h"

  const IntMatrix& forward_matrix() const { return fwd_; }
  const IntMatrix& backward_matrix() const { return bwd_; }

 private:
  int r_ = 0, p_ = 0;
  IntMatrix fwd_, bwd_;
};

// Maps the source canonical class forward and compares with the target
// canonical class assembled independently from the projective-bundle and
// blowup formulas (relative dualizing class from the bundle rank and first
// Chern class of the summand line bundles, plus one exceptional term per
// blown-up section).
bool canonical_class_check(const LinkDims& dims);

// Verifies the three positivity bookkeeping identities under backward:
// sum h_i = H' - pE, h = H - (r-1)E, sum e_j = H - H' - qE, where
// H = sum of all H_i and H' = sum over the first p.
bool ampleness_certificate(const LinkDims& dims);

// Orbit-stratum label. Source side: "interior" (proper coincidence set I)
// or "exceptional" (directions, vanishing set I). Target side: "open",
// "sub" (fiber supported off the top summand, J = vanished corank-one
// summands), or "section" (pure on the summand opposite a dimension-one
// factor). Subsets are stored 1-based.
struct StratumLabel {
  std::string side;  // "source" | "target"
  std::string kind;  // "interior" | "exceptional" | "open" | "sub" | "section"
  std::vector<int> subset;

  std::string to_string() const;
  bool operator==(const StratumLabel&) const = default;
};

// Point-level data. Each input representative splits against the center as
// u_i = s_i v_i + w_i; the fiber summands are built from the projections
// w_i with the complement summands weighted by the split scalars s_k, so
// every summand is homogeneous of degree one in each factor and rescaling
// any representative only moves the one global fiber unit. The fiber list
// has one entry per summand, the full index set first, then the
// complements of 1..r in order.
template <class F>
struct TargetPoint {
  using Elem = typename F::Elem;
  std::vector<std::vector<Elem>> base;   // r factors; dim n_i for i <= p, dim 1 for j > p
  std::vector<std::vector<Elem>> fiber;  // r+1 summands
};

enum class ForwardStatus { ok, indeterminate };

template <class F>
struct ForwardResult {
  ForwardStatus status = ForwardStatus::indeterminate;
  TargetPoint<F> point;
};

template <class F>
struct LinkConfig {
  using Elem = typename F::Elem;
  LinkDims dims;
  const F* field = nullptr;
  std::vector<std::vector<Elem>> base_point;  // v_i, length n_i + 1
  std::vector<int> pivot;                     // first nonzero coordinate of v_i

  LinkConfig(const F& f, LinkDims d, std::vector<std::vector<Elem>> base)
      : dims(std::move(d)), field(&f), base_point(std::move(base)) {
    if (static_cast<int>(base_point.size()) != dims.r)
      throw MathError("base point needs one vector per factor");
    for (int i = 0; i < dims.r; ++i) {
      const auto& v = base_point[static_cast<std::size_t>(i)];
      if (static_cast<int>(v.size()) != dims.n[static_cast<std::size_t>(i)] + 1)
        throw MathError("base point coordinate length mismatch");
      int piv = -1;
      for (std::size_t c = 0; c < v.size(); ++c)
        if (!f.is_zero(v[c])) {
          piv = static_cast<int>(c);
          break;
        }
      if (piv < 0) throw MathError("base point coordinates must be nonzero");
      pivot.push_back(piv);
    }
  }
};

template <class F>
LinkConfig<F> make_link_config(const F& f, const LinkDims& dims) {
  std::vector<std::vector<typename F::Elem>> base;
  for (int i = 0; i < dims.r; ++i)
    base.emplace_back(static_cast<std::size_t>(dims.n[static_cast<std::size_t>(i)] + 1), f.one());
  return LinkConfig<F>(f, dims, std::move(base));
}

// Projection of u to the complement of v (the span of the standard basis
// vectors away from v's pivot coordinate): subtract the multiple of v that
// kills the pivot coordinate, then drop it. The multiple itself (u's
// coefficient on v in the split coordinates) is reported through center_coef
// when requested; together the pair determines u up to scale.
template <class F>
std::vector<typename F::Elem> project_factor(const LinkConfig<F>& cfg, int i,
                                             const std::vector<typename F::Elem>& u,
                                             typename F::Elem* center_coef = nullptr) {
  const F& f = *cfg.field;
  const auto& v = cfg.base_point[static_cast<std::size_t>(i)];
  if (u.size() != v.size()) throw MathError("factor coordinate length mismatch");
  int piv = cfg.pivot[static_cast<std::size_t>(i)];
  auto scale = f.div(u[static_cast<std::size_t>(piv)], v[static_cast<std::size_t>(piv)]);
  if (center_coef) *center_coef = scale;
  std::vector<typename F::Elem> out;
  out.reserve(u.size() - 1);
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (static_cast<int>(c) == piv) continue;
    out.push_back(f.sub(u[c], f.mul(scale, v[c])));
  }
  return out;
}

namespace detail {

template <class F>
bool vec_is_zero(const F& f, const std::vector<typename F::Elem>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

// Scale so that the first nonzero entry becomes 1; zero vectors unchanged.
template <class F>
void normalize_leading(const F& f, std::vector<typename F::Elem>& v) {
  for (const auto& x : v) {
    if (f.is_zero(x)) continue;
    auto inv = f.inv(x);
    for (auto& y : v) y = f.mul(inv, y);
    return;
  }
}

// One global unit across all summands, so the fiber stays projective while
// inter-summand ratios survive.
template <class F>
void normalize_fiber(const F& f, std::vector<std::vector<typename F::Elem>>& fiber) {
  for (const auto& s : fiber)
    for (const auto& x : s) {
      if (f.is_zero(x)) continue;
      auto inv = f.inv(x);
      for (auto& t : fiber)
        for (auto& y : t) y = f.mul(inv, y);
      return;
    }
}

template <class F>
std::vector<typename F::Elem> kron(const F& f,
                                   const std::vector<const std::vector<typename F::Elem>*>& parts,
                                   typename F::Elem scalar) {
  std::vector<typename F::Elem> out{scalar};
  for (const auto* part : parts) {
    std::vector<typename F::Elem> next(out.size() * part->size(), f.zero());
    std::size_t w = 0;
    for (const auto& a : out)
      for (const auto& b : *part) next[w++] = f.mul(a, b);
    out = std::move(next);
  }
  return out;
}

// Fiber vectors: entry 0 is the tensor over every factor's complement part,
// entry k the tensor over all factors but k weighted by the k-th center
// coefficient s_k. Every entry is then homogeneous of degree one in each
// factor's homogeneous coordinates, so the assembled fiber is projectively
// well defined up to one global unit. Dimension-one factors contribute
// scalars, higher factors contribute their coordinate vectors through a
// Kronecker product.
template <class F>
std::vector<std::vector<typename F::Elem>> fiber_summands(
    const LinkConfig<F>& cfg, const std::vector<std::vector<typename F::Elem>>& bar,
    const std::vector<typename F::Elem>& s) {
  const F& f = *cfg.field;
  const int r = cfg.dims.r;
  const int p = cfg.dims.p;
  std::vector<std::vector<typename F::Elem>> fiber;
  for (int k = 0; k <= r; ++k) {
    // k = 0 keeps every factor; k >= 1 omits factor k.
    typename F::Elem scalar = k == 0 ? f.one() : s[static_cast<std::size_t>(k - 1)];
    for (int j = p; j < r; ++j) {
      if (j + 1 == k) continue;
      scalar = f.mul(scalar, bar[static_cast<std::size_t>(j)][0]);
    }
    std::vector<const std::vector<typename F::Elem>*> parts;
    for (int i = 0; i < p; ++i) {
      if (i + 1 == k) continue;
      parts.push_back(&bar[static_cast<std::size_t>(i)]);
    }
    fiber.push_back(kron(f, parts, scalar));
  }
  return fiber;
}

}  // namespace detail

// Image of a source point off the blowup center. Indeterminate when a
// factor of dimension >= 2 coincides with the base point, or when at least
// two dimension-one factors do (the fiber tensor vanishes identically).
// The blowup center itself is rejected.
template <class F>
ForwardResult<F> point_forward(const LinkConfig<F>& cfg,
                               const std::vector<std::vector<typename F::Elem>>& u) {
  const F& f = *cfg.field;
  if (static_cast<int>(u.size()) != cfg.dims.r)
    throw MathError("source point needs one vector per factor");
  std::vector<std::vector<typename F::Elem>> bar;
  std::vector<typename F::Elem> coef;
  int zero_high = 0, zero_one = 0;
  for (int i = 0; i < cfg.dims.r; ++i) {
    const auto& rep = u[static_cast<std::size_t>(i)];
    if (detail::vec_is_zero(f, rep)) throw MathError("source coordinates must be nonzero");
    typename F::Elem s = f.zero();
    bar.push_back(project_factor(cfg, i, rep, &s));
    coef.push_back(s);
    if (detail::vec_is_zero(f, bar.back())) {
      if (i < cfg.dims.p)
        ++zero_high;
      else
        ++zero_one;
    }
  }
  if (zero_high + zero_one == cfg.dims.r)
    throw MathError("the blowup center has no image");
  ForwardResult<F> res;
  if (zero_high > 0 || zero_one >= 2) return res;  // indeterminate
  res.status = ForwardStatus::ok;
  res.point.fiber = detail::fiber_summands(cfg, bar, coef);
  detail::normalize_fiber(f, res.point.fiber);
  for (int i = 0; i < cfg.dims.p; ++i)
    detail::normalize_leading(f, bar[static_cast<std::size_t>(i)]);
  res.point.base = std::move(bar);
  return res;
}

// Image of a direction at the center (a nonzero tuple of complement
// vectors): the top fiber summand is zero, the corank-one summands carry
// the tensors. Indeterminate when a factor of dimension >= 2 vanishes or
// two or more factors vanish.
template <class F>
ForwardResult<F> exceptional_forward(const LinkConfig<F>& cfg,
                                     std::vector<std::vector<typename F::Elem>> bar) {
  const F& f = *cfg.field;
  if (static_cast<int>(bar.size()) != cfg.dims.r)
    throw MathError("direction needs one vector per factor");
  int zero_high = 0, zero_one = 0;
  for (int i = 0; i < cfg.dims.r; ++i) {
    if (static_cast<int>(bar[static_cast<std::size_t>(i)].size()) !=
        cfg.dims.n[static_cast<std::size_t>(i)])
      throw MathError("direction coordinate length mismatch");
    if (detail::vec_is_zero(f, bar[static_cast<std::size_t>(i)])) {
      if (i < cfg.dims.p)
        ++zero_high;
      else
        ++zero_one;
    }
  }
  if (zero_high + zero_one == cfg.dims.r) throw MathError("direction must be nonzero");
  ForwardResult<F> res;
  if (zero_high > 0 || zero_high + zero_one >= 2) return res;
  res.status = ForwardStatus::ok;
  // Directions live in the complement spaces, where the center coefficient
  // of every factor is zero; only the leading summands survive, with unit
  // weights since the limit is taken along the common scale.
  res.point.fiber = detail::fiber_summands(
      cfg, bar, std::vector<typename F::Elem>(static_cast<std::size_t>(cfg.dims.r), f.one()));
  for (auto& entry : res.point.fiber[0]) entry = f.zero();
  detail::normalize_fiber(f, res.point.fiber);
  for (int i = 0; i < cfg.dims.p; ++i)
    detail::normalize_leading(f, bar[static_cast<std::size_t>(i)]);
  res.point.base = std::move(bar);
  return res;
}

template <class F>
StratumLabel classify_source(const LinkConfig<F>& cfg,
                             const std::vector<std::vector<typename F::Elem>>& u) {
  const F& f = *cfg.field;
  StratumLabel lbl{"source", "interior", {}};
  for (int i = 0; i < cfg.dims.r; ++i) {
    if (detail::vec_is_zero(f, u[static_cast<std::size_t>(i)]))
      throw MathError("source coordinates must be nonzero");
    if (detail::vec_is_zero(f, project_factor(cfg, i, u[static_cast<std::size_t>(i)])))
      lbl.subset.push_back(i + 1);
  }
  if (static_cast<int>(lbl.subset.size()) == cfg.dims.r)
    throw MathError("the blowup center is not a stratum of the blown-up model");
  return lbl;
}

template <class F>
StratumLabel classify_direction(const LinkConfig<F>& cfg,
                                const std::vector<std::vector<typename F::Elem>>& bar) {
  const F& f = *cfg.field;
  StratumLabel lbl{"source", "exceptional", {}};
  for (int i = 0; i < cfg.dims.r; ++i)
    if (detail::vec_is_zero(f, bar[static_cast<std::size_t>(i)])) lbl.subset.push_back(i + 1);
  if (static_cast<int>(lbl.subset.size()) == cfg.dims.r)
    throw MathError("direction must be nonzero");
  return lbl;
}

template <class F>
StratumLabel classify_target(const LinkConfig<F>& cfg, const TargetPoint<F>& pt) {
  const F& f = *cfg.field;
  if (static_cast<int>(pt.fiber.size()) != cfg.dims.r + 1)
    throw MathError("fiber summand count mismatch");
  if (!detail::vec_is_zero(f, pt.fiber[0])) return {"target", "open", {}};
  std::vector<int> support, vanished;
  for (int k = 1; k <= cfg.dims.r; ++k) {
    if (detail::vec_is_zero(f, pt.fiber[static_cast<std::size_t>(k)]))
      vanished.push_back(k);
    else
      support.push_back(k);
  }
  if (support.empty()) throw MathError("fiber coordinates must be nonzero");
  if (support.size() == 1 && support[0] > cfg.dims.p)
    return {"target", "section", {support[0]}};
  return {"target", "sub", vanished};
}

template <class F>
std::vector<std::vector<typename F::Elem>> random_source_point(const LinkConfig<F>& cfg,
                                                               Rng& rng) {
  const F& f = *cfg.field;
  std::vector<std::vector<typename F::Elem>> u;
  for (int i = 0; i < cfg.dims.r; ++i) {
    std::vector<typename F::Elem> v(
        static_cast<std::size_t>(cfg.dims.n[static_cast<std::size_t>(i)] + 1));
    do {
      for (auto& x : v) x = f.random(rng);
    } while (detail::vec_is_zero(f, v));
    u.push_back(std::move(v));
  }
  return u;
}

struct StratumCensus {
  long long samples = 0;
  long long indeterminate = 0;
  long long violations = 0;   // codimension <= 1 correspondence failures
  long long collisions = 0;   // open-orbit image collisions from distinct sources
  std::map<std::string, long long> source_counts;
  std::map<std::string, long long> target_counts;
};

// Seeded sampling over the source: random points plus, for every factor, a
// forced batch with that factor pinned to the base point (so the
// codimension-one strata actually occur). Checks the stratum
// correspondences in codimension <= 1 and open-orbit injectivity.
template <class F>
StratumCensus stratum_census(const LinkConfig<F>& cfg, Rng& rng, long long samples) {
  const F& f = *cfg.field;
  StratumCensus census;
  std::map<std::vector<std::vector<typename F::Elem>>,
           std::vector<std::vector<typename F::Elem>>>
      seen_images;  // normalized target -> normalized source

  auto is_center = [&](const std::vector<std::vector<typename F::Elem>>& u) {
    for (int i = 0; i < cfg.dims.r; ++i)
      if (!detail::vec_is_zero(f, project_factor(cfg, i, u[static_cast<std::size_t>(i)])))
        return false;
    return true;
  };

  auto handle = [&](std::vector<std::vector<typename F::Elem>> u) {
    ++census.samples;
    StratumLabel src = classify_source(cfg, u);
    ++census.source_counts[src.to_string()];
    ForwardResult<F> fw = point_forward(cfg, u);
    if (fw.status == ForwardStatus::indeterminate) {
      ++census.indeterminate;
      bool should_be = src.subset.size() >= 2 ||
                       (src.subset.size() == 1 && src.subset[0] <= cfg.dims.p);
      if (!should_be) ++census.violations;
      return;
    }
    StratumLabel tgt = classify_target(cfg, fw.point);
    ++census.target_counts[tgt.to_string()];
    if (src.subset.empty()) {
      if (tgt.kind != "open") ++census.violations;
      std::vector<std::vector<typename F::Elem>> key = fw.point.base;
      for (const auto& s : fw.point.fiber) key.push_back(s);
      std::vector<std::vector<typename F::Elem>> norm_src;
      for (int i = 0; i < cfg.dims.r; ++i) {
        auto v = u[static_cast<std::size_t>(i)];
        detail::normalize_leading(f, v);
        norm_src.push_back(std::move(v));
      }
      auto [it, fresh] = seen_images.emplace(std::move(key), norm_src);
      if (!fresh && it->second != norm_src) ++census.collisions;
    } else if (src.subset.size() == 1 && src.subset[0] > cfg.dims.p) {
      if (tgt.kind != "section" || tgt.subset != src.subset) ++census.violations;
    }
  };

  for (long long s = 0; s < samples; ++s) {
    auto u = random_source_point(cfg, rng);
    while (is_center(u)) u = random_source_point(cfg, rng);
    handle(std::move(u));
  }
  long long forced = std::max<long long>(4, samples / 10);
  for (int i = 0; i < cfg.dims.r; ++i)
    for (long long s = 0; s < forced; ++s) {
      auto u = random_source_point(cfg, rng);
      u[static_cast<std::size_t>(i)] = cfg.base_point[static_cast<std::size_t>(i)];
      while (is_center(u)) {
        u = random_source_point(cfg, rng);
        u[static_cast<std::size_t>(i)] = cfg.base_point[static_cast<std::size_t>(i)];
      }
      handle(std::move(u));
    }

  // Generic directions land in the codimension-one target stratum with the
  // full summand gone and everything else alive.
  for (long long s = 0; s < forced; ++s) {
    std::vector<std::vector<typename F::Elem>> bar;
    for (int i = 0; i < cfg.dims.r; ++i) {
      std::vector<typename F::Elem> v(
          static_cast<std::size_t>(cfg.dims.n[static_cast<std::size_t>(i)]));
      do {
        for (auto& x : v) x = f.random(rng);
      } while (detail::vec_is_zero(f, v));
      bar.push_back(std::move(v));
    }
    StratumLabel dir = classify_direction(cfg, bar);
    ++census.samples;
    ++census.source_counts[dir.to_string()];
    ForwardResult<F> fw = exceptional_forward(cfg, bar);
    if (fw.status != ForwardStatus::ok) {
      ++census.indeterminate;
      ++census.violations;
      continue;
    }
    StratumLabel tgt = classify_target(cfg, fw.point);
    ++census.target_counts[tgt.to_string()];
    if (!(tgt.kind == "sub" && tgt.subset.empty())) ++census.violations;
  }
  return census;
}

}  // namespace fanorat
