#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fanorat/degeneration.hpp"
#include "fanorat/field_spec.hpp"
#include "fanorat/fixture_io.hpp"
#include "fanorat/quartic_smooth.hpp"

using namespace fanorat;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(FANORAT_DATA_DIR) + "/fixtures/" + name;
}

// Homogeneous quartic in one block of three variables from (exponent, value)
// pairs, values taken through from_int.
template <class F>
MultiPoly<F> quartic_from_terms(const F& f,
                                const std::vector<std::pair<std::array<int, 3>, long long>>& ts) {
  BlockStructure bs({{"l", 3}});
  MultiPoly<F> q(bs);
  for (const auto& [e, v] : ts) {
    ExpVec ev{static_cast<std::uint16_t>(e[0]), static_cast<std::uint16_t>(e[1]),
              static_cast<std::uint16_t>(e[2])};
    q.add_term(f, ev, f.from_int(v));
  }
  return q;
}

std::string point_signature(const FqField& f, const std::array<FqElem, 8>& pt) {
  std::string s;
  for (const auto& x : pt) {
    s += f.to_string(x);
    s += "|";
  }
  return s;
}

}  // namespace

TEST_CASE("monomial weights decompose the coefficient space") {
  auto dec = weight_decomposition();
  CHECK(dec.size() == 15);
  int total = 0;
  for (const auto& [w, masks] : dec) {
    total += static_cast<int>(masks.size());
    if (w == TorusWeight{}) {
      CHECK(masks == std::vector<int>{0, 15});
    } else {
      CHECK(masks.size() == 1);
    }
    CHECK(w.w[3] == 0);  // canonical representatives kill the last entry
  }
  CHECK(total == 16);
  CHECK(monomial_weight(0).to_string() == "(0,0,0,0)");
  CHECK(monomial_weight(15).to_string() == "(0,0,0,0)");
  CHECK(monomial_weight(1).to_string() == "(-1,0,0,0)");
  CHECK(monomial_weight(14).to_string() == "(1,0,0,0)");
}

TEST_CASE("the invariant member through the marked point is the binomial") {
  const RationalField& f = RationalField::get();
  auto y0 = standard_marked_point(f);
  QuadrilinearForm<RationalField> g = invariant_divisor_through(f, y0);
  CHECK(f.eq(g.coeff[15], f.one()));
  CHECK(f.eq(g.coeff[0], f.neg(f.one())));
  for (int s = 1; s < 15; ++s) CHECK(f.is_zero(g.coeff[static_cast<std::size_t>(s)]));
  CHECK(f.is_zero(quadrilinear_eval(f, g, y0)));

  auto bad = y0;
  bad[0] = f.from_int(2);  // pair (2, 1) is not diagonal
  CHECK_THROWS_AS(invariant_divisor_through(f, bad), MathError);
  bad[0] = f.zero();
  bad[4] = f.zero();
  CHECK_THROWS_AS(invariant_divisor_through(f, bad), MathError);
}

TEST_CASE("gradients satisfy the multilinear Euler identities") {
  const FqField& f = FqField::get(7, 1);
  QuadrilinearForm<FqField> g;
  Rng rng(31);
  for (auto& c : g.coeff) c = f.random(rng);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<FqElem, 8> pt;
    for (auto& x : pt) x = f.random(rng);
    if (!admissible_point(f, pt)) continue;
    FqElem val = quadrilinear_eval(f, g, pt);
    auto grad = quadrilinear_gradient(f, g, pt);
    for (int i = 0; i < 4; ++i) {
      FqElem euler = f.add(f.mul(pt[static_cast<std::size_t>(i)], grad[static_cast<std::size_t>(i)]),
                           f.mul(pt[static_cast<std::size_t>(4 + i)],
                                 grad[static_cast<std::size_t>(4 + i)]));
      CHECK(f.eq(euler, val));
    }
  }
}

TEST_CASE("the six invariant singular points are ordinary double points") {
  auto run = [](const auto& f) {
    auto pts = invariant_divisor_singular_points(f);
    REQUIRE(pts.size() == 6);
    std::set<std::pair<int, int>> labels;
    for (const auto& pt : pts) {
      labels.insert({pt.p, pt.q});
      CHECK(pt.cert.constant_zero);
      CHECK(pt.cert.linear_zero);
      CHECK(pt.cert.quadratic_rank == 4);
      auto g = invariant_divisor_through(f, standard_marked_point(f));
      CHECK(is_singular_point(f, g, pt.coords));
    }
    CHECK(labels.size() == 6);
    for (int p = 1; p <= 4; ++p)
      for (int q = p + 1; q <= 4; ++q) CHECK(labels.count({p, q}));
  };
  run(RationalField::get());
  run(FqField::get(7, 1));
  run(FqField::get(101, 1));
}

TEST_CASE("chart equations at the double points are rank-four binomials") {
  const RationalField& f = RationalField::get();
  auto pts = invariant_divisor_singular_points(f);
  for (const auto& pt : pts) {
    const MultiPoly<RationalField>& local = pt.cert.local_equation;
    // exactly two quadratic terms: the chart pair with +1, the others with -1
    CHECK(local.terms().size() == 2);
    ExpVec plus(4, 0), minus(4, 0);
    for (int i = 1; i <= 4; ++i) {
      bool in_pq = i == pt.p || i == pt.q;
      (in_pq ? plus : minus)[static_cast<std::size_t>(i - 1)] = 1;
    }
    CHECK(f.eq(local.coefficient(f, plus), f.one()));
    CHECK(f.eq(local.coefficient(f, minus), f.neg(f.one())));
  }
}

TEST_CASE("characteristic two is rejected for the double point certificates") {
  CHECK_THROWS_AS(invariant_divisor_singular_points(FqField::get(2, 1)), MathError);
}

TEST_CASE("orbit curves live on the invariant member and join the double points") {
  const FqField& f = FqField::get(7, 1);
  QuadrilinearForm<FqField> g = invariant_divisor_through(f, standard_marked_point(f));
  auto pts = invariant_divisor_singular_points(f);
  auto find_point = [&](std::array<int, 2> label) {
    int a = std::min(label[0], label[1]), b = std::max(label[0], label[1]);
    for (const auto& pt : pts)
      if (pt.p == a && pt.q == b) return pt.coords;
    FAIL("missing invariant point");
    return pts[0].coords;
  };

  const std::array<std::array<std::array<int, 2>, 2>, 3> configs{
      {{{{1, 2}, {3, 4}}}, {{{1, 3}, {2, 4}}}, {{{1, 4}, {2, 3}}}}};
  std::multiset<std::pair<int, int>> touched;
  for (const auto& cfg : configs) {
    OrbitCurve<FqField> curve = orbit_curve(f, cfg[0], cfg[1]);
    CHECK(restrict_to_curve(f, g, curve).is_zero());
    CHECK(curve.limit_zero_label == cfg[0]);
    CHECK(curve.limit_infinity_label == cfg[1]);
    // the limits are the labeled invariant singular points
    CHECK(curve.limit_zero == find_point(cfg[0]));
    CHECK(curve.limit_infinity == find_point(cfg[1]));
    CHECK(is_singular_point(f, g, curve.limit_zero));
    CHECK(is_singular_point(f, g, curve.limit_infinity));
    touched.insert({std::min(cfg[0][0], cfg[0][1]), std::max(cfg[0][0], cfg[0][1])});
    touched.insert({std::min(cfg[1][0], cfg[1][1]), std::max(cfg[1][0], cfg[1][1])});
  }
  // together the three curves hit each double point exactly once
  CHECK(touched.size() == 6);
  for (const auto& pt : pts) CHECK(touched.count({pt.p, pt.q}) == 1);

  CHECK_THROWS_AS(orbit_curve(f, {1, 2}, {2, 3}), MathError);
  CHECK_THROWS_AS(orbit_curve(f, {0, 2}, {3, 4}), MathError);
}

TEST_CASE("curve restriction commutes with evaluation") {
  QuadrilinearFixture fx = load_quadrilinear_fixture(fixture_path("pencil_second_f7.json"));
  const FqField& f = finite_field_for(parse_field_spec(fx.field));
  QuadrilinearForm<FqField> second = quadrilinear_from_fixture(f, fx);
  OrbitCurve<FqField> curve = orbit_curve(f, {1, 3}, {2, 4});
  MultiPoly<FqField> restricted = restrict_to_curve(f, second, curve);
  for (const auto& t : f.all_elements()) {
    std::array<FqElem, 8> pt;
    for (int i = 0; i < 4; ++i) {
      pt[static_cast<std::size_t>(i)] = curve.param[static_cast<std::size_t>(i)][0].evaluate(f, {t});
      pt[static_cast<std::size_t>(4 + i)] =
          curve.param[static_cast<std::size_t>(i)][1].evaluate(f, {t});
    }
    CHECK(f.eq(restricted.evaluate(f, {t}), quadrilinear_eval(f, second, pt)));
  }
}

TEST_CASE("the pencil probe finds exactly the six double points at t = 0") {
  QuadrilinearFixture fx = load_quadrilinear_fixture(fixture_path("pencil_second_f7.json"));
  const FqField& f = finite_field_for(parse_field_spec(fx.field));
  QuadrilinearForm<FqField> second = quadrilinear_from_fixture(f, fx);
  CHECK(f.is_zero(quadrilinear_eval(f, second, standard_marked_point(f))));

  PencilProbeReport rep = pencil_smoothness_probe(f, second, {f.zero(), f.one()}, 3);
  REQUIRE(rep.rows.size() == 2);
  const PencilProbeRow& at_zero = rep.rows[0];
  CHECK(at_zero.count_per_degree == std::vector<std::uint64_t>{6, 6, 6});
  CHECK_FALSE(at_zero.smooth_member);
  REQUIRE(at_zero.base_field_points.size() == 6);

  // the six census points are exactly the invariant double points
  std::set<std::string> expected, got;
  for (const auto& pt : invariant_divisor_singular_points(f))
    expected.insert(point_signature(f, pt.coords));
  for (const auto& pt : at_zero.base_field_points) got.insert(point_signature(f, pt));
  CHECK(expected == got);

  const PencilProbeRow& at_one = rep.rows[1];
  CHECK(at_one.smooth_member);
  CHECK(at_one.count_per_degree == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("the probe rejects bad pencils and budget overruns") {
  const FqField& f = FqField::get(7, 1);
  QuadrilinearForm<FqField> skew;
  skew.coeff[3] = f.one();  // does not vanish at the marked point
  CHECK_THROWS_AS(pencil_smoothness_probe(f, skew, {f.zero()}), MathError);

  QuadrilinearForm<FqField> fine;
  fine.coeff[3] = f.one();
  fine.coeff[5] = f.from_int(-1);
  CHECK_THROWS_AS(pencil_smoothness_probe(FqField::get(7, 2), fine, {f.zero()}), MathError);
  CHECK_THROWS_AS(pencil_smoothness_probe(f, fine, {f.zero()}, 3, 100), ResourceError);
}

TEST_CASE("plane quartic preconditions are enforced") {
  const FqField& f7 = FqField::get(7, 1);
  auto fermat = quartic_from_terms(f7, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
  CHECK_NOTHROW(require_plane_quartic(f7, fermat));

  auto cubic = quartic_from_terms(f7, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}});
  CHECK_THROWS_AS(require_plane_quartic(f7, cubic), MathError);
  BlockStructure bs({{"l", 3}});
  CHECK_THROWS_AS(require_plane_quartic(f7, MultiPoly<FqField>::zero(bs)), MathError);
  const FqField& f2 = FqField::get(2, 1);
  auto even = quartic_from_terms(f2, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
  CHECK_THROWS_AS(is_smooth_quartic(f2, even), MathError);
  BlockStructure two_blocks({{"a", 2}, {"b", 1}});
  MultiPoly<FqField> wrong(two_blocks);
  ExpVec e{4, 0, 0};
  wrong.add_term(f7, e, f7.one());
  CHECK_THROWS_AS(require_plane_quartic(f7, wrong), MathError);
}

TEST_CASE("both smoothness routes agree on a smooth quartic") {
  const FqField& f = FqField::get(5, 1);
  auto fermat = quartic_from_terms(f, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
  QuarticSmoothness sm = is_smooth_quartic(f, fermat);
  CHECK(sm.smooth);
  CHECK(sm.route == "partial-span-rank");
  CHECK_FALSE(sm.witness.has_value());
  // the exhaustive route concurs on a bounded budget
  CHECK_FALSE(singular_point_search(f, fermat, 4).has_value());
}

TEST_CASE("a quartic singular only over an extension yields a degree-two witness") {
  const FqField& f = FqField::get(7, 1);
  // (l1^2 - 3 l2^2)^2 + l3^4; the inner conic factor has no root over F7
  auto q = quartic_from_terms(
      f, {{{4, 0, 0}, 1}, {{2, 2, 0}, -6}, {{0, 4, 0}, 9}, {{0, 0, 4}, 1}});
  QuarticSmoothness sm = is_smooth_quartic(f, q);
  CHECK_FALSE(sm.smooth);
  REQUIRE(sm.witness.has_value());
  CHECK(sm.witness->p == 7);
  CHECK(sm.witness->d == 2);
  REQUIRE(sm.witness->coords.size() == 3);

  // verify the witness honestly: all three partials vanish at it
  const FqField& ext = FqField::get(7, 2);
  MultiPoly<FqField> lifted = lift_quartic(f, ext, q);
  std::vector<FqElem> w;
  for (const auto& s : sm.witness->coords) w.push_back(ext.parse(s));
  bool some_nonzero = false;
  for (const auto& x : w)
    if (!ext.is_zero(x)) some_nonzero = true;
  CHECK(some_nonzero);
  for (int i = 0; i < 3; ++i)
    CHECK(ext.is_zero(lifted.partial_derivative(ext, i).evaluate(ext, w)));
}

TEST_CASE("lifting a quartic commutes with evaluation") {
  const FqField& f5 = FqField::get(5, 1);
  const FqField& f25 = FqField::get(5, 2);
  auto q = quartic_from_terms(
      f5, {{{4, 0, 0}, 2}, {{1, 2, 1}, 3}, {{0, 0, 4}, 4}, {{2, 0, 2}, 1}});
  MultiPoly<FqField> lifted = lift_quartic(f5, f25, q);
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<FqElem> pt{f5.random(rng), f5.random(rng), f5.random(rng)};
    std::vector<FqElem> up;
    for (const auto& x : pt) up.push_back(embed_prime_field(f5, f25, x));
    CHECK(f25.eq(embed_prime_field(f5, f25, q.evaluate(f5, pt)), lifted.evaluate(f25, up)));
  }
}

TEST_CASE("rational quartics reduce mod p with denominators cleared") {
  const RationalField& f = RationalField::get();
  BlockStructure bs({{"l", 3}});
  MultiPoly<FqField> expect_f5 = quartic_from_terms(
      FqField::get(5, 1), {{{4, 0, 0}, 1}, {{0, 4, 0}, 3}, {{0, 0, 4}, 2}});
  MultiPoly<RationalField> q(bs);
  ExpVec e1{4, 0, 0}, e2{0, 4, 0}, e3{0, 0, 4};
  q.add_term(f, e1, Rational(1) / 2);
  q.add_term(f, e2, Rational(3) / 2);
  q.add_term(f, e3, Rational(1));
  MultiPoly<FqField> red = reduce_quartic_mod_p(q, FqField::get(5, 1));
  CHECK(red.eq(FqField::get(5, 1), expect_f5));

  CHECK_THROWS_AS(reduce_quartic_mod_p(q, FqField::get(2, 1)), MathError);
  CHECK_THROWS_AS(reduce_quartic_mod_p(q, FqField::get(5, 2)), MathError);
  CHECK_THROWS_AS(reduce_quartic_mod_p(MultiPoly<RationalField>::zero(bs), FqField::get(5, 1)),
                  MathError);
}

TEST_CASE("rational smoothness verdicts carry reduction witnesses") {
  const RationalField& f = RationalField::get();
  auto fermat = quartic_from_terms(f, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
  CHECK(is_smooth_quartic(f, fermat).smooth);

  auto singular = quartic_from_terms(
      f, {{{4, 0, 0}, 1}, {{2, 2, 0}, -6}, {{0, 4, 0}, 9}, {{0, 0, 4}, 1}});
  QuarticSmoothness sm = is_smooth_quartic(f, singular);
  CHECK_FALSE(sm.smooth);
  REQUIRE(sm.witness.has_value());
  CHECK(sm.witness->p == 3);
  CHECK(sm.note.find("reduction") != std::string::npos);
}
