#include <doctest.h>

#include <string>
#include <vector>

#include "fanorat/determinantal.hpp"
#include "fanorat/field_spec.hpp"
#include "fanorat/fixture_io.hpp"
#include "fanorat/quartic_smooth.hpp"

using namespace fanorat;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(FANORAT_DATA_DIR) + "/fixtures/" + name;
}

const FqField& fixture_field(const NetFixture& fx) {
  return finite_field_for(parse_field_spec(fx.field));
}

// All projective representatives (1,a,b), (0,1,b), (0,0,1).
std::vector<std::vector<FqElem>> projective_plane(const FqField& f) {
  std::vector<std::vector<FqElem>> pts;
  for (const auto& a : f.all_elements())
    for (const auto& b : f.all_elements()) pts.push_back({f.one(), a, b});
  for (const auto& b : f.all_elements()) pts.push_back({f.zero(), f.one(), b});
  pts.push_back({f.zero(), f.zero(), f.one()});
  return pts;
}

}  // namespace

TEST_CASE("shipped generic nets run the whole degeneracy pipeline") {
  for (const std::string name :
       {"net33_f101_a.json", "net33_f101_b.json", "net33_f101_c.json", "net33_f5.json"}) {
    CAPTURE(name);
    NetFixture fx = load_net_fixture(fixture_path(name));
    const FqField& f = fixture_field(fx);
    Net33<FqField> net = net33_from_fixture(f, fx);
    BasePoint33<FqField> x0 = base33_from_fixture(f, net, fx);

    LineDetection lines = lines_through_base_point(f, net, x0);
    CHECK(lines.left_kernel_dim == 0);
    CHECK(lines.right_kernel_dim == 0);
    CHECK_FALSE(lines.has_line);

    PlaneQuartic<FqField> quartic = discriminant_quartic(f, net);
    REQUIRE_FALSE(quartic.degenerate);
    auto qdeg = quartic.poly.block_multidegree();
    REQUIRE(qdeg.has_value());
    CHECK((*qdeg)[0] == 4);
    QuarticSmoothness sm = is_smooth_quartic(f, quartic.poly);
    CHECK(sm.smooth);

    Xi33<FqField> xi = build_xi_33(f, net, x0);
    CHECK(xi33_degrees_ok(xi));
    BidegreeSurface<FqField> xplus = xplus_equation(f, net, x0);
    REQUIRE_FALSE(xplus.degenerate);
    auto xdeg = xplus.equation.block_multidegree();
    REQUIRE(xdeg.has_value());
    CHECK((*xdeg)[0] == 2);
    CHECK((*xdeg)[1] == 2);

    // Sampled members must agree with the discriminant, singular exactly on it.
    Rng rng(17);
    int checked = 0, agree = 0;
    for (int s = 0; s < 60; ++s) {
      std::vector<FqElem> lambda(3, f.zero());
      bool zero = true;
      while (zero) {
        for (auto& x : lambda) x = f.random(rng);
        for (const auto& x : lambda)
          if (!f.is_zero(x)) zero = false;
      }
      ConicFiber<FqField> fib = conic_fiber(f, net, x0, lambda);
      if (fib.degenerate_fiber) continue;
      ++checked;
      if (fib.is_singular_fiber == f.is_zero(quartic.poly.evaluate(f, lambda))) ++agree;
    }
    CHECK(checked >= 50);
    CHECK(agree == checked);
  }
}

TEST_CASE("singular members split into two pinned components") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f5.json"));
  const FqField& f = fixture_field(fx);
  Net33<FqField> net = net33_from_fixture(f, fx);
  BasePoint33<FqField> x0 = base33_from_fixture(f, net, fx);
  PlaneQuartic<FqField> quartic = discriminant_quartic(f, net);
  REQUIRE_FALSE(quartic.degenerate);

  int splits = 0;
  for (const auto& lambda : projective_plane(f)) {
    if (!f.is_zero(quartic.poly.evaluate(f, lambda))) continue;
    ConicFiber<FqField> fib = conic_fiber(f, net, x0, lambda);
    if (fib.degenerate_fiber) continue;
    REQUIRE(fib.is_singular_fiber);
    FiberComponents<FqField> comps = singular_fiber_components(f, net, x0, lambda);
    if (comps.non_reduced) continue;
    ++splits;
    REQUIRE(comps.one.contracted_factor == 1);
    REQUIRE(comps.two.contracted_factor == 2);
    REQUIRE(comps.one.pinned_ambient.size() == 3);
    REQUIRE(comps.two.pinned_ambient.size() == 3);
    // the pinned kernel direction of component one kills the block on the
    // left, the one of component two kills it on the right
    for (int c = 0; c < 2; ++c) {
      FqElem lv = f.add(f.mul(comps.one.pinned_kernel[0], fib.block.at(0, c)),
                        f.mul(comps.one.pinned_kernel[1], fib.block.at(1, c)));
      CHECK(f.is_zero(lv));
    }
    for (int r = 0; r < 2; ++r) {
      FqElem rv = f.add(f.mul(fib.block.at(r, 0), comps.two.pinned_kernel[0]),
                        f.mul(fib.block.at(r, 1), comps.two.pinned_kernel[1]));
      CHECK(f.is_zero(rv));
    }
    // each singular member also passes the corank diagnosis
    PencilMemberDiagnosis diag = diagnose_singular_pencil_member(f, net, lambda);
    bool on_model = diag.corank >= 2 || (diag.corank == 1 && diag.kernel_pair_annihilates);
    CHECK(on_model);
  }
  CHECK(splits > 0);
}

TEST_CASE("smooth members have nonsingular corank diagnosis") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f5.json"));
  const FqField& f = fixture_field(fx);
  Net33<FqField> net = net33_from_fixture(f, fx);
  PlaneQuartic<FqField> quartic = discriminant_quartic(f, net);
  int seen = 0;
  for (const auto& lambda : projective_plane(f)) {
    if (f.is_zero(quartic.poly.evaluate(f, lambda))) continue;
    CHECK(diagnose_singular_pencil_member(f, net, lambda).corank == 0);
    if (++seen >= 12) break;
  }
  CHECK(seen == 12);
}

TEST_CASE("a line through the base point is detected and blocks the fiber map") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f101_line.json"));
  const FqField& f = fixture_field(fx);
  Net33<FqField> net = net33_from_fixture(f, fx);
  BasePoint33<FqField> x0 = base33_from_fixture(f, net, fx);
  LineDetection lines = lines_through_base_point(f, net, x0);
  CHECK(lines.has_line);
  CHECK(lines.left_kernel_dim == 1);
  CHECK(lines.right_kernel_dim == 1);
  std::vector<FqElem> lambda{f.one(), f.zero(), f.zero()};
  CHECK_THROWS_AS(conic_fiber(f, net, x0, lambda), MathError);
}

TEST_CASE("scaling the net scales the invariants predictably") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f101_a.json"));
  const FqField& f = fixture_field(fx);
  Net33<FqField> net = net33_from_fixture(f, fx);
  BasePoint33<FqField> x0 = base33_from_fixture(f, net, fx);
  FqElem c = f.from_int(7);
  Net33<FqField> scaled = scale_net(f, net, c);

  // pencil matrices scale linearly, so the quartic picks up c^4 and the
  // structured 3x3 determinant picks up c^3
  PlaneQuartic<FqField> q0 = discriminant_quartic(f, net);
  PlaneQuartic<FqField> q1 = discriminant_quartic(f, scaled);
  CHECK(q1.poly.eq(f, q0.poly.scale(f, f.pow(c, 4))));
  BidegreeSurface<FqField> s0 = xplus_equation(f, net, x0);
  BidegreeSurface<FqField> s1 = xplus_equation(f, scaled, x0);
  CHECK(s1.equation.eq(f, s0.equation.scale(f, f.pow(c, 3))));
  CHECK(lines_through_base_point(f, scaled, x0).has_line ==
        lines_through_base_point(f, net, x0).has_line);
}

TEST_CASE("prime-field nets lift coherently through an extension") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f5.json"));
  const FqField& f5 = fixture_field(fx);
  const FqField& f25 = FqField::get(5, 2);
  Net33<FqField> net5 = net33_from_fixture(f5, fx);
  BasePoint33<FqField> x05 = base33_from_fixture(f5, net5, fx);
  Net33<FqField> net25 = embed_net33(f5, f25, net5);
  BasePoint33<FqField> x025 = embed_base_point33(f5, f25, net25, x05);

  // the discriminant commutes with the field embedding
  PlaneQuartic<FqField> q5 = discriminant_quartic(f5, net5);
  PlaneQuartic<FqField> q25 = discriminant_quartic(f25, net25);
  CHECK(q25.poly.eq(f25, lift_quartic(f5, f25, q5.poly)));

  // components over the extension commute with Frobenius
  int verified = 0;
  for (const auto& lambda : projective_plane(f25)) {
    if (!f25.is_zero(q25.poly.evaluate(f25, lambda))) continue;
    try {
      if (frobenius_consistent_components(f25, net25, x025, lambda)) ++verified;
    } catch (const MathError&) {
      continue;  // degenerate or non-split member, not part of this check
    }
    if (verified >= 5) break;
  }
  CHECK(verified >= 5);
}

TEST_CASE("rank-one blocks split into their two zero lines") {
  const FqField& f = FqField::get(7, 1);
  auto make_block = [&](int u0, int u1, int w0, int w1) {
    Mat<FqField> b(2, 2);
    b.at(0, 0) = f.mul(f.from_int(u0), f.from_int(w0));
    b.at(0, 1) = f.mul(f.from_int(u0), f.from_int(w1));
    b.at(1, 0) = f.mul(f.from_int(u1), f.from_int(w0));
    b.at(1, 1) = f.mul(f.from_int(u1), f.from_int(w1));
    return b;
  };
  Mat<FqField> b = make_block(2, 3, 1, 4);
  RankOneSplit<FqField> split = split_rank_one(f, b);
  CHECK_FALSE(split.zero_block);
  CHECK_FALSE(split.coincident);
  // pinned directions annihilate the block from their side
  for (int c = 0; c < 2; ++c)
    CHECK(f.is_zero(f.add(f.mul(split.pinned1[0], b.at(0, c)),
                          f.mul(split.pinned1[1], b.at(1, c)))));
  for (int r = 0; r < 2; ++r)
    CHECK(f.is_zero(f.add(f.mul(b.at(r, 0), split.pinned2[0]),
                          f.mul(b.at(r, 1), split.pinned2[1]))));

  CHECK(split_rank_one(f, make_block(2, 3, 2, 3)).coincident);
  CHECK(split_rank_one(f, Mat<FqField>(2, 2)).zero_block);
  Mat<FqField> full = Mat<FqField>::identity(f, 2);
  CHECK_THROWS_AS(split_rank_one(f, full), MathError);
}

TEST_CASE("pair-form triples from fixtures pass the shape certificates") {
  for (const std::string name : {"net222_f101_a.json", "net222_f101_b.json"}) {
    CAPTURE(name);
    NetFixture fx = load_net_fixture(fixture_path(name));
    const FqField& f = fixture_field(fx);
    Net222<FqField> net = net222_from_fixture(f, fx);
    Xi222<FqField> xi = build_xi_222(f, net);
    CHECK(xi222_degrees_ok(xi));
    // one structural zero per row, on the shifted diagonal
    for (int i = 0; i < 3; ++i)
      CHECK(xi.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)].is_zero());
    Rng rng(23);
    PairRestrictionCertificates cert = certify_pair_restrictions(f, xi, rng);
    for (int k = 0; k < 3; ++k) {
      CHECK(cert.rank_two_found[static_cast<std::size_t>(k)]);
      CHECK(cert.samples_used[static_cast<std::size_t>(k)] >= 1);
    }
  }
}

TEST_CASE("degenerate pair forms are rejected with the culprit named") {
  NetFixture fx = load_net_fixture(fixture_path("net222_f101_a.json"));
  const FqField& f = fixture_field(fx);
  for (int k = 0; k < 3; ++k) {
    NetFixture bad = fx;
    for (auto& row : bad.forms[static_cast<std::size_t>(k)])
      for (auto& entry : row) entry = "1";  // rank-one form
    try {
      net222_from_fixture(f, bad);
      FAIL("degenerate form accepted");
    } catch (const MathError& e) {
      static const char* names[3] = {"F12", "F13", "F23"};
      CHECK(std::string(e.what()).find(names[k]) != std::string::npos);
    }
  }
}

TEST_CASE("net and base point validation rejects bad input") {
  NetFixture fx = load_net_fixture(fixture_path("net33_f101_a.json"));
  const FqField& f = fixture_field(fx);
  Net33<FqField> net = net33_from_fixture(f, fx);

  // linearly dependent forms
  std::array<Mat<FqField>, 3> dep{net.forms[0], net.forms[1], net.forms[0]};
  CHECK_THROWS_AS(Net33<FqField>(f, std::move(dep)), MathError);

  // a random point will not annihilate the net
  std::vector<FqElem> v1(4, f.one()), v2(4, f.zero());
  v2[0] = f.from_int(3);
  v2[1] = f.one();
  CHECK_THROWS_AS(BasePoint33<FqField>(f, net, v1, v2), MathError);
  std::vector<FqElem> zero(4, f.zero());
  CHECK_THROWS_AS(BasePoint33<FqField>(f, net, zero, v2), MathError);
}

TEST_CASE("fixture parsing separates usage errors from math errors") {
  CHECK_THROWS_AS(parse_net_fixture("this is not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_net_fixture("{}"), std::invalid_argument);
  CHECK_THROWS_AS(load_net_fixture(fixture_path("no_such_file.json")), std::invalid_argument);

  NetFixture fx = load_net_fixture(fixture_path("net33_f101_a.json"));
  const FqField& f = fixture_field(fx);
  NetFixture bad = fx;
  bad.forms.pop_back();
  CHECK_THROWS_AS(net33_from_fixture(f, bad), std::invalid_argument);
  NetFixture mangled = fx;
  mangled.forms[0][0][0] = "not-an-element";
  CHECK_THROWS_AS(net33_from_fixture(f, mangled), std::invalid_argument);

  // a reparsed render is identical
  NetFixture round = parse_net_fixture(render_net_fixture(fx));
  CHECK(round.field == fx.field);
  CHECK(round.forms == fx.forms);
  CHECK(round.base == fx.base);
  CHECK(round.expect == fx.expect);
}
