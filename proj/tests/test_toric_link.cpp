#include <doctest.h>

#include <vector>

#include "fanorat/finite_field.hpp"
#include "fanorat/toric_link.hpp"

using namespace fanorat;

namespace {

std::vector<std::vector<int>> small_configs() {
  return {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 1, 1}, {2, 2, 1}, {4, 3, 2},
          {1, 1, 1, 1}, {2, 1, 1, 1}, {4, 4, 4, 4}};
}

template <class F>
bool points_equal(const F& f, const TargetPoint<F>& a, const TargetPoint<F>& b) {
  if (a.base.size() != b.base.size() || a.fiber.size() != b.fiber.size()) return false;
  for (std::size_t i = 0; i < a.base.size(); ++i) {
    if (a.base[i].size() != b.base[i].size()) return false;
    for (std::size_t c = 0; c < a.base[i].size(); ++c)
      if (!f.eq(a.base[i][c], b.base[i][c])) return false;
  }
  for (std::size_t k = 0; k < a.fiber.size(); ++k) {
    if (a.fiber[k].size() != b.fiber[k].size()) return false;
    for (std::size_t c = 0; c < a.fiber[k].size(); ++c)
      if (!f.eq(a.fiber[k][c], b.fiber[k][c])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("dimension lists are canonicalized and validated") {
  LinkDims d({2, 3});
  CHECK(d.n == std::vector<int>{3, 2});
  CHECK(d.r == 2);
  CHECK(d.p == 2);
  CHECK(d.q == 0);
  CHECK(d.total == 5);
  LinkDims m({1, 1, 1, 1});
  CHECK(m.p == 0);
  CHECK(m.q == 4);
  CHECK_THROWS_AS(LinkDims({3}), MathError);
  CHECK_THROWS_AS(LinkDims({2, 0}), MathError);
  CHECK_THROWS_AS(LinkDims({}), MathError);
}

TEST_CASE("class maps are mutually inverse on every small configuration") {
  for (const auto& dims_list : small_configs()) {
    LinkDims dims(dims_list);
    DivisorClassMap map(dims);
    IntMatrix fb = map.forward_matrix().mul(map.backward_matrix());
    IntMatrix bf = map.backward_matrix().mul(map.forward_matrix());
    CHECK(fb == IntMatrix::identity(dims.r + 1));
    CHECK(bf == IntMatrix::identity(dims.r + 1));
  }
}

TEST_CASE("the anticanonical image of the quadrilinear model") {
  LinkDims dims({1, 1, 1, 1});
  DivisorClassMap map(dims);
  // the member class sum H_i - E lands on 3h - 2(e_1+..+e_4)
  DivClass member{"H,E", {1, 1, 1, 1, -1}};
  DivClass img = map.forward(member);
  CHECK(img.coeffs == std::vector<long long>{-2, -2, -2, -2, 3});
  // and back
  CHECK(map.backward(img) == member);
}

TEST_CASE("canonical classes transported by the map match the target formula") {
  for (const auto& dims_list :
       std::vector<std::vector<int>>{{3, 2}, {2, 3}, {1, 1, 1, 1}, {2, 2}}) {
    CHECK(canonical_class_check(LinkDims(dims_list)));
  }
  for (const auto& dims_list : small_configs()) {
    CHECK(canonical_class_check(LinkDims(dims_list)));
    CHECK(ampleness_certificate(LinkDims(dims_list)));
  }
}

TEST_CASE("stratum labels render compactly") {
  CHECK(StratumLabel{"source", "interior", {}}.to_string() == "Y[]");
  CHECK(StratumLabel{"source", "interior", {1, 3}}.to_string() == "Y[1,3]");
  CHECK(StratumLabel{"source", "exceptional", {}}.to_string() == "E[]");
  CHECK(StratumLabel{"target", "open", {}}.to_string() == "Y+");
  CHECK(StratumLabel{"target", "sub", {2}}.to_string() == "Y+[2]");
  CHECK(StratumLabel{"target", "section", {3}}.to_string() == "E_3");
}

TEST_CASE("forward images are independent of the chosen representatives") {
  for (auto p : {5u, 7u}) {
    const FqField& f = FqField::get(p, 1);
    Rng rng(67);
    for (const auto& dims_list : small_configs()) {
      LinkConfig<FqField> cfg = make_link_config(f, LinkDims(dims_list));
      for (int trial = 0; trial < 25; ++trial) {
        auto u = random_source_point(cfg, rng);
        ForwardResult<FqField> a = point_forward(cfg, u);
        auto scaled = u;
        for (auto& rep : scaled) {
          FqElem c = f.random_nonzero(rng);
          for (auto& x : rep) x = f.mul(c, x);
        }
        ForwardResult<FqField> b = point_forward(cfg, scaled);
        CHECK(a.status == b.status);
        if (a.status == ForwardStatus::ok) CHECK(points_equal(f, a.point, b.point));
      }
    }
  }
}

TEST_CASE("the blowup center itself has no image") {
  const FqField& f = FqField::get(5, 1);
  LinkConfig<FqField> cfg = make_link_config(f, LinkDims({2, 2}));
  CHECK_THROWS_AS(point_forward(cfg, cfg.base_point), MathError);
  CHECK_THROWS_AS(classify_source(cfg, cfg.base_point), MathError);
}

TEST_CASE("points touching the center in one big factor map indeterminately") {
  const FqField& f = FqField::get(5, 1);
  LinkConfig<FqField> cfg = make_link_config(f, LinkDims({2, 2}));
  // first factor equal to the center, second generic
  std::vector<std::vector<FqElem>> u = cfg.base_point;
  u[1] = {f.from_int(1), f.from_int(2), f.from_int(3)};
  CHECK(classify_source(cfg, u).to_string() == "Y[1]");
  CHECK(point_forward(cfg, u).status == ForwardStatus::indeterminate);
}

TEST_CASE("coincidence in a single line factor maps to the section") {
  const FqField& f = FqField::get(7, 1);
  LinkConfig<FqField> cfg = make_link_config(f, LinkDims({1, 1, 1}));
  std::vector<std::vector<FqElem>> u = {
      {f.from_int(1), f.from_int(3)}, {f.from_int(1), f.from_int(1)}, {f.from_int(2), f.from_int(5)}};
  // factor 2 coincides with the center (1,1)
  CHECK(classify_source(cfg, u).to_string() == "Y[2]");
  ForwardResult<FqField> res = point_forward(cfg, u);
  REQUIRE(res.status == ForwardStatus::ok);
  CHECK(classify_target(cfg, res.point).to_string() == "E_2");
}

TEST_CASE("directions at the center land in the exceptional image") {
  const FqField& f = FqField::get(5, 1);
  LinkConfig<FqField> cfg = make_link_config(f, LinkDims({2, 1}));
  std::vector<std::vector<FqElem>> bar = {{f.from_int(1), f.from_int(2)}, {f.from_int(4)}};
  CHECK(classify_direction(cfg, bar).to_string() == "E[]");
  ForwardResult<FqField> res = exceptional_forward(cfg, bar);
  REQUIRE(res.status == ForwardStatus::ok);
  // the distinguished summand vanishes on the exceptional image
  bool top_zero = true;
  for (const auto& x : res.point.fiber[0])
    if (!f.is_zero(x)) top_zero = false;
  CHECK(top_zero);
  CHECK(classify_target(cfg, res.point).to_string() == "Y+[]");
}

TEST_CASE("stratum census finds no violations over two fields") {
  for (auto p : {5u, 7u}) {
    const FqField& f = FqField::get(p, 1);
    for (const auto& dims_list :
         std::vector<std::vector<int>>{{2, 2}, {3, 2}, {1, 1, 1, 1}, {2, 1, 1}}) {
      LinkConfig<FqField> cfg = make_link_config(f, LinkDims(dims_list));
      Rng rng(71 + p);
      StratumCensus census = stratum_census(cfg, rng, 120);
      CHECK(census.violations == 0);
      CHECK(census.collisions == 0);
      CHECK(census.samples >= 120);
      // the open stratum must actually be hit
      CHECK(census.target_counts.count("Y+"));
    }
  }
}

TEST_CASE("census works over the rationals too") {
  const RationalField& f = RationalField::get();
  LinkConfig<RationalField> cfg = make_link_config(f, LinkDims({2, 2}));
  Rng rng(73);
  StratumCensus census = stratum_census(cfg, rng, 40);
  CHECK(census.violations == 0);
  CHECK(census.collisions == 0);
}
