#include <doctest.h>

#include "fanorat/chow.hpp"
#include "fanorat/galois.hpp"
#include "fanorat/rng.hpp"
#include "oracles.hpp"

using namespace fanorat;

TEST_CASE("product ring multiplication is commutative and truncates") {
  ProductChowRing ring({2, 3});
  auto h1 = ring.divisor({1, 0});
  auto h2 = ring.divisor({0, 1});
  CHECK(ring.mul(h1, h2) == ring.mul(h2, h1));
  // h1^3 dies in P^2, h2^4 dies in P^3
  CHECK(ring.mul(ring.pow(h1, 3), ring.one()).empty());
  CHECK(ring.pow(h2, 4).empty());
  CHECK(ring.point_coefficient(ring.mul(ring.pow(h1, 2), ring.pow(h2, 3))) == 1);
}

TEST_CASE("top intersections match the polynomial-model oracle") {
  Rng rng(53);
  std::vector<std::vector<int>> dim_sets{{2, 2}, {3, 3}, {1, 1, 1, 1}, {2, 3}, {1, 2, 2}};
  for (const auto& dims : dim_sets) {
    int r = static_cast<int>(dims.size());
    int total = 0;
    for (int d : dims) total += d;
    int k = total - 3;  // the intersection must be a threefold
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<std::vector<long long>> divisors;
      for (int j = 0; j < k; ++j) {
        std::vector<long long> d;
        for (int i = 0; i < r; ++i) d.push_back(rng.range(0, 2));
        divisors.push_back(d);
      }
      CiDegreeResult got = ci_anticanonical_degree(dims, divisors);
      long long want = oracles::ci_degree_poly_model(dims, divisors);
      CHECK(got.degree.convert_to<long long>() == want);
    }
  }
}

TEST_CASE("the six family degrees come out exactly") {
  CHECK(ci_anticanonical_degree({3, 3}, {{1, 1}, {1, 1}, {1, 1}}).degree == 20);
  CHECK(ci_anticanonical_degree({1, 1, 1, 1}, {{1, 1, 1, 1}}).degree == 24);
  CHECK(ci_anticanonical_degree({2, 2, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}).degree == 30);
  CHECK(ci_anticanonical_degree({2, 2}, {{1, 1}}).degree == 48);
  CHECK(ci_anticanonical_degree({1, 1, 1}, {}).degree == 48);
  // the remaining family lives on a blowup of the quadric, not on a product
  BlowupTriple q = curve_blowup_products(54, 12, 0);
  CHECK(cube_on_blowup(q, 1, -1) == 28);
}

TEST_CASE("anticanonical positivity flags are set for the six families") {
  for (const auto& [dims, divisors] :
       std::vector<std::pair<std::vector<int>, std::vector<std::vector<long long>>>>{
           {{3, 3}, {{1, 1}, {1, 1}, {1, 1}}},
           {{1, 1, 1, 1}, {{1, 1, 1, 1}}},
           {{2, 2, 2}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}},
           {{2, 2}, {{1, 1}}},
           {{1, 1, 1}, {}}}) {
    CiDegreeResult res = ci_anticanonical_degree(dims, divisors);
    CHECK(res.minus_k_positive);
    CHECK(res.degree > 0);
  }
  // too much divisor degree turns the flag off
  CHECK_FALSE(
      ci_anticanonical_degree({3, 3}, {{2, 2}, {1, 1}, {2, 2}}).minus_k_positive);
  // and a non-threefold intersection is rejected outright
  CHECK_THROWS_AS(ci_anticanonical_degree({3, 3}, {{1, 1}}), MathError);
}

TEST_CASE("degree-genus relation holds across the table") {
  for (const auto& t : fano_table()) {
    CHECK(t.degree == 2 * t.genus - 2);
  }
}

TEST_CASE("blowup triples expand correctly") {
  // blowup of P^3 along a twisted cubic: -K = 4H, (-K)^3 = 64, -K.C = 4*3,
  // genus 0
  BlowupTriple t = curve_blowup_products(64, 12, 0);
  CHECK(t.h3 == 64);
  CHECK(t.h2e == 0);
  CHECK(t.he2 == -12);
  CHECK(t.e3 == 2 - 12);
  // (H - E)^3 = H^3 - 3 H^2 E + 3 H E^2 - E^3
  CHECK(cube_on_blowup(t, 1, -1) == 64 - 3 * 12 + 10);
  // linearity spot-checks against a direct expansion
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    long long a = rng.range(-3, 3), b = rng.range(-3, 3);
    long long direct = a * a * a * t.h3 + 3 * a * a * b * t.h2e + 3 * a * b * b * t.he2 +
                       b * b * b * t.e3;
    CHECK(cube_on_blowup(t, a, b) == direct);
  }
}

TEST_CASE("quadric blowup numerology for the two curve cases") {
  // on the quadric: (2H - E)^3 = 2 and (3H - E)^3 = 28 for the quartic curve
  BlowupTriple t = curve_blowup_products(54, 12, 0);
  CHECK(cube_on_blowup(t, 2, -1) == 2);
  CHECK(cube_on_blowup(t, 3, -1) == 28);
}

TEST_CASE("uniform hhe products accept only the two curve types") {
  BlowupTriple line = hhe_products(15, 1);
  CHECK(line.h3 == 28);
  CHECK(line.h2e == 0);
  CHECK(line.he2 == -2);
  CHECK(line.e3 == 0);
  BlowupTriple conic = hhe_products(15, 2);
  CHECK(conic.he2 == 0);
  CHECK(conic.e3 == 1);
  CHECK_THROWS_AS(hhe_products(15, 3), MathError);
}

TEST_CASE("link ledger values for genus fifteen") {
  for (long long m : {1LL, 2LL}) {
    X44Numerology x = x44_link_numerology(15, m);
    CHECK(x.m_in_range);
    CHECK(x.anticanonical_cube == 2 * (15 - m - 3));
    CHECK(x.a_square_times_k == 2 * (15 - m - 8));
    CHECK(x.deg_b == 8 - 2 * m);
    CHECK(x.would_be_surface_degree == 7 - m);
  }
  CHECK(x44_link_numerology(15, 1).anticanonical_cube == 22);
  CHECK(x44_link_numerology(15, 2).anticanonical_cube == 20);
  CHECK_FALSE(x44_link_numerology(15, 3).m_in_range);
}

TEST_CASE("named blowup classes have the right coefficients") {
  CHECK(blowup_anticanonical_class().coeffs == std::vector<long long>{1, -1});
  CHECK(mobile_class(2).coeffs == std::vector<long long>{1, -3});
  CHECK(residual_class(2).coeffs == std::vector<long long>{1, -4});
  DivClass sum = div_add(mobile_class(1), residual_class(1));
  CHECK(sum.coeffs == std::vector<long long>{2, -5});
  CHECK(div_to_string(blowup_anticanonical_class(), {"H", "E"}) == "H - E");
}

TEST_CASE("divisor blowup triple tracks a general divisor") {
  // D = 2H on the quadric blown up along a conic: D.C = 2 deg C = 8 with
  // H the hyperplane class restricted from P^4
  BlowupTriple t = divisor_blowup_triple(16, 8, 6, 0);
  CHECK(t.h3 == 16);
  CHECK(t.h2e == 0);
  CHECK(t.he2 == -8);
  CHECK(t.e3 == 2 - 0 - 6);
}
