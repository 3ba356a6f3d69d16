#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fanorat/galois.hpp"
#include "fanorat/rng.hpp"

using namespace fanorat;

TEST_CASE("permutation composition, inverse, and cycle notation round-trip") {
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    Perm a = perm_identity(n), b = perm_identity(n);
    for (int i = n - 1; i > 0; --i) {
      std::swap(a[static_cast<std::size_t>(i)], a[rng.below(static_cast<std::uint64_t>(i + 1))]);
      std::swap(b[static_cast<std::size_t>(i)], b[rng.below(static_cast<std::uint64_t>(i + 1))]);
    }
    CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(n));
    CHECK(perm_compose(perm_inverse(a), a) == perm_identity(n));
    CHECK(perm_from_cycles(n, perm_to_cycles(a)) == a);
    // composition is associative
    Perm c = perm_compose(a, b);
    CHECK(perm_compose(perm_compose(a, b), perm_inverse(b)) == a);
    CHECK(static_cast<int>(c.size()) == n);
  }
  CHECK_THROWS_AS(perm_from_cycles(3, "(1 4)"), MathError);
  CHECK_THROWS_AS(perm_from_cycles(3, "(1 1)"), MathError);
  CHECK_THROWS_AS(perm_from_cycles(3, "(1 2"), MathError);
}

TEST_CASE("groups generated by standard generators have the right order") {
  auto order_of = [](int n, const std::vector<std::string>& gens) {
    std::vector<Perm> ps;
    for (const auto& g : gens) ps.push_back(perm_from_cycles(n, g));
    return PermGroup(n, ps).order();
  };
  CHECK(order_of(4, {}) == 1);
  CHECK(order_of(4, {"(1 2)"}) == 2);
  CHECK(order_of(4, {"(1 2 3)"}) == 3);
  CHECK(order_of(4, {"(1 2 3 4)"}) == 4);
  CHECK(order_of(4, {"(1 2)(3 4)", "(1 3)(2 4)"}) == 4);
  CHECK(order_of(4, {"(1 2 3 4)", "(1 3)"}) == 8);
  CHECK(order_of(4, {"(1 2 3)", "(1 2)(3 4)"}) == 12);
  CHECK(order_of(4, {"(1 2)", "(1 2 3 4)"}) == 24);
  CHECK(order_of(5, {"(1 2 3 4 5)", "(1 2)"}) == 120);
}

TEST_CASE("the symmetric group on four letters has thirty subgroups") {
  auto subs = all_subgroups_s4();
  CHECK(subs.size() == 30);
  std::map<int, int> by_order;
  for (const auto& g : subs) ++by_order[static_cast<int>(g.order())];
  // 1, 9, 4, 7, 4, 3, 1, 1 subgroups of orders 1,2,3,4,6,8,12,24
  CHECK(by_order[1] == 1);
  CHECK(by_order[2] == 9);
  CHECK(by_order[3] == 4);
  CHECK(by_order[4] == 7);
  CHECK(by_order[6] == 4);
  CHECK(by_order[8] == 3);
  CHECK(by_order[12] == 1);
  CHECK(by_order[24] == 1);
  // each actually is a subgroup: closed under composition
  for (const auto& g : subs) {
    const auto& els = g.elements();
    for (const auto& a : els)
      for (const auto& b : els) CHECK(g.contains(perm_compose(a, b)));
  }
}

TEST_CASE("transitivity and invariant rank") {
  PermGroup c4(4, {perm_from_cycles(4, "(1 2 3 4)")});
  CHECK(c4.is_transitive());
  CHECK(invariant_rank(c4) == 1);
  PermGroup c2(4, {perm_from_cycles(4, "(1 2)")});
  CHECK_FALSE(c2.is_transitive());
  CHECK(invariant_rank(c2) == 3);
  PermGroup trivial(3, {});
  CHECK(invariant_rank(trivial) == 3);
  PermGroup v4(4, {perm_from_cycles(4, "(1 2)(3 4)"), perm_from_cycles(4, "(1 3)(2 4)")});
  CHECK(invariant_rank(v4) == 1);
  // invariant rank equals the orbit count
  CHECK(static_cast<int>(c2.orbits().size()) == 3);
  CHECK(static_cast<int>(v4.orbits().size()) == 1);
}

TEST_CASE("the five transitive classes inside the symmetric group are recognized") {
  auto mk = [](const std::vector<std::string>& gens) {
    std::vector<Perm> ps;
    for (const auto& g : gens) ps.push_back(perm_from_cycles(4, g));
    return PermGroup(4, ps);
  };
  CHECK(classify_transitive_s4(mk({"(1 2 3 4)"})) == "C4");
  CHECK(classify_transitive_s4(mk({"(1 2)(3 4)", "(1 3)(2 4)"})) == "V4");
  CHECK(classify_transitive_s4(mk({"(1 2 3 4)", "(1 3)"})) == "D4");
  CHECK(classify_transitive_s4(mk({"(1 2 3)", "(1 2)(3 4)"})) == "A4");
  CHECK(classify_transitive_s4(mk({"(1 2)", "(1 2 3 4)"})) == "S4");
  CHECK_THROWS_AS(classify_transitive_s4(mk({"(1 2)"})), MathError);
  CHECK(contains_klein(mk({"(1 2)(3 4)", "(1 3)(2 4)"})));
  CHECK(contains_klein(mk({"(1 2 3)", "(1 2)(3 4)"})));
  CHECK_FALSE(contains_klein(mk({"(1 2 3 4)"})));
}

TEST_CASE("cycle type census matches the conjugacy class sizes") {
  PermGroup s4(4, {perm_from_cycles(4, "(1 2)"), perm_from_cycles(4, "(1 2 3 4)")});
  auto census = s4.cycle_type_census();
  REQUIRE(census.size() == 24);
  std::map<std::vector<int>, int> counts;
  for (auto type : census) {
    std::sort(type.begin(), type.end());
    ++counts[type];
  }
  CHECK(counts[{1, 1, 1, 1}] == 1);
  CHECK(counts[{1, 1, 2}] == 6);
  CHECK(counts[{1, 3}] == 8);
  CHECK(counts[{2, 2}] == 3);
  CHECK(counts[{4}] == 6);
}

TEST_CASE("family table stores the published invariants") {
  const auto& table = fano_table();
  REQUIRE(table.size() == 6);
  auto get = [&](FanoTag t) { return fano_type(t); };
  CHECK(get(FanoTag::x33).degree == 20);
  CHECK(get(FanoTag::x33).rho_bar == 2);
  CHECK(get(FanoTag::x33).index == 1);
  CHECK(get(FanoTag::x33).h12 == 3);
  CHECK(get(FanoTag::x1111).degree == 24);
  CHECK(get(FanoTag::x1111).rho_bar == 4);
  CHECK(get(FanoTag::x1111).h12 == 1);
  CHECK(get(FanoTag::x44).degree == 28);
  CHECK(get(FanoTag::x44).genus == 15);
  CHECK(get(FanoTag::x222).degree == 30);
  CHECK(get(FanoTag::x222).rho_bar == 3);
  CHECK(get(FanoTag::x22).degree == 48);
  CHECK(get(FanoTag::x22).index == 2);
  CHECK(get(FanoTag::x111).degree == 48);
  CHECK(get(FanoTag::x111).index == 2);
  for (const auto& t : table) CHECK(t.genus == t.degree / 2 + 1);
}

TEST_CASE("family tags parse with or without parentheses") {
  CHECK(parse_fano_tag("(3,3)") == FanoTag::x33);
  CHECK(parse_fano_tag("3,3") == FanoTag::x33);
  CHECK(parse_fano_tag("(1,1,1,1)") == FanoTag::x1111);
  CHECK(parse_fano_tag(" (2,2,2) ") == FanoTag::x222);
  CHECK_THROWS_AS(parse_fano_tag("(5,5)"), MathError);
  CHECK_THROWS_AS(parse_fano_tag(""), MathError);
}

TEST_CASE("all twelve verdict combinations") {
  auto v = [](FanoTag tag, bool pt) { return verdict(fano_type(tag), pt); };
  // no rational point: nothing is even unirational
  for (FanoTag tag : {FanoTag::x33, FanoTag::x1111, FanoTag::x44, FanoTag::x222,
                      FanoTag::x22, FanoTag::x111}) {
    Verdict w = v(tag, false);
    CHECK_FALSE(w.unirational);
    CHECK(w.rational == TriState::no);
    CHECK(w.reason == "no_rational_point");
  }
  // with a point, four families become rational
  for (FanoTag tag : {FanoTag::x44, FanoTag::x222, FanoTag::x22, FanoTag::x111}) {
    Verdict w = v(tag, true);
    CHECK(w.unirational);
    CHECK(w.rational == TriState::yes);
    CHECK(w.reason == "rational_iff_point");
  }
  // the genus-eleven family is unirational but never rational
  Verdict x33 = v(FanoTag::x33, true);
  CHECK(x33.unirational);
  CHECK(x33.rational == TriState::no);
  CHECK(x33.reason == "never_rational");
  // and the quadrilinear family stays open
  Verdict x1111 = v(FanoTag::x1111, true);
  CHECK(x1111.unirational);
  CHECK(x1111.rational == TriState::open);
  CHECK(x1111.reason == "irrationality_conjectural");
}

TEST_CASE("tri-state names") {
  CHECK(std::string(tristate_name(TriState::yes)) == "yes");
  CHECK(std::string(tristate_name(TriState::no)) == "no");
  CHECK(std::string(tristate_name(TriState::open)) == "open");
}

TEST_CASE("hilbert component counts exist only in index one") {
  HilbertCounts c222 = hilbert_component_counts(fano_type(FanoTag::x222));
  CHECK(c222.lines_components == 3);
  CHECK(c222.conics_components == 3);
  CHECK(c222.cubics_through_point_components == 1);
  HilbertCounts c44 = hilbert_component_counts(fano_type(FanoTag::x44));
  CHECK(c44.lines_components == 2);
  CHECK(c44.conics_components == 1);
  CHECK(c44.cubics_through_point_components == 2);
  HilbertCounts c33 = hilbert_component_counts(fano_type(FanoTag::x33));
  CHECK(c33.conics_components == 1);
  CHECK(c33.cubics_through_point_components == 2);
  HilbertCounts c1111 = hilbert_component_counts(fano_type(FanoTag::x1111));
  CHECK(c1111.lines_components == 4);
  CHECK(c1111.conics_components == 6);
  CHECK(c1111.cubics_through_point_components == 8);
  CHECK_THROWS_AS(hilbert_component_counts(fano_type(FanoTag::x22)), MathError);
  CHECK_THROWS_AS(hilbert_component_counts(fano_type(FanoTag::x111)), MathError);
}

TEST_CASE("lines through a point count the picard generators when present") {
  CHECK(lines_through_point_length(fano_type(FanoTag::x33), true) == 2);
  CHECK(lines_through_point_length(fano_type(FanoTag::x33), false) == 0);
  CHECK(lines_through_point_length(fano_type(FanoTag::x1111), true) == 4);
  CHECK_THROWS_AS(lines_through_point_length(fano_type(FanoTag::x22), true), MathError);
}
