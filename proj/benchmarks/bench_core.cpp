#include <benchmark/benchmark.h>

#include <vector>

#include "fanorat/cohomology.hpp"
#include "fanorat/determinantal.hpp"
#include "fanorat/field_spec.hpp"
#include "fanorat/finite_field.hpp"
#include "fanorat/fixture_io.hpp"
#include "fanorat/int_matrix.hpp"
#include "fanorat/rng.hpp"
#include "fanorat/toric_link.hpp"

using namespace fanorat;

namespace {

IntMatrix seeded_matrix(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = static_cast<long long>(rng.below(19)) - 9;
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  IntMatrix m = seeded_matrix(n, n, 11);
  for (auto _ : state) {
    SnfResult r = smith_normal_form(m);
    benchmark::DoNotOptimize(r.d);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(24);

void BM_CohomologyDegreeTwo(benchmark::State& state) {
  GModule m = trivial_module(GroupTable::cyclic(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    CohomologyResult h = cohomology(m, 2);
    benchmark::DoNotOptimize(h.factors);
  }
}
BENCHMARK(BM_CohomologyDegreeTwo)->Arg(4)->Arg(6);

void BM_PermutationH1(benchmark::State& state) {
  PermGroup g(4, {perm_from_cycles(4, "(1 2 3 4)"), perm_from_cycles(4, "(1 2)")});
  GModule m = permutation_module(g);
  for (auto _ : state) {
    CohomologyResult h = cohomology(m, 1);
    benchmark::DoNotOptimize(h.factors);
  }
}
BENCHMARK(BM_PermutationH1);

void BM_DiscriminantQuartic(benchmark::State& state) {
  NetFixture fx = load_net_fixture(std::string(FANORAT_DATA_DIR) + "/fixtures/net33_f101_a.json");
  const FqField& f = finite_field_for(parse_field_spec(fx.field));
  Net33<FqField> net = net33_from_fixture(f, fx);
  for (auto _ : state) {
    PlaneQuartic<FqField> q = discriminant_quartic(f, net);
    benchmark::DoNotOptimize(q.poly);
  }
}
BENCHMARK(BM_DiscriminantQuartic);

void BM_FieldInverse(benchmark::State& state) {
  const FqField& f = FqField::get(101, 1);
  Rng rng(7);
  std::vector<FqElem> xs;
  for (int i = 0; i < 1024; ++i) xs.push_back(f.random_nonzero(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    FqElem y = f.inv(xs[i++ & 1023]);
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_FieldInverse);

void BM_StratumCensus(benchmark::State& state) {
  const FqField& f = FqField::get(5, 1);
  LinkConfig<FqField> cfg = make_link_config(f, LinkDims({2, 2}));
  for (auto _ : state) {
    Rng rng(13);
    StratumCensus c = stratum_census(cfg, rng, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c.samples);
  }
}
BENCHMARK(BM_StratumCensus)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
