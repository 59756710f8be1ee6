#include "subdirect/abelattice.hpp"
#include "subdirect/magnus.hpp"
#include "subdirect/secgroups.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace subdirect {
namespace {

void BM_EtaIteratedCommutator(benchmark::State& state) {
  int const m = static_cast<int>(state.range(0));
  Word const g = example44_element(m);
  for (auto _ : state) benchmark::DoNotOptimize(eta_gamma(g, m + 1));
  state.counters["letters"] = static_cast<double>(g.length());
}
BENCHMARK(BM_EtaIteratedCommutator)->DenseRange(1, 5);

void BM_SeriesMul(benchmark::State& state) {
  int const trunc = static_cast<int>(state.range(0));
  Word const u = parse_word("y z^-1 x y^2 w z", gamma_alphabet());
  Word const v = parse_word("[y, z x^-1] w^-1 z^3", gamma_alphabet());
  Series const a = eta_gamma(u, trunc);
  Series const b = eta_gamma(v, trunc);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->DenseRange(2, 8, 2);

void BM_SmithNormalForm(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = entry(rng);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_SecGenerators(benchmark::State& state) {
  std::vector<Coordinate> points;
  for (int n = 1; n <= state.range(0); ++n) points.push_back(n);
  SecSpec const spec(points, 4);
  for (auto _ : state) benchmark::DoNotOptimize(sec_generators(spec));
}
BENCHMARK(BM_SecGenerators)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
}  // namespace subdirect

BENCHMARK_MAIN();
