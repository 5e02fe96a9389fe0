#include <benchmark/benchmark.h>

#include <random>

#include "biquotient/classify.hpp"
#include "biquotient/exact_linalg.hpp"
#include "biquotient/freeness.hpp"

using namespace biquotient;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = d(rng);
  }
  return M;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  auto const n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 64; ++i) inputs.push_back(random_matrix(rng, n));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(8);

void BM_IsEffectivelyFree(benchmark::State& state) {
  auto const g = static_cast<GroupKind>(state.range(0));
  int const dim = group_rep_dimension(g);
  auto const a = parse_rep_spec(g == GroupKind::SU4 ? "phi10+phi01" : "2phi10+phi02",
                                Source::SU2xSU2, dim);
  auto const b = parse_rep_spec(g == GroupKind::SU4 ? "phi11" : "proj2:D", Source::SU2xSU2, dim);
  ActionSpec const spec{g, torus_weights(a, g), torus_weights(b, g)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_effectively_free(spec));
  }
  state.SetLabel(std::string(group_name(g)));
}
BENCHMARK(BM_IsEffectivelyFree)
    ->Arg(static_cast<int>(GroupKind::SU4))
    ->Arg(static_cast<int>(GroupKind::SO7))
    ->Arg(static_cast<int>(GroupKind::SPIN7));

void BM_Classify(benchmark::State& state) {
  auto const g = static_cast<GroupKind>(state.range(0));
  auto const s = static_cast<Source>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(g, s));
  }
  state.SetLabel(std::string(group_name(g)) + "/" + std::string(source_name(s)));
}
BENCHMARK(BM_Classify)
    ->Args({static_cast<int>(GroupKind::SPIN7), static_cast<int>(Source::SU2)})
    ->Args({static_cast<int>(GroupKind::SU4), static_cast<int>(Source::SU2xSU2)})
    ->Args({static_cast<int>(GroupKind::SPIN7), static_cast<int>(Source::SU2xSU2)})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
