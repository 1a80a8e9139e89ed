// Timings for the enumeration kernels and the exact-arithmetic hot spots.
#include <benchmark/benchmark.h>

#include "blocklab/catalog.hpp"
#include "blocklab/isometry.hpp"
#include "blocklab/prime_ideal.hpp"
#include "blocklab/qci.hpp"
#include "blocklab/verify.hpp"

using namespace blocklab;

static void BM_CyclotomicMul(benchmark::State& state) {
  Cyclotomic a = Cyclotomic::root_of_unity(36, 5) + Cyclotomic::root_of_unity(36, 11);
  Cyclotomic b = Cyclotomic::root_of_unity(36, 7).scaled(mpq_class(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul);

static void BM_Valuation(benchmark::State& state) {
  PrimeIdeal prime(3, 12);
  Cyclotomic x = (Cyclotomic::one(12) - Cyclotomic::root_of_unity(12, 4)).pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(prime.valuation(x));
}
BENCHMARK(BM_Valuation);

static void BM_CharacterTable72(benchmark::State& state) {
  BlockSpec spec = catalog_spec("q8_c3c3");
  BlockGroup bg = build_block_group(spec);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(bg.g));
}
BENCHMARK(BM_CharacterTable72);

static void BM_BlockCharacters(benchmark::State& state) {
  BlockSpec spec = catalog_spec("q8_c3c3");
  for (auto _ : state) benchmark::DoNotOptimize(compute_block(spec));
}
BENCHMARK(BM_BlockCharacters);

static void BM_SelfIsometries(benchmark::State& state) {
  BlockSpec spec = catalog_spec("q8_c3c3");
  BlockData data = compute_block(spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_self_isometries(data, 6, 2));
}
BENCHMARK(BM_SelfIsometries)->Unit(benchmark::kMillisecond);

static void BM_QciMultiply(benchmark::State& state) {
  BlockSpec spec = catalog_spec("q8_c9c9");
  BlockData data = compute_block(spec);
  QMatrixData q = compute_q_matrix(data);
  QciAlgebra a(3, 1, q, QciMode::strict);
  uint64_t seed = 42;
  auto x = random_qci_element(a, seed);
  auto y = random_qci_element(a, seed);
  for (auto _ : state) benchmark::DoNotOptimize(a.mul(x, y));
}
BENCHMARK(BM_QciMultiply);

static void BM_RadicalPower(benchmark::State& state) {
  AbelianPGroup p(3, {2, 1});
  for (auto _ : state) {
    uint64_t seed = 7;
    radical_power_suite(p, 10, seed);
  }
}
BENCHMARK(BM_RadicalPower)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
