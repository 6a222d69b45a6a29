#include <random>

#include <benchmark/benchmark.h>

#include "hecke/hecke_nested.hpp"
#include "hecke/hecke_simple.hpp"
#include "hecke/tower.hpp"

namespace {

hecke::SimpleElement dense(int m, std::mt19937_64& rng) {
  hecke::SimpleElement h(m);
  for (auto& z : h.mutable_coeffs())
    z = hecke::PolyZ{static_cast<int>(rng() % 19) - 9, static_cast<int>(rng() % 19) - 9,
                     static_cast<int>(rng() % 19) - 9};
  return h;
}

void BM_SimpleMultiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto h = dense(m, rng), g = dense(m, rng);
  hecke::generator_tables(m);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::simple_multiply(h, g));
}
BENCHMARK(BM_SimpleMultiply)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_NestedMultiply(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const auto h = hecke::simple_to_nested(dense(m, rng)), g = hecke::simple_to_nested(dense(m, rng));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::nested_multiply(h, g));
}
BENCHMARK(BM_NestedMultiply)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MultByCoset(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const auto h = hecke::simple_to_nested(dense(m, rng));
  for (auto _ : state) {
    hecke::RingCtx ctx;
    benchmark::DoNotOptimize(hecke::mult_by_coset(h, m, m, ctx));
  }
}
BENCHMARK(BM_MultByCoset)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_TowerProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<hecke::Tower> towers;
  for (int i = 0; i < 64; ++i) towers.push_back(hecke::unrank(rng() % hecke::factorial(n), n - 1));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hecke::tower_product(towers[i % 64], towers[(i + 1) % 64]));
    ++i;
  }
}
BENCHMARK(BM_TowerProduct)->Arg(4)->Arg(8)->Arg(12);

void BM_TowerInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const hecke::Tower t = hecke::unrank(hecke::factorial(n) - 1, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(hecke::tower_inverse(t));
}
BENCHMARK(BM_TowerInverse)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
