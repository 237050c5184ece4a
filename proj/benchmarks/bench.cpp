#include <benchmark/benchmark.h>

#include <random>

#include "sda/casesearch.hpp"
#include "sda/code.hpp"
#include "sda/lowweight.hpp"
#include "sda/modfield.hpp"

namespace {

sda::BitMatrix random_matrix(std::size_t rows, std::size_t cols,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  sda::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c, true);
  return m;
}

void BM_rref_120(benchmark::State& state) {
  auto m = random_matrix(60, 120, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sda::rref(m));
}
BENCHMARK(BM_rref_120);

void BM_weight_distribution_golay(benchmark::State& state) {
  auto g = sda::registry("golay24");
  for (auto _ : state) benchmark::DoNotOptimize(sda::weight_distribution(g));
}
BENCHMARK(BM_weight_distribution_golay);

void BM_extremal_enumerator_120(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sda::extremal_type2_enumerator(120));
}
BENCHMARK(BM_extremal_enumerator_120);

void BM_pfield_mul_59(benchmark::State& state) {
  std::mt19937_64 rng(2);
  auto a = sda::find_primitive(sda::PField::make(59), 1);
  auto b = sda::pow(a, 987654321);
  for (auto _ : state) {
    b = a * b;
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_pfield_mul_59);

void BM_pfield_pow_59(benchmark::State& state) {
  auto a = sda::find_primitive(sda::PField::make(59), 1);
  sda::BigInt e = (sda::BigInt(1) << 29) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(sda::pow(a, e));
}
BENCHMARK(BM_pfield_pow_59);

void BM_isd_round_qr48(benchmark::State& state) {
  auto c = sda::registry("qr48");
  std::uint64_t seed = 0;
  for (auto _ : state) {
    sda::SearchBudget b{.max_iterations = 1, .seed = seed++};
    benchmark::DoNotOptimize(sda::find_below(c, 12, b));
  }
}
BENCHMARK(BM_isd_round_qr48);

void BM_p59_candidate(benchmark::State& state) {
  auto alpha = sda::find_primitive(sda::PField::make(59), 42);
  std::uint32_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sda::build_p59_candidate(k, alpha));
    k = (k + 1) % sda::kP59Modulus;
  }
}
BENCHMARK(BM_p59_candidate);

}  // namespace

BENCHMARK_MAIN();
