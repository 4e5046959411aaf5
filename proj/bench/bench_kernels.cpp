// Fast kernels against their reference twins, and serial sweeps against OpenMP sweeps.

#include <benchmark/benchmark.h>

#include <thread>

#include "wlab/kernels.hpp"
#include "wlab/parallel.hpp"
#include "wlab/search.hpp"
#include "wlab/sieve.hpp"

using namespace wlab;

namespace {

constexpr std::uint64_t kPrime = 16843;

template <class Fn>
void with_arith(int e, Fn fn) {
  const AnyArith arith = make_arith(pow_big(from_u64(kPrime), static_cast<unsigned long>(e)));
  std::visit(fn, arith);
}

void BM_HarmonicDirect(benchmark::State& state) {
  with_arith(4, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::harmonic_numerator(a, kPrime));
  });
}

void BM_HarmonicPaired(benchmark::State& state) {
  with_arith(3, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::paired_harmonic_numerator(a, kPrime));
  });
}

void BM_SymmetricSumsFractionFree(benchmark::State& state) {
  with_arith(9, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::symmetric_sums(a, kPrime, 8));
  });
}

void BM_SymmetricSumsReference(benchmark::State& state) {
  with_arith(9, [&](const auto& a) {
    for (auto _ : state) {
      const auto inv = kernels::inverse_table(a, kPrime);
      benchmark::DoNotOptimize(kernels::symmetric_sums_reference(a, inv, 8));
    }
  });
}

void BM_CentralBinomial(benchmark::State& state) {
  with_arith(8, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::central_binomial(a, kPrime));
  });
}

void BM_CentralBinomialReference(benchmark::State& state) {
  with_arith(8, [&](const auto& a) {
    for (auto _ : state) {
      const auto inv = kernels::inverse_table(a, kPrime);
      benchmark::DoNotOptimize(kernels::central_binomial_reference(a, inv, kPrime));
    }
  });
}

void BM_PowerSum(benchmark::State& state) {
  const BigInt p = from_u64(kPrime);
  const BigInt phi = pow_big(p, 5) * (p - 1);
  const BigInt n = pow_big(p, 4) - pow_big(p, 3) - 2;
  with_arith(6, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::power_sum(a, kPrime, n, phi));
  });
}

void BM_PowerSumReference(benchmark::State& state) {
  const BigInt p = from_u64(kPrime);
  const BigInt n = pow_big(p, 4) - pow_big(p, 3) - 2;
  with_arith(6, [&](const auto& a) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::power_sum_reference(a, kPrime, n));
  });
}

const std::vector<std::uint64_t>& sweep_primes() {
  static const auto primes = primes_in(20000, 24000);
  return primes;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto kind = static_cast<SearchKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(indicator_sweep_serial(kind, sweep_primes()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sweep_primes().size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto kind = static_cast<SearchKind>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(indicator_sweep_parallel(kind, sweep_primes(), workers));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sweep_primes().size()));
}

void sweep_args(benchmark::internal::Benchmark* b) {
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int kind : {0, 1}) {
    for (int w = 1; w <= hw; w *= 2) b->Args({kind, w});
    if ((hw & (hw - 1)) != 0) b->Args({kind, hw});
  }
}

}  // namespace

BENCHMARK(BM_HarmonicDirect)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HarmonicPaired)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SymmetricSumsFractionFree)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SymmetricSumsReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CentralBinomial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CentralBinomialReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerSum)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerSumReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Apply(sweep_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
