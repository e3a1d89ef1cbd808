#include <benchmark/benchmark.h>

#include <cmath>

#include "bspin/characters.hpp"
#include "bspin/limitlaw.hpp"
#include "bspin/measure.hpp"
#include "bspin/multiplicities.hpp"

using namespace bspin;

namespace {

void BM_MultiplicityExact(benchmark::State& state) {
  const long long N = state.range(0);
  const SVector s({1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicity_exact(2, N, s));
  }
}
BENCHMARK(BM_MultiplicityExact)->Arg(64)->Arg(512)->Arg(4096)->Arg(32768);

void BM_MultiplicityLog(benchmark::State& state) {
  const long long N = state.range(0);
  const SVector s({1, 3});
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicity_log(2, N, s));
  }
}
BENCHMARK(BM_MultiplicityLog)->Arg(512)->Arg(1000000);

void BM_Factorial(benchmark::State& state) {
  const long long k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorial(k));
  }
}
BENCHMARK(BM_Factorial)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_TensorOracle(benchmark::State& state) {
  const long long N = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_decompose_oracle(3, N));
  }
}
BENCHMARK(BM_TensorOracle)->Arg(6)->Arg(10)->Arg(14);

void BM_CharacterBn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Coord> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = 20 - 2 * i;
  std::vector<BigRat> y(n);
  for (int i = 0; i < n; ++i) y[i] = BigRat(i + 2, 2 * i + 1);
  const RescaledWeight weight(lam);
  const TorusPoint pt(y);
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_Bn(weight, pt));
  }
}
BENCHMARK(BM_CharacterBn)->Arg(2)->Arg(3)->Arg(4);

void BM_LogCharacterBn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Coord> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = 512 - 2 * i;
  std::vector<double> t(n);
  for (int i = 0; i < n; ++i) t[i] = 0.5 * std::log(512.0 / (1.0 + i));
  const RescaledWeight weight(lam);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_character_Bn(weight, t));
  }
}
BENCHMARK(BM_LogCharacterBn)->Arg(2)->Arg(3)->Arg(4);

void BM_FreudenthalWeights(benchmark::State& state) {
  const RescaledWeight lam({static_cast<Coord>(state.range(0)), 4, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(freudenthal_weights(lam));
  }
}
BENCHMARK(BM_FreudenthalWeights)->Arg(6)->Arg(10);

void BM_MeasureTable(benchmark::State& state) {
  const long long N = state.range(0);
  const TorusPoint pt({BigRat(2), BigRat(3, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_measure_table(2, N, pt));
  }
}
BENCHMARK(BM_MeasureTable)->Arg(8)->Arg(16)->Arg(32);

void BM_Sample(benchmark::State& state) {
  const TorusPoint pt({BigRat(2), BigRat(3, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(2, 20, pt, 7, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(10000);

void BM_LimitDensity(benchmark::State& state) {
  const ThetaVector theta({1.0, 2.0, 0.5});
  const SVector s({1, 2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(limit_density(3, s, theta));
  }
}
BENCHMARK(BM_LimitDensity);

void BM_ConvergenceRow(benchmark::State& state) {
  const long long N = state.range(0);
  const ThetaVector theta({1.0, 2.0});
  const SVector s({0, 1});
  const auto t = t_from_theta(N, theta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(character_measure_log(2, N, s, t));
  }
}
BENCHMARK(BM_ConvergenceRow)->Arg(512)->Arg(65536)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
