#include <benchmark/benchmark.h>

#include "sympow/divisor.hpp"
#include "sympow/fatpoints.hpp"
#include "sympow/groebner.hpp"
#include "sympow/oracle.hpp"

using namespace sympow;

namespace {

FatPointScheme conic_scheme(int n, int m) {
  std::vector<long> params;
  for (int i = 0; i < n; ++i) params.push_back(i + 1);
  return FatPointScheme::uniform(
      PointConfig::on_conic(params, Field::prime(2147483647)), m);
}

}  // namespace

static void BM_GradedPieceDim(benchmark::State& state) {
  FatPointScheme z = conic_scheme(7, static_cast<int>(state.range(0)));
  int t = 3 * static_cast<int>(state.range(0)) + 2;
  for (auto _ : state) benchmark::DoNotOptimize(graded_piece_dim(z, t));
}
BENCHMARK(BM_GradedPieceDim)->Arg(1)->Arg(2)->Arg(3);

static void BM_FatIdeal(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FatPointScheme z = conic_scheme(5, m);
    benchmark::DoNotOptimize(fat_ideal(z));
  }
}
BENCHMARK(BM_FatIdeal)->Arg(1)->Arg(2);

static void BM_Buchberger(benchmark::State& state) {
  FatPointScheme z = conic_scheme(5, static_cast<int>(state.range(0)));
  Ideal I = fat_ideal(z);
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(I.generators(), scheme_ring(z));
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_Buchberger)->Arg(1)->Arg(2);

static void BM_MinusOneClasses(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(minus_one_classes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MinusOneClasses)->Arg(6)->Arg(7)->Arg(8);

static void BM_AlphaBruteforce(benchmark::State& state) {
  FatPointScheme z = conic_scheme(8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_bruteforce(z, 2));
}
BENCHMARK(BM_AlphaBruteforce);
