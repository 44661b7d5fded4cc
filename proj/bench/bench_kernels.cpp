#include <benchmark/benchmark.h>

#include <random>

#include "holosamp/multispin.hpp"
#include "holosamp/singlespin.hpp"

using namespace holosamp;

namespace {

CVector random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  CVector pts(n);
  for (auto& z : pts) z = {u(rng), u(rng)};
  return pts;
}

CVector random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CVector v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

Reconstructor make_reconstructor(int two_s) {
  const TwiceSpin ts(two_s);
  const SpinState s(ts, random_vector(static_cast<std::size_t>(ts.dim()), 1));
  return Reconstructor(sample_state(s, static_cast<std::size_t>(ts.dim() + 3)));
}

void BM_ReconstructSerial(benchmark::State& st) {
  const auto rec = make_reconstructor(static_cast<int>(st.range(0)));
  const CVector pts = random_points(static_cast<std::size_t>(st.range(1)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(rec.evaluate_serial(pts));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_ReconstructParallel(benchmark::State& st) {
  const auto rec = make_reconstructor(static_cast<int>(st.range(0)));
  const CVector pts = random_points(static_cast<std::size_t>(st.range(1)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(rec.evaluate(pts));
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_MultiSerial(benchmark::State& st) {
  const auto grid = ParallelsGrid::with_default_radii(static_cast<int>(st.range(0)));
  const MultiReconstructor rec(grid, random_vector(grid.size(), 3));
  const CVector pts = random_points(static_cast<std::size_t>(st.range(1)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(rec.evaluate_serial(pts));
}

void BM_MultiParallel(benchmark::State& st) {
  const auto grid = ParallelsGrid::with_default_radii(static_cast<int>(st.range(0)));
  const MultiReconstructor rec(grid, random_vector(grid.size(), 3));
  const CVector pts = random_points(static_cast<std::size_t>(st.range(1)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(rec.evaluate(pts));
}

void BM_DftDirectSerial(benchmark::State& st) {
  const CVector v = random_vector(static_cast<std::size_t>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(dft_direct_serial(v, false));
}

void BM_DftDirectParallel(benchmark::State& st) {
  const CVector v = random_vector(static_cast<std::size_t>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(dft_direct(v, false));
}

void BM_FftRadix2(benchmark::State& st) {
  const CVector v = random_vector(static_cast<std::size_t>(st.range(0)), 5);
  for (auto _ : st) benchmark::DoNotOptimize(fft_radix2(v, false));
}

}  // namespace

BENCHMARK(BM_ReconstructSerial)->Args({10, 10000})->Args({100, 10000});
BENCHMARK(BM_ReconstructParallel)->Args({10, 10000})->Args({100, 10000});
BENCHMARK(BM_MultiSerial)->Args({4, 2000})->Args({6, 2000});
BENCHMARK(BM_MultiParallel)->Args({4, 2000})->Args({6, 2000});
BENCHMARK(BM_DftDirectSerial)->Arg(256)->Arg(1024);
BENCHMARK(BM_DftDirectParallel)->Arg(256)->Arg(1024);
BENCHMARK(BM_FftRadix2)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
