#include <random>

#include <benchmark/benchmark.h>

#include "skewsep/catalog.hpp"
#include "skewsep/separability.hpp"
#include "skewsep/sweep.hpp"

using namespace skewsep;

namespace {

std::shared_ptr<const SkewPolyRing> corner_ring(const CoeffRing& k) {
  BaseRing b = catalog::upper_triangular(k);
  RingMap d = catalog::upper_triangular_corner_derivation(b);
  RingMap id = RingMap::identity(b);
  return SkewPolyRing::create(std::move(b), std::move(id), std::move(d));
}

std::shared_ptr<const QuotientRing> worked(const CoeffRing& k) {
  auto r = corner_ring(k);
  const RingElement a = r->base().element({3, 0, 1});
  return QuotientRing::build(r, r->from_coeffs({a, a, r->base().one()}));
}

std::vector<Vec> random_rows(std::size_t n, long lo, long hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<Vec> rows(n, Vec(n));
  for (auto& row : rows)
    for (auto& x : row) x = dist(rng);
  return rows;
}

void BM_HnfIntegers(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, -50, 50, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(n, rows));
}
BENCHMARK(BM_HnfIntegers)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HnfModular(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, 0, 11, 2);
  const CoeffRing k = CoeffRing::modulo(12);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(n, rows, k));
}
BENCHMARK(BM_HnfModular)->Arg(8)->Arg(32)->Arg(64);

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = Matrix::from_rows(random_rows(n, -20, 20, 3), n);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

void BM_BuildQuotient(benchmark::State& state) {
  auto r = corner_ring(CoeffRing::integers());
  const RingElement a = r->base().element({3, 0, 1});
  const SkewPoly f = r->from_coeffs({a, a, r->base().one()});
  for (auto _ : state) benchmark::DoNotOptimize(QuotientRing::build(r, f));
}
BENCHMARK(BM_BuildQuotient);

void BM_DecideWorkedExample(benchmark::State& state) {
  auto a = worked(CoeffRing::integers());
  for (auto _ : state) benchmark::DoNotOptimize(decide(*a));
}
BENCHMARK(BM_DecideWorkedExample);

void BM_OracleWorkedExample(benchmark::State& state) {
  auto a = worked(CoeffRing::modulo(5));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_weakly_separable(*a));
}
BENCHMARK(BM_OracleWorkedExample);

void BM_SweepCornerZ3(benchmark::State& state) {
  auto r = corner_ring(CoeffRing::modulo(3));
  SweepOptions opts;
  opts.min_degree = 2;
  opts.max_degree = 2;
  opts.run_oracle = state.range(0) != 0;
  opts.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(r, opts));
}
BENCHMARK(BM_SweepCornerZ3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
