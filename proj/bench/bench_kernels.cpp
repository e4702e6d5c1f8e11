// Serial reference against the OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "fsb/kernels.hpp"
#include "fsb/rep.hpp"

using namespace fsb;

namespace {

void BM_FlatCountsSerial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::flat_counts_B(static_cast<int>(s.range(0))));
}
void BM_FlatCountsParallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::flat_counts_B(static_cast<int>(s.range(0))));
}

// One representative per conjugacy class, as the permutation characters use.
std::vector<SignedPerm> class_representatives(int n) {
  const auto& t = rep::class_table(rep::Group::W, n);
  std::vector<SignedPerm> ws;
  for (std::size_t k = 0; k < t.classes.size(); ++k) ws.push_back(t.representative(k));
  return ws;
}

void BM_FixedOrbitsSerial(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto ws = class_representatives(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::fixed_orbit_counts(n, 2, ws));
}
void BM_FixedOrbitsParallel(benchmark::State& s) {
  const int n = static_cast<int>(s.range(0));
  const auto ws = class_representatives(n);
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::fixed_orbit_counts(n, 2, ws));
}

void BM_IdealCountsSerial(benchmark::State& s) {
  const words::Word w(2, {1, -1, 2});
  for (auto _ : s) benchmark::DoNotOptimize(kernels::serial::ideal_member_counts(w, static_cast<int>(s.range(0))));
}
void BM_IdealCountsParallel(benchmark::State& s) {
  const words::Word w(2, {1, -1, 2});
  for (auto _ : s) benchmark::DoNotOptimize(kernels::parallel::ideal_member_counts(w, static_cast<int>(s.range(0))));
}

}  // namespace

BENCHMARK(BM_FlatCountsSerial)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlatCountsParallel)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedOrbitsSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedOrbitsParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealCountsSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdealCountsParallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::AddCustomContext("omp_threads", std::to_string(kernels::parallel::max_threads()));
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
}
