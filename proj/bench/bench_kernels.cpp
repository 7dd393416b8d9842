// Serial reference vs OpenMP kernels: the cyclotomic suite and the batch
// job runner on a congruence sweep.

#include <benchmark/benchmark.h>

#include "qcong/cyclotomic.hpp"
#include "qcong/driver.hpp"

namespace {

void BM_CyclotomicSuiteSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcong::cyclotomic_suite_serial(state.range(0)));
}

void BM_CyclotomicSuiteParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcong::cyclotomic_suite(state.range(0)));
}

qcong::TaskSpec sweep(long hi) {
  qcong::TaskSpec t;
  t.kind = qcong::TaskKind::theorem;
  t.id = "3.2";
  t.n_range = {3, hi};
  return t;
}

void BM_RunJobsSerial(benchmark::State& state) {
  const auto task = sweep(state.range(0));
  const auto jobs = qcong::expand(task);
  const auto check = qcong::checker_for(task);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::run_jobs_serial(jobs, check));
}

void BM_RunJobsParallel(benchmark::State& state) {
  const auto task = sweep(state.range(0));
  const auto jobs = qcong::expand(task);
  const auto check = qcong::checker_for(task);
  for (auto _ : state) benchmark::DoNotOptimize(qcong::run_jobs(jobs, check, 0));
}

}  // namespace

BENCHMARK(BM_CyclotomicSuiteSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclotomicSuiteParallel)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunJobsSerial)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunJobsParallel)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
