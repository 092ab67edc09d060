// Serial reference kernels against their OpenMP counterparts.

#include "ffpat/family.hpp"
#include "ffpat/tally.hpp"
#include "ffpat/variety.hpp"

#include <benchmark/benchmark.h>

using namespace ffpat;

namespace {

const LinearFamily& tally_family_fixture() {
  static const LinearFamily fam = new_family(make_fq(11, 1), 6, 3, {{4, 7, 1}}, {5});
  return fam;
}

struct SystemFixture {
  LinearFamily fam = new_family(make_fq(7, 1), 5, 3, {{3, 1}}, {2});
  Tower tower{fam.field_ptr(), 5};
  SymSystem sys{fam, tower, Pattern::parse("1^1 2^2", 5)};
  FamilyTally tally = tally_family(fam);
};

const SystemFixture& system_fixture() {
  static const SystemFixture f;
  return f;
}

void BM_TallySerial(benchmark::State& state) {
  const auto& fam = tally_family_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(tally_family_serial(fam));
  state.SetItemsProcessed(state.iterations() * 161051);
}

void BM_TallyParallel(benchmark::State& state) {
  const auto& fam = tally_family_fixture();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tally_family(fam, kDefaultMemberBudget, workers));
  state.SetItemsProcessed(state.iterations() * 161051);
}

void BM_PointsSerial(benchmark::State& state) {
  const auto& f = system_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(count_points_serial(f.sys, f.tally));
  state.SetItemsProcessed(state.iterations() * 16807);
}

void BM_PointsParallel(benchmark::State& state) {
  const auto& f = system_fixture();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(f.sys, f.tally, kDefaultScanBudget, workers));
  state.SetItemsProcessed(state.iterations() * 16807);
}

void BM_JacobianSerial(benchmark::State& state) {
  const auto& f = system_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_probe_serial(f.sys));
}

void BM_JacobianParallel(benchmark::State& state) {
  const auto& f = system_fixture();
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_probe(f.sys, kDefaultScanBudget, workers));
}

}  // namespace

BENCHMARK(BM_TallySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallyParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PointsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PointsParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_JacobianSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_JacobianParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
