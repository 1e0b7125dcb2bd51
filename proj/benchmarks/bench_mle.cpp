// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <numbers>

#include "pgate/optics.hpp"
#include "pgate/tomo.hpp"

namespace {

using namespace pgate;

tomo::TomographyDataset sample_dataset() {
  const auto pbs = optics::PbsModel::from_reflectances(0.023, 0.995, -0.265);
  const auto setting = optics::ProgramSetting::phase(std::numbers::pi / 3.0);
  const auto kraus = optics::effective_kraus(setting, pbs);
  return tomo::simulate_counts(kraus, setting, 50.0, 5200.0, 42);
}

void BM_SimulateCounts(benchmark::State& state) {
  const auto pbs = optics::PbsModel::from_reflectances(0.023, 0.995, -0.265);
  const auto setting = optics::ProgramSetting::phase(std::numbers::pi / 3.0);
  const auto kraus = optics::effective_kraus(setting, pbs);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto ds = tomo::simulate_counts(kraus, setting, 50.0, 5200.0, seed++);
    benchmark::DoNotOptimize(ds);
  }
}
BENCHMARK(BM_SimulateCounts);

void BM_MleIterations(benchmark::State& state) {
  const auto ds = sample_dataset();
  tomo::MleOptions opts;
  opts.maxIterations = static_cast<int>(state.range(0));
  opts.tolerance = 0.0;  // run the fixed iteration budget
  for (auto _ : state) {
    auto result = tomo::mle_reconstruct(ds, opts);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MleIterations)->Arg(100)->Arg(1000);

void BM_MleFullReconstruction(benchmark::State& state) {
  const auto ds = sample_dataset();
  for (auto _ : state) {
    auto result = tomo::mle_reconstruct(ds);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MleFullReconstruction);

}  // namespace

BENCHMARK_MAIN();
