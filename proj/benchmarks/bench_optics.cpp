// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "pgate/optics.hpp"

namespace {

using namespace pgate;

const optics::PbsModel kPbs = optics::PbsModel::from_reflectances(0.023, 0.995, -0.265);

void BM_PbsCoincidence(benchmark::State& state) {
  const auto data = optics::ket_plus();
  const auto program = optics::program_ket(optics::ProgramSetting::phase(0.7));
  for (auto _ : state) {
    auto t = optics::pbs_coincidence(data, program, kPbs);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_PbsCoincidence);

void BM_EffectiveKraus(benchmark::State& state) {
  for (auto _ : state) {
    auto k = optics::effective_kraus(optics::ProgramSetting::phase(0.7), kPbs);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_EffectiveKraus);

void BM_ChoiFromKraus(benchmark::State& state) {
  const auto k = optics::effective_kraus(optics::ProgramSetting::phase(0.7), kPbs);
  for (auto _ : state) {
    auto chi = optics::choi_from_kraus(k);
    benchmark::DoNotOptimize(chi);
  }
}
BENCHMARK(BM_ChoiFromKraus);

void BM_ApplyProcess(benchmark::State& state) {
  const auto chi = optics::choi_from_kraus(optics::effective_kraus(optics::ProgramSetting::phase(0.7), kPbs));
  DensityMatrix2 rho;
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  for (auto _ : state) {
    auto out = optics::apply_process(chi, rho);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ApplyProcess);

}  // namespace
