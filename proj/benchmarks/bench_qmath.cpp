// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "pgate/qmath.hpp"

namespace {

using namespace pgate;

qmath::Mat4 sample_hermitian() {
  qmath::Mat4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      m(r, c) = {0.1 * static_cast<double>(r + c), 0.05 * (static_cast<double>(r) - static_cast<double>(c))};
  return qmath::hermitize(m);
}

void BM_Kron2x2(benchmark::State& state) {
  const auto a = qmath::identity<2>();
  qmath::Mat2 b;
  b(0, 1) = {0.3, -0.1};
  b(1, 0) = {0.3, 0.1};
  for (auto _ : state) {
    auto k = qmath::kron(a, b);
    benchmark::DoNotOptimize(k);
  }
}
BENCHMARK(BM_Kron2x2);

void BM_Mat4Multiply(benchmark::State& state) {
  const auto m = sample_hermitian();
  for (auto _ : state) {
    auto p = m * m;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_Mat4Multiply);

void BM_JacobiEigenvalues4x4(benchmark::State& state) {
  const auto m = sample_hermitian();
  for (auto _ : state) {
    auto ev = qmath::eigenvalues_hermitian(m);
    benchmark::DoNotOptimize(ev);
  }
}
BENCHMARK(BM_JacobiEigenvalues4x4);

}  // namespace
