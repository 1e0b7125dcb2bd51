// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

// Counter-based random numbers (Philox4x32-10). Streams are addressed by a
// 64-bit seed (the key) plus two 64-bit stream labels placed in the upper
// counter words, so independent substreams can be drawn per dataset and per
// tomography setting without any shared state:
//
//   key     = (seed_lo, seed_hi)
//   counter = (block_lo, block_hi, stream_a, stream_b)
//
// Every draw is a pure function of (seed, stream_a, stream_b, block), which
// is what makes count simulation reproducible and order-independent.

namespace pgate::rng {

struct Philox4x32 {
  Philox4x32(std::uint64_t seed, std::uint64_t streamA = 0, std::uint64_t streamB = 0);

  // Next 32 random bits from the stream.
  std::uint32_t next_u32();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

 private:
  void refill();

  std::uint32_t key_[2];
  std::uint32_t ctr_[4];
  std::uint32_t out_[4];
  int pos_;
};

// Poisson-distributed integer with mean lambda. Uses inversion by sequential
// search for small lambda and the PTRS transformed-rejection sampler for
// large lambda; both consume only uniforms from the given stream, so results
// are identical across platforms. lambda must be finite and >= 0.
std::uint64_t poisson(Philox4x32& gen, double lambda);

}  // namespace pgate::rng
