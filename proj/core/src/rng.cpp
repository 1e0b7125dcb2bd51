// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace pgate::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) >> 32);
}
inline std::uint32_t mullo(std::uint32_t a, std::uint32_t b) { return a * b; }

}  // namespace

Philox4x32::Philox4x32(std::uint64_t seed, std::uint64_t streamA, std::uint64_t streamB) : pos_(4) {
  key_[0] = static_cast<std::uint32_t>(seed);
  key_[1] = static_cast<std::uint32_t>(seed >> 32);
  ctr_[0] = 0;
  ctr_[1] = 0;
  ctr_[2] = static_cast<std::uint32_t>(streamA ^ (streamA >> 32) * 0x9E3779B9u);
  ctr_[3] = static_cast<std::uint32_t>(streamB ^ (streamB >> 32) * 0x85EBCA6Bu);
  // Keep the full 64-bit labels distinguishable: fold the high halves into
  // the key-independent counter words as well.
  ctr_[2] ^= static_cast<std::uint32_t>(streamA >> 32) * 0xC2B2AE35u;
  ctr_[3] ^= static_cast<std::uint32_t>(streamB >> 32) * 0x27D4EB2Fu;
}

void Philox4x32::refill() {
  std::uint32_t c0 = ctr_[0], c1 = ctr_[1], c2 = ctr_[2], c3 = ctr_[3];
  std::uint32_t k0 = key_[0], k1 = key_[1];
  for (int round = 0; round < 10; ++round) {
    const std::uint32_t hi0 = mulhi(kPhiloxM0, c0);
    const std::uint32_t lo0 = mullo(kPhiloxM0, c0);
    const std::uint32_t hi1 = mulhi(kPhiloxM1, c2);
    const std::uint32_t lo1 = mullo(kPhiloxM1, c2);
    const std::uint32_t n0 = hi1 ^ c1 ^ k0;
    const std::uint32_t n1 = lo1;
    const std::uint32_t n2 = hi0 ^ c3 ^ k1;
    const std::uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  out_[0] = c0;
  out_[1] = c1;
  out_[2] = c2;
  out_[3] = c3;
  if (++ctr_[0] == 0) ++ctr_[1];  // 64-bit block counter
  pos_ = 0;
}

std::uint32_t Philox4x32::next_u32() {
  if (pos_ >= 4) refill();
  return out_[pos_++];
}

double Philox4x32::next_double() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  const std::uint64_t bits53 = ((hi << 32) | lo) >> 11;
  return static_cast<double>(bits53) * 0x1.0p-53;
}

namespace {

// PTRS transformed rejection (Hoermann 1993), valid for lambda >= 10.
std::uint64_t poisson_ptrs(Philox4x32& gen, double lambda) {
  const double slam = std::sqrt(lambda);
  const double loglam = std::log(lambda);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double invalpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = gen.next_double() - 0.5;
    const double v = gen.next_double();
    const double us = 0.5 - std::abs(u);
    const double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<std::uint64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b) <=
        k * loglam - lambda - std::lgamma(k + 1.0)) {
      return static_cast<std::uint64_t>(k);
    }
  }
}

std::uint64_t poisson_inversion(Philox4x32& gen, double lambda) {
  const double expl = std::exp(-lambda);
  std::uint64_t k = 0;
  double prod = gen.next_double();
  while (prod > expl) {
    prod *= gen.next_double();
    ++k;
  }
  return k;
}

}  // namespace

std::uint64_t poisson(Philox4x32& gen, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("poisson: lambda must be finite and >= 0");
  if (lambda == 0.0) return 0;
  if (lambda < 10.0) return poisson_inversion(gen, lambda);
  return poisson_ptrs(gen, lambda);
}

}  // namespace pgate::rng
