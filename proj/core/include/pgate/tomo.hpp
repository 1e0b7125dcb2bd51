// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgate/optics.hpp"
#include "pgate/qmath.hpp"

// Tomographically complete measurement set, synthetic coincidence counts and
// iterative maximum-likelihood reconstruction of the (generally
// trace-decreasing) process matrix.

namespace pgate::tomo {

using optics::KrausOp;
using optics::PolKet;
using optics::ProgramSetting;
using qmath::Mat4;

inline constexpr int kNumStates = 6;
inline constexpr int kNumSettings = 36;

// Canonical six-state set in fixed order H, V, +, -, R, L.
const std::array<PolKet, kNumStates>& canonical_states();
char canonical_label(int index);   // 'H','V','P','M','R','L'
int canonical_index(char label);   // -1 if unknown

// One tomography setting: preparation state and analysis projector, both
// drawn from the canonical set.
struct MeasurementSetting {
  int inputIndex = 0;
  int projectorIndex = 0;

  const PolKet& input() const { return canonical_states()[inputIndex]; }
  const PolKet& projector() const { return canonical_states()[projectorIndex]; }
};

// All 36 settings, inputs in the outer loop, projectors in the inner loop.
std::vector<MeasurementSetting> canonical_settings();

struct CountRecord {
  MeasurementSetting setting;
  double counts = 0.0;  // integer for sampled data, exact mean in noiseless mode
  double exposure = 0.0;
};

struct TomographyDataset {
  std::vector<CountRecord> records;
  ProgramSetting program;
  double rateCalibration = 0.0;  // counts/second at unit probability

  double total_counts() const;
  // Throws std::invalid_argument naming the first missing or duplicate
  // (input, projector) pair unless there is exactly one record per pair.
  void validate() const;
};

// p = |<proj| K |input>|^2.
double expected_probability(const KrausOp& k, const MeasurementSetting& s);

// M = (|input><input|)^T (x) |proj><proj|, so that p = Tr[chi M] matches
// expected_probability for chi = choi_from_kraus(K).
Mat4 measurement_operator(const MeasurementSetting& s);

// Poisson counts for every canonical setting with mean
// rateCalibration * exposure * expected_probability. The RNG substream of a
// record is (seed; streamA = datasetIndex, streamB = setting index), so the
// records are reproducible individually and in any order. noiseless replaces
// sampling by the exact mean.
TomographyDataset simulate_counts(const KrausOp& k, const ProgramSetting& program, double exposure,
                                  double rateCalibration, std::uint64_t seed, std::uint64_t datasetIndex = 0,
                                  bool noiseless = false);

struct MleOptions {
  int maxIterations = 100000;
  double tolerance = 1e-10;               // relative log-likelihood change
  std::vector<double> dilution = {1.0, 0.5, 0.1};
  double probabilityFloor = 1e-12;
  // When positive, convergence is declared on max |chi' - chi| < stepTolerance
  // instead of the likelihood change; exact-frequency data supports driving
  // the iteration far past the likelihood's floating-point plateau.
  double stepTolerance = 0.0;
};

struct MleResult {
  Mat4 chi;                               // Hermitian, PSD, trace 1
  std::vector<double> logLikelihoodTrace; // non-decreasing, starts at chi0
  int iterations = 0;
  bool converged = false;
  double probabilityFloor = 0.0;
};

// Normalized log-likelihood sum_j f_j ln(p_j / sum_k p_k) with
// f_j = counts_j / total and p_j = Tr[chi M_j] clamped at the floor.
// Invariant under rescaling of chi.
double loglikelihood(const Mat4& chi, const TomographyDataset& data, double probabilityFloor = 1e-12);

// Fixed-point iteration chi <- R chi R with R = sum_j (f_j / p_j) M_j,
// renormalized to constant trace. For the canonical settings sum_j M_j is
// proportional to the identity, so this is the stationary map of the
// normalized likelihood. When a full step would decrease the likelihood the
// diluted operator (1 - eps) (Tr R / 4) 1 + eps R is tried over the dilution
// schedule. Starts from the maximally mixed chi0 = 1/4.
MleResult mle_reconstruct(const TomographyDataset& data, const MleOptions& options = {});

}  // namespace pgate::tomo
