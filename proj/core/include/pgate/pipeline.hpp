// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgate/config.hpp"
#include "pgate/metrics.hpp"
#include "pgate/optics.hpp"
#include "pgate/tomo.hpp"

// End-to-end pipelines behind the CLI subcommands: simulate counts for every
// grid point, reconstruct the process by MLE, extract and fit the phase
// offset, compensate, and aggregate the figures of merit.

namespace pgate::pipeline {

struct PointResult {
  optics::ProgramSetting setting;
  ChoiMatrix chiRaw;                 // MLE output, trace 1
  ChoiMatrix chiCompensated;
  double fidelityRaw = 0.0;
  double fidelityCompensated = 0.0;
  std::optional<double> effectivePhase;             // [0, 2pi)
  std::optional<double> avgStateFidelityRaw;
  std::optional<double> avgStateFidelityCompensated;
  double successProbability = 0.0;   // mean over the six canonical inputs
  int mleIterations = 0;
  bool mleConverged = false;
  double finalLogLikelihood = 0.0;
  double probabilityFloor = 0.0;
};

struct SweepReport {
  std::vector<PointResult> points;
  double meanFidelityRaw = 0.0;
  double meanFidelityCompensated = 0.0;
  double meanCompensationGain = 0.0;
  double fittedSlope = 0.0;
  double fittedOffset = 0.0;         // from this sweep's phase fit (phase sweeps)
  double compensationOffsetUsed = 0.0;
  // Regression of compensated F_avg on compensated process fidelity across
  // the sweep points (reported, not enforced; exactly (2x+1)/3 only for
  // trace-preserving processes).
  std::optional<double> favgRegressionSlope;
  std::optional<double> favgRegressionIntercept;

  bool any_converged() const;
};

// Dataset index convention: phase sweeps use the grid position k as the RNG
// dataset index, filter sweeps use 1000 + n. `pgate simulate` exposes the
// same index so files reproduce sweep points bit-exactly.
inline constexpr std::uint64_t kFilterDatasetIndexBase = 1000;

SweepReport run_sweep_phase(const config::ExperimentConfig& cfg);

// Compensation offset: the configured override when present, otherwise the
// offset fitted by a phase sweep run under the same configuration. Points at
// theta = 0 and pi/2 skip compensation.
SweepReport run_sweep_filter(const config::ExperimentConfig& cfg);

struct HomScanResult {
  std::vector<std::pair<double, double>> rows;  // (delay s, rate 1/s)
  double visibility = 0.0;                      // (max - min) / max of the curve
};

// Default delays: 201 points spanning +-5 coherence times.
HomScanResult run_hom_scan(const config::ExperimentConfig& cfg, const std::vector<double>& delays = {});

struct ReconstructionResult {
  optics::ProgramSetting target;
  tomo::MleResult mle;
  double fidelityRaw = 0.0;
  double fidelityCompensated = 0.0;
  std::optional<double> effectivePhase;
  double compensationOffsetUsed = 0.0;
  double successProbability = 0.0;
};

ReconstructionResult run_reconstruct(const tomo::TomographyDataset& dataset, const optics::ProgramSetting& target,
                                     const config::ExperimentConfig& cfg);

// Simulates one dataset for the given program setting and writes it to
// outFile in the dataset CSV format.
void run_simulate(const config::ExperimentConfig& cfg, const optics::ProgramSetting& program,
                  std::uint64_t datasetIndex, const std::filesystem::path& outFile);

}  // namespace pgate::pipeline
