// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgate/optics.hpp"
#include "pgate/tomo.hpp"

namespace pgate::config {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Detection-stage parameters for the HOM dip scan. The analysis splitter is
// the polarizing element in front of the two dip detectors; its leakage is
// what limits the visibility when the photons themselves overlap well.
struct HomConfig {
  double overlap = 0.995;
  double coherenceTime = 3e-13;      // seconds
  double baselineRate = 1300.0;      // counts/second
  double analysisReflectanceH = 0.026;
  double analysisTransmittanceV = 0.026;

  optics::HomModel model() const { return {overlap, coherenceTime, baselineRate}; }
  optics::PbsModel analysis() const {
    return optics::PbsModel::from_reflectances(analysisReflectanceH, 1.0 - analysisTransmittanceV, 0.0);
  }
};

// Full experiment description. Defaults reproduce the modeled experiment:
// measured splitting ratios 97.7:2.3 (H, transmitted:reflected) and 99.5:0.5
// (V, reflected:transmitted), effective phase offset -0.265 rad, 5 s x 10
// exposures, and a rate calibration that puts the brightest setting near
// 1300 coincidences per second.
struct ExperimentConfig {
  double pbsReflectanceH = 0.023;
  double pbsReflectanceV = 0.995;
  double pbsDeltaPhi = -0.265;
  bool pbsIdeal = false;

  double exposure = 50.0;            // seconds per setting
  double rateCalibration = 5200.0;   // counts/second at unit probability
  std::uint64_t seed = 1;
  bool noiseless = false;

  std::vector<double> phaseGrid;     // default k pi/4, k = 0..7
  std::vector<double> thetaGrid;     // default n pi/16, n = 0..8

  tomo::MleOptions mle;
  HomConfig hom;

  // When set, sweeps compensate with this offset instead of the fitted one.
  std::optional<double> compensationDeltaPhi;

  ExperimentConfig();

  optics::PbsModel pbs() const;
  // MLE options actually used by the pipelines: noiseless data supports a
  // tighter convergence target.
  tomo::MleOptions effective_mle() const;

  // key = value text, one key per line; round-trips through parse_string.
  std::string serialize() const;

  static ExperimentConfig parse_file(const std::filesystem::path& path);
  static ExperimentConfig parse_string(const std::string& text, const std::string& originName = "<config>");
};

}  // namespace pgate::config
