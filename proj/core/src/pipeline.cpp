// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/pipeline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pgate/dataset_io.hpp"

namespace pgate::pipeline {

using config::ExperimentConfig;
using optics::KrausOp;
using optics::ProgramSetting;

namespace {

// Rescale the trace-1 MLE output so its predicted counts match the observed
// totals; the result carries absolute success probabilities again.
ChoiMatrix rate_anchored(const ChoiMatrix& chi, const tomo::TomographyDataset& data) {
  double predicted = 0.0;
  for (const auto& r : data.records)
    predicted += data.rateCalibration * r.exposure *
                 qmath::trace(chi * tomo::measurement_operator(r.setting)).real();
  if (!(predicted > 0.0)) return chi;
  return (data.total_counts() / predicted) * chi;
}

double mean_success_probability(const ChoiMatrix& chiScaled) {
  double sum = 0.0;
  for (const optics::PolKet& input : tomo::canonical_states()) {
    const qmath::Vec2 in{{input.aH, input.aV}};
    sum += qmath::trace(optics::apply_process(chiScaled, qmath::outer(in, in))).real();
  }
  return sum / tomo::kNumStates;
}

PointResult reconstruct_point(const ExperimentConfig& cfg, const ProgramSetting& setting,
                              std::uint64_t datasetIndex) {
  const KrausOp kraus = optics::effective_kraus(setting, cfg.pbs());
  const tomo::TomographyDataset data = tomo::simulate_counts(
      kraus, setting, cfg.exposure, cfg.rateCalibration, cfg.seed, datasetIndex, cfg.noiseless);
  const tomo::MleResult mle = tomo::mle_reconstruct(data, cfg.effective_mle());

  PointResult point;
  point.setting = setting;
  point.chiRaw = mle.chi;
  point.effectivePhase = metrics::effective_phase(mle.chi);
  point.mleIterations = mle.iterations;
  point.mleConverged = mle.converged;
  point.finalLogLikelihood = mle.logLikelihoodTrace.back();
  point.probabilityFloor = mle.probabilityFloor;
  point.successProbability = mean_success_probability(rate_anchored(mle.chi, data));
  return point;
}

ChoiMatrix ideal_choi(const ProgramSetting& setting) {
  return setting.mode == ProgramSetting::Mode::Phase ? metrics::ideal_choi_phase(setting.angle)
                                                     : metrics::ideal_choi_filter(setting.angle);
}

std::optional<double> avg_state_fidelity(const ChoiMatrix& chi, const ProgramSetting& setting) {
  if (setting.mode == ProgramSetting::Mode::Phase) return metrics::average_state_fidelity(chi, setting.angle);
  return metrics::average_state_fidelity_filter(chi, setting.angle);
}

void finalize(SweepReport& report) {
  double sumRaw = 0.0, sumComp = 0.0;
  for (const auto& p : report.points) {
    sumRaw += p.fidelityRaw;
    sumComp += p.fidelityCompensated;
  }
  report.meanFidelityRaw = sumRaw / static_cast<double>(report.points.size());
  report.meanFidelityCompensated = sumComp / static_cast<double>(report.points.size());
  report.meanCompensationGain = report.meanFidelityCompensated - report.meanFidelityRaw;

  // Least-squares line through the (F_chi, F_avg) pairs.
  double n = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& p : report.points) {
    if (!p.avgStateFidelityCompensated) continue;
    const double x = p.fidelityCompensated;
    const double y = *p.avgStateFidelityCompensated;
    n += 1.0;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (n >= 2.0 && std::abs(det) > 1e-12 * std::max(1.0, sxx)) {
    report.favgRegressionSlope = (n * sxy - sx * sy) / det;
    report.favgRegressionIntercept = (sy * sxx - sx * sxy) / det;
  }
}

}  // namespace

bool SweepReport::any_converged() const {
  for (const auto& p : points)
    if (p.mleConverged) return true;
  return false;
}

SweepReport run_sweep_phase(const ExperimentConfig& cfg) {
  if (cfg.phaseGrid.empty()) throw config::ConfigError("phase_grid is empty");

  SweepReport report;
  report.points.reserve(cfg.phaseGrid.size());
  for (std::size_t k = 0; k < cfg.phaseGrid.size(); ++k) {
    PointResult point = reconstruct_point(cfg, ProgramSetting::phase(cfg.phaseGrid[k]), k);
    point.fidelityRaw = metrics::process_fidelity(point.chiRaw, metrics::ideal_choi_phase(point.setting.angle));
    point.avgStateFidelityRaw = avg_state_fidelity(point.chiRaw, point.setting);
    report.points.push_back(std::move(point));
  }

  std::vector<std::pair<double, double>> fitPoints;
  for (const auto& p : report.points)
    if (p.effectivePhase) fitPoints.emplace_back(p.setting.angle, *p.effectivePhase);
  if (fitPoints.size() >= 2) {
    const metrics::PhaseFit fit = metrics::fit_phase_offset(fitPoints);
    report.fittedSlope = fit.slope;
    report.fittedOffset = fit.offset;
  } else if (fitPoints.size() == 1) {
    // Single usable point: its own deviation plays the role of the fit.
    report.fittedSlope = 1.0;
    report.fittedOffset = std::remainder(fitPoints[0].second - fitPoints[0].first, 2.0 * std::numbers::pi);
  } else {
    throw std::runtime_error("sweep-phase: no point produced a defined effective phase");
  }
  report.compensationOffsetUsed = cfg.compensationDeltaPhi.value_or(report.fittedOffset);

  for (auto& p : report.points) {
    p.chiCompensated = metrics::compensate_choi(p.chiRaw, report.compensationOffsetUsed);
    p.fidelityCompensated =
        metrics::process_fidelity(p.chiCompensated, metrics::ideal_choi_phase(p.setting.angle));
    p.avgStateFidelityCompensated = avg_state_fidelity(p.chiCompensated, p.setting);
  }
  finalize(report);
  return report;
}

SweepReport run_sweep_filter(const ExperimentConfig& cfg) {
  if (cfg.thetaGrid.empty()) throw config::ConfigError("theta_grid is empty");

  double compensation;
  double slope = 0.0, offset = 0.0;
  if (cfg.compensationDeltaPhi) {
    compensation = *cfg.compensationDeltaPhi;
  } else {
    const SweepReport phase = run_sweep_phase(cfg);
    compensation = phase.compensationOffsetUsed;
    slope = phase.fittedSlope;
    offset = phase.fittedOffset;
  }

  SweepReport report;
  report.fittedSlope = slope;
  report.fittedOffset = offset;
  report.compensationOffsetUsed = compensation;
  report.points.reserve(cfg.thetaGrid.size());
  for (std::size_t n = 0; n < cfg.thetaGrid.size(); ++n) {
    const double theta = cfg.thetaGrid[n];
    PointResult point = reconstruct_point(cfg, ProgramSetting::filter(theta), kFilterDatasetIndexBase + n);
    const ChoiMatrix target = metrics::ideal_choi_filter(theta);
    point.fidelityRaw = metrics::process_fidelity(point.chiRaw, target);
    point.avgStateFidelityRaw = avg_state_fidelity(point.chiRaw, point.setting);

    // Complete filtering is phase-insensitive; those grid points are
    // reported uncompensated.
    const bool skipCompensation =
        std::abs(theta) <= 1e-15 || std::abs(theta - std::numbers::pi / 2.0) <= 1e-15;
    point.chiCompensated = skipCompensation ? point.chiRaw : metrics::compensate_choi(point.chiRaw, compensation);
    point.fidelityCompensated = metrics::process_fidelity(point.chiCompensated, target);
    point.avgStateFidelityCompensated = avg_state_fidelity(point.chiCompensated, point.setting);
    report.points.push_back(std::move(point));
  }
  finalize(report);
  return report;
}

HomScanResult run_hom_scan(const ExperimentConfig& cfg, const std::vector<double>& delays) {
  std::vector<double> taus = delays;
  if (taus.empty()) {
    constexpr int kPoints = 201;
    const double span = 5.0 * cfg.hom.coherenceTime;
    taus.reserve(kPoints);
    for (int i = 0; i < kPoints; ++i)
      taus.push_back(-span + 2.0 * span * static_cast<double>(i) / (kPoints - 1));
  }

  HomScanResult result;
  result.rows = optics::hom_scan(taus, cfg.hom.model(), cfg.hom.analysis());
  double lo = result.rows.front().second, hi = lo;
  for (const auto& [tau, rate] : result.rows) {
    lo = std::min(lo, rate);
    hi = std::max(hi, rate);
  }
  result.visibility = hi > 0.0 ? (hi - lo) / hi : 0.0;
  return result;
}

ReconstructionResult run_reconstruct(const tomo::TomographyDataset& dataset, const ProgramSetting& target,
                                     const ExperimentConfig& cfg) {
  tomo::TomographyDataset data = dataset;
  data.program = target;
  if (data.rateCalibration <= 0.0) data.rateCalibration = cfg.rateCalibration;
  data.validate();

  ReconstructionResult result;
  result.target = target;
  result.mle = tomo::mle_reconstruct(data, cfg.effective_mle());
  const ChoiMatrix targetChoi = ideal_choi(target);
  result.fidelityRaw = metrics::process_fidelity(result.mle.chi, targetChoi);
  result.effectivePhase = metrics::effective_phase(result.mle.chi);

  if (cfg.compensationDeltaPhi) {
    result.compensationOffsetUsed = *cfg.compensationDeltaPhi;
  } else if (target.mode == ProgramSetting::Mode::Phase && result.effectivePhase) {
    // Single dataset: the point's own offset plays the role of the fit.
    double diff = *result.effectivePhase - target.angle;
    while (diff > std::numbers::pi) diff -= 2.0 * std::numbers::pi;
    while (diff <= -std::numbers::pi) diff += 2.0 * std::numbers::pi;
    result.compensationOffsetUsed = diff;
  } else {
    result.compensationOffsetUsed = 0.0;
  }
  const ChoiMatrix compensated = result.compensationOffsetUsed == 0.0
                                     ? result.mle.chi
                                     : metrics::compensate_choi(result.mle.chi, result.compensationOffsetUsed);
  result.fidelityCompensated = metrics::process_fidelity(compensated, targetChoi);
  result.successProbability = mean_success_probability(rate_anchored(result.mle.chi, data));
  return result;
}

void run_simulate(const ExperimentConfig& cfg, const ProgramSetting& program, std::uint64_t datasetIndex,
                  const std::filesystem::path& outFile) {
  const KrausOp kraus = optics::effective_kraus(program, cfg.pbs());
  const tomo::TomographyDataset data = tomo::simulate_counts(
      kraus, program, cfg.exposure, cfg.rateCalibration, cfg.seed, datasetIndex, cfg.noiseless);
  io::write_dataset(outFile, data);
}

}  // namespace pgate::pipeline
