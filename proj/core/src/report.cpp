// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/report.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace pgate::report {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string choi_columns(const std::string& prefix) {
  std::string header;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      header += ',' + prefix + '_' + std::to_string(r) + std::to_string(c) + "_re";
      header += ',' + prefix + '_' + std::to_string(r) + std::to_string(c) + "_im";
    }
  return header;
}

std::string choi_values(const ChoiMatrix& chi) {
  std::string row;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      row += ',' + fmt(chi(r, c).real());
      row += ',' + fmt(chi(r, c).imag());
    }
  return row;
}

ordered_json choi_json(const ChoiMatrix& chi) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (const auto& x : chi.e) {
    re.push_back(x.real());
    im.push_back(x.imag());
  }
  return ordered_json{{"re", re}, {"im", im}};
}

ordered_json config_json(const config::ExperimentConfig& cfg) {
  ordered_json j;
  j["pbs.ideal"] = cfg.pbsIdeal;
  j["pbs.reflectance_h"] = cfg.pbsReflectanceH;
  j["pbs.reflectance_v"] = cfg.pbsReflectanceV;
  j["pbs.delta_phi"] = cfg.pbsDeltaPhi;
  j["exposure_s"] = cfg.exposure;
  j["rate_calibration"] = cfg.rateCalibration;
  j["seed"] = cfg.seed;
  j["noiseless"] = cfg.noiseless;
  j["phase_grid"] = cfg.phaseGrid;
  j["theta_grid"] = cfg.thetaGrid;
  j["mle.max_iter"] = cfg.mle.maxIterations;
  j["mle.tol"] = cfg.mle.tolerance;
  j["mle.dilution"] = cfg.mle.dilution;
  j["mle.prob_floor"] = cfg.mle.probabilityFloor;
  if (cfg.compensationDeltaPhi) j["compensation_delta_phi"] = *cfg.compensationDeltaPhi;
  return j;
}

std::string point_csv_header() {
  return "fidelity_raw,fidelity_compensated,f_avg_raw,f_avg_compensated,success_probability,"
         "mle_iterations,mle_converged,mle_loglik";
}

std::string point_csv_values(const pipeline::PointResult& p) {
  std::string row = fmt(p.fidelityRaw) + ',' + fmt(p.fidelityCompensated) + ',';
  row += p.avgStateFidelityRaw ? fmt(*p.avgStateFidelityRaw) : std::string("nan");
  row += ',';
  row += p.avgStateFidelityCompensated ? fmt(*p.avgStateFidelityCompensated) : std::string("nan");
  row += ',' + fmt(p.successProbability);
  row += ',' + std::to_string(p.mleIterations);
  row += ',' + std::string(p.mleConverged ? "1" : "0");
  row += ',' + fmt(p.finalLogLikelihood);
  return row;
}

ordered_json point_json(const pipeline::PointResult& p, const char* angleKey) {
  ordered_json j;
  j[angleKey] = p.setting.angle;
  j["fidelity_raw"] = p.fidelityRaw;
  j["fidelity_compensated"] = p.fidelityCompensated;
  if (p.effectivePhase) j["phi_eff"] = *p.effectivePhase;
  if (p.avgStateFidelityRaw) j["f_avg_raw"] = *p.avgStateFidelityRaw;
  if (p.avgStateFidelityCompensated) j["f_avg_compensated"] = *p.avgStateFidelityCompensated;
  j["success_probability"] = p.successProbability;
  j["mle_iterations"] = p.mleIterations;
  j["mle_converged"] = p.mleConverged;
  j["mle_loglik"] = p.finalLogLikelihood;
  return j;
}

ordered_json sweep_summary(const pipeline::SweepReport& report, const config::ExperimentConfig& cfg,
                           const char* mode, const char* angleKey) {
  ordered_json j;
  j["tool"] = "pgate";
  j["mode"] = mode;
  j["mean_fidelity_raw"] = report.meanFidelityRaw;
  j["mean_fidelity_compensated"] = report.meanFidelityCompensated;
  j["mean_compensation_gain"] = report.meanCompensationGain;
  j["fitted_slope"] = report.fittedSlope;
  j["fitted_delta_phi"] = report.fittedOffset;
  j["compensation_delta_phi_used"] = report.compensationOffsetUsed;
  if (report.favgRegressionSlope) {
    j["f_avg_vs_f_chi_slope"] = *report.favgRegressionSlope;
    j["f_avg_vs_f_chi_intercept"] = *report.favgRegressionIntercept;
  }
  j["probability_floor"] = report.points.empty() ? 0.0 : report.points.front().probabilityFloor;
  j["seed"] = cfg.seed;
  ordered_json points = ordered_json::array();
  for (const auto& p : report.points) points.push_back(point_json(p, angleKey));
  j["points"] = points;
  j["config"] = config_json(cfg);
  return j;
}

}  // namespace

void write_phase_sweep(const std::filesystem::path& outDir, const pipeline::SweepReport& report,
                       const config::ExperimentConfig& cfg) {
  std::string choi = "index,phi" + choi_columns("chi_raw") + choi_columns("chi_comp") + "\n";
  std::string phase = "phi,phi_eff,phi_eff_defined\n";
  std::string fidelity = "phi," + point_csv_header() + "\n";
  for (std::size_t i = 0; i < report.points.size(); ++i) {
    const auto& p = report.points[i];
    choi += std::to_string(i) + ',' + fmt(p.setting.angle) + choi_values(p.chiRaw) +
            choi_values(p.chiCompensated) + '\n';
    phase += fmt(p.setting.angle) + ',' + (p.effectivePhase ? fmt(*p.effectivePhase) : std::string("nan")) +
             ',' + (p.effectivePhase ? "1" : "0") + '\n';
    fidelity += fmt(p.setting.angle) + ',' + point_csv_values(p) + '\n';
  }
  write_file(outDir / "fig2_choi.csv", choi);
  write_file(outDir / "fig3_phase.csv", phase);
  write_file(outDir / "fig4_fidelity.csv", fidelity);
  write_file(outDir / "summary.json", sweep_summary(report, cfg, "sweep-phase", "phi").dump(2) + "\n");
  write_file(outDir / "effective_config.txt", cfg.serialize());
}

void write_filter_sweep(const std::filesystem::path& outDir, const pipeline::SweepReport& report,
                        const config::ExperimentConfig& cfg) {
  std::string filter = "theta," + point_csv_header() + "\n";
  for (const auto& p : report.points) filter += fmt(p.setting.angle) + ',' + point_csv_values(p) + '\n';
  write_file(outDir / "fig5_filter.csv", filter);
  write_file(outDir / "summary.json", sweep_summary(report, cfg, "sweep-filter", "theta").dump(2) + "\n");
  write_file(outDir / "effective_config.txt", cfg.serialize());
}

void write_hom_scan(const std::filesystem::path& outDir, const pipeline::HomScanResult& result,
                    const config::ExperimentConfig& cfg) {
  std::string csv = "delay_s,rate_hz\n";
  for (const auto& [tau, rate] : result.rows) csv += fmt(tau) + ',' + fmt(rate) + '\n';
  write_file(outDir / "hom_scan.csv", csv);

  ordered_json j;
  j["tool"] = "pgate";
  j["mode"] = "hom-scan";
  j["visibility"] = result.visibility;
  j["hom.overlap"] = cfg.hom.overlap;
  j["hom.coherence_time_s"] = cfg.hom.coherenceTime;
  j["hom.baseline_rate"] = cfg.hom.baselineRate;
  j["hom.analysis_reflectance_h"] = cfg.hom.analysisReflectanceH;
  j["hom.analysis_transmittance_v"] = cfg.hom.analysisTransmittanceV;
  write_file(outDir / "hom_summary.json", j.dump(2) + "\n");
  write_file(outDir / "effective_config.txt", cfg.serialize());
}

void write_reconstruction(const std::filesystem::path& outDir, const pipeline::ReconstructionResult& result,
                          const config::ExperimentConfig& cfg) {
  ordered_json j;
  j["tool"] = "pgate";
  j["mode"] = "reconstruct";
  j["target"] = result.target.mode == optics::ProgramSetting::Mode::Phase ? "phase" : "filter";
  j["target_angle"] = result.target.angle;
  j["chi"] = choi_json(result.mle.chi);
  j["iterations"] = result.mle.iterations;
  j["converged"] = result.mle.converged;
  j["final_loglikelihood"] = result.mle.logLikelihoodTrace.back();
  j["probability_floor"] = result.mle.probabilityFloor;
  j["seed"] = cfg.seed;
  j["fidelity_raw"] = result.fidelityRaw;
  j["fidelity_compensated"] = result.fidelityCompensated;
  if (result.effectivePhase) j["phi_eff"] = *result.effectivePhase;
  j["compensation_delta_phi_used"] = result.compensationOffsetUsed;
  j["success_probability"] = result.successProbability;
  j["config"] = config_json(cfg);
  write_file(outDir / "reconstruction.json", j.dump(2) + "\n");
}

}  // namespace pgate::report
