// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace pgate::config {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& value, const std::string& context) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(context + ": expected a number, got '" + value + "'");
  }
}

bool parse_bool(const std::string& value, const std::string& context) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(context + ": expected true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& value, const std::string& context) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(context + ": empty list element");
    out.push_back(parse_double(item, context));
  }
  if (out.empty()) throw ConfigError(context + ": empty list");
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += fmt(v[i]);
  }
  return s;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
  phaseGrid.reserve(8);
  for (int k = 0; k < 8; ++k) phaseGrid.push_back(k * std::numbers::pi / 4.0);
  thetaGrid.reserve(9);
  for (int n = 0; n <= 8; ++n) thetaGrid.push_back(n * std::numbers::pi / 16.0);
}

optics::PbsModel ExperimentConfig::pbs() const {
  if (pbsIdeal) {
    optics::PbsModel m = optics::PbsModel::ideal();
    m.deltaPhi = pbsDeltaPhi;
    return m;
  }
  return optics::PbsModel::from_reflectances(pbsReflectanceH, pbsReflectanceV, pbsDeltaPhi);
}

tomo::MleOptions ExperimentConfig::effective_mle() const {
  tomo::MleOptions opts = mle;
  if (noiseless && opts.stepTolerance == 0.0) opts.stepTolerance = 1e-11;
  return opts;
}

std::string ExperimentConfig::serialize() const {
  std::string s;
  s += "pbs.ideal = " + std::string(pbsIdeal ? "true" : "false") + "\n";
  s += "pbs.reflectance_h = " + fmt(pbsReflectanceH) + "\n";
  s += "pbs.reflectance_v = " + fmt(pbsReflectanceV) + "\n";
  s += "pbs.delta_phi = " + fmt(pbsDeltaPhi) + "\n";
  s += "exposure_s = " + fmt(exposure) + "\n";
  s += "rate_calibration = " + fmt(rateCalibration) + "\n";
  s += "seed = " + std::to_string(seed) + "\n";
  s += "noiseless = " + std::string(noiseless ? "true" : "false") + "\n";
  s += "phase_grid = " + join(phaseGrid) + "\n";
  s += "theta_grid = " + join(thetaGrid) + "\n";
  s += "mle.max_iter = " + std::to_string(mle.maxIterations) + "\n";
  s += "mle.tol = " + fmt(mle.tolerance) + "\n";
  s += "mle.dilution = " + join(mle.dilution) + "\n";
  s += "mle.prob_floor = " + fmt(mle.probabilityFloor) + "\n";
  if (mle.stepTolerance > 0.0) s += "mle.step_tol = " + fmt(mle.stepTolerance) + "\n";
  s += "hom.overlap = " + fmt(hom.overlap) + "\n";
  s += "hom.coherence_time_s = " + fmt(hom.coherenceTime) + "\n";
  s += "hom.baseline_rate = " + fmt(hom.baselineRate) + "\n";
  s += "hom.analysis_reflectance_h = " + fmt(hom.analysisReflectanceH) + "\n";
  s += "hom.analysis_transmittance_v = " + fmt(hom.analysisTransmittanceV) + "\n";
  if (compensationDeltaPhi) s += "compensation_delta_phi = " + fmt(*compensationDeltaPhi) + "\n";
  return s;
}

ExperimentConfig ExperimentConfig::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path.string());
}

ExperimentConfig ExperimentConfig::parse_string(const std::string& text, const std::string& originName) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(ss, line)) {
    ++lineNo;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    const std::string context = originName + ":" + std::to_string(lineNo);
    if (eq == std::string::npos) throw ConfigError(context + ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) throw ConfigError(context + ": expected 'key = value'");

    if (key == "pbs.ideal") cfg.pbsIdeal = parse_bool(value, context);
    else if (key == "pbs.reflectance_h") cfg.pbsReflectanceH = parse_double(value, context);
    else if (key == "pbs.reflectance_v") cfg.pbsReflectanceV = parse_double(value, context);
    else if (key == "pbs.delta_phi") cfg.pbsDeltaPhi = parse_double(value, context);
    else if (key == "exposure_s") cfg.exposure = parse_double(value, context);
    else if (key == "rate_calibration") cfg.rateCalibration = parse_double(value, context);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_double(value, context));
    else if (key == "noiseless") cfg.noiseless = parse_bool(value, context);
    else if (key == "phase_grid") cfg.phaseGrid = parse_list(value, context);
    else if (key == "theta_grid") cfg.thetaGrid = parse_list(value, context);
    else if (key == "mle.max_iter") cfg.mle.maxIterations = static_cast<int>(parse_double(value, context));
    else if (key == "mle.tol") cfg.mle.tolerance = parse_double(value, context);
    else if (key == "mle.dilution") cfg.mle.dilution = parse_list(value, context);
    else if (key == "mle.prob_floor") cfg.mle.probabilityFloor = parse_double(value, context);
    else if (key == "mle.step_tol") cfg.mle.stepTolerance = parse_double(value, context);
    else if (key == "hom.overlap") cfg.hom.overlap = parse_double(value, context);
    else if (key == "hom.coherence_time_s") cfg.hom.coherenceTime = parse_double(value, context);
    else if (key == "hom.baseline_rate") cfg.hom.baselineRate = parse_double(value, context);
    else if (key == "hom.analysis_reflectance_h") cfg.hom.analysisReflectanceH = parse_double(value, context);
    else if (key == "hom.analysis_transmittance_v") cfg.hom.analysisTransmittanceV = parse_double(value, context);
    else if (key == "compensation_delta_phi") cfg.compensationDeltaPhi = parse_double(value, context);
    else throw ConfigError(context + ": unknown key '" + key + "'");
  }
  return cfg;
}

}  // namespace pgate::config
