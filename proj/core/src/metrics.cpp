// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/metrics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pgate/tomo.hpp"

namespace pgate::metrics {

using qmath::Complex;
using qmath::Mat2;
using qmath::Mat4;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_to_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double wrap_to_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r > std::numbers::pi) r -= kTwoPi;
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

ChoiMatrix choi_of_diag(Complex h, Complex v) {
  // (h|HH> + v|VV>)(h.c.) in the 2*in + out ordering.
  qmath::Vec4 vec;
  vec[0] = h;
  vec[3] = v;
  return qmath::outer(vec, vec);
}

}  // namespace

ChoiMatrix ideal_choi_phase(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("ideal_choi_phase: phi must be finite");
  return choi_of_diag(1.0, std::polar(1.0, phi));
}

ChoiMatrix ideal_choi_filter(double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("ideal_choi_filter: theta must be finite");
  return choi_of_diag(std::cos(theta), std::sin(theta));
}

double process_fidelity(const ChoiMatrix& chi, const ChoiMatrix& chiId) {
  const double trChi = qmath::trace(chi).real();
  const double trId = qmath::trace(chiId).real();
  if (!(trChi > 0.0) || !(trId > 0.0)) throw std::invalid_argument("process_fidelity: zero-trace process");
  return qmath::trace(chi * chiId).real() / (trChi * trId);
}

std::optional<double> effective_phase(const ChoiMatrix& chi) {
  const Complex coherence = chi(0, 3);  // <HH| chi |VV>
  const double amplitude = 2.0 * std::abs(coherence);
  if (amplitude <= 1e-12 * qmath::trace(chi).real()) return std::nullopt;
  return wrap_to_2pi(-std::arg(coherence));
}

std::optional<double> effective_phase_scan(const ChoiMatrix& chi) {
  const auto overlap = [&](double phi) { return qmath::trace(chi * ideal_choi_phase(phi)).real(); };

  constexpr int kSteps = 6284;  // ~1 mrad
  double bestPhi = 0.0;
  double bestVal = overlap(0.0);
  double minVal = bestVal;
  const double step = kTwoPi / kSteps;
  for (int i = 1; i < kSteps; ++i) {
    const double v = overlap(i * step);
    if (v > bestVal) {
      bestVal = v;
      bestPhi = i * step;
    }
    minVal = std::min(minVal, v);
  }
  if (bestVal - minVal <= 2e-12 * qmath::trace(chi).real()) return std::nullopt;

  // Parabolic refinement on the three samples around the best grid point.
  const double ym = overlap(bestPhi - step);
  const double yp = overlap(bestPhi + step);
  const double denom = ym - 2.0 * bestVal + yp;
  double refined = bestPhi;
  if (denom < 0.0) refined += 0.5 * step * (ym - yp) / denom;
  return wrap_to_2pi(refined);
}

PhaseFit fit_phase_offset(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("fit_phase_offset: need at least two points");

  std::vector<double> phi(points.size());
  std::vector<double> eff(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    phi[i] = points[i].first;
    eff[i] = points[i].second;
  }
  for (std::size_t i = 1; i < eff.size(); ++i) eff[i] = eff[i - 1] + wrap_to_pi(eff[i] - eff[i - 1]);

  double meanPhi = 0.0, meanEff = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    meanPhi += phi[i];
    meanEff += eff[i];
  }
  meanPhi /= static_cast<double>(phi.size());
  meanEff /= static_cast<double>(phi.size());

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    sxx += (phi[i] - meanPhi) * (phi[i] - meanPhi);
    sxy += (phi[i] - meanPhi) * (eff[i] - meanEff);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_phase_offset: all phi values identical");

  PhaseFit fit;
  fit.slope = sxy / sxx;
  const double rawOffset = meanEff - fit.slope * meanPhi;
  fit.offset = wrap_to_pi(rawOffset);
  fit.residuals.resize(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) fit.residuals[i] = eff[i] - (fit.slope * phi[i] + rawOffset);
  return fit;
}

ChoiMatrix compensate_choi(const ChoiMatrix& chi, double deltaPhi) {
  const Mat4 corr = qmath::kron(qmath::identity<2>(), optics::ideal_phase_unitary(-deltaPhi));
  return corr * chi * qmath::adjoint(corr);
}

double state_fidelity(const PolKet& psi, const DensityMatrix2& rho) {
  const double tr = qmath::trace(rho).real();
  if (!(tr > 0.0)) throw std::invalid_argument("state_fidelity: zero-trace state");
  const qmath::Vec2 v{{psi.aH, psi.aV}};
  return (qmath::dot(v, rho * v)).real() / tr;
}

namespace {

double average_fidelity_impl(const ChoiMatrix& chi, const Mat2& target, bool skipExtinct) {
  double sum = 0.0;
  int used = 0;
  for (const PolKet& input : tomo::canonical_states()) {
    const qmath::Vec2 in{{input.aH, input.aV}};
    qmath::Vec2 tgt = target * in;
    const double tgtNorm = qmath::norm2(tgt);
    if (tgtNorm <= 1e-15) {
      if (skipExtinct) continue;
      throw std::invalid_argument("average_state_fidelity: target state vanishes for an input");
    }
    const double invNorm = 1.0 / std::sqrt(tgtNorm);
    const PolKet psi{tgt[0] * invNorm, tgt[1] * invNorm};
    sum += state_fidelity(psi, optics::apply_process(chi, qmath::outer(in, in)));
    ++used;
  }
  return sum / used;
}

}  // namespace

double average_state_fidelity(const KrausOp& k, double phi) {
  return average_state_fidelity(optics::choi_from_kraus(k), phi);
}

double average_state_fidelity(const ChoiMatrix& chi, double phi) {
  return average_fidelity_impl(chi, optics::ideal_phase_unitary(phi), false);
}

double average_state_fidelity_filter(const ChoiMatrix& chi, double theta) {
  Mat2 target;
  target(0, 0) = std::cos(theta);
  target(1, 1) = std::sin(theta);
  return average_fidelity_impl(chi, target, true);
}

double horodecki_avg(double processFidelity) {
  if (processFidelity < 0.0 || processFidelity > 1.0)
    throw std::invalid_argument("horodecki_avg: fidelity must lie in [0, 1]");
  return (2.0 * processFidelity + 1.0) / 3.0;
}

}  // namespace pgate::metrics
