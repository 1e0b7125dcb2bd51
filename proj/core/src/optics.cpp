// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pgate::optics {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490392848;
}

double PolKet::norm2() const { return std::norm(aH) + std::norm(aV); }

bool PolKet::is_normalized(double tol) const { return std::abs(norm2() - 1.0) <= tol; }

PolKet ket_plus() { return {kInvSqrt2, kInvSqrt2}; }
PolKet ket_minus() { return {kInvSqrt2, -kInvSqrt2}; }
PolKet ket_r() { return {kInvSqrt2, Complex(0.0, kInvSqrt2)}; }
PolKet ket_l() { return {kInvSqrt2, Complex(0.0, -kInvSqrt2)}; }

PbsModel PbsModel::from_reflectances(double reflectanceH, double reflectanceV, double deltaPhi) {
  if (reflectanceH < 0.0 || reflectanceH > 1.0 || reflectanceV < 0.0 || reflectanceV > 1.0)
    throw std::invalid_argument("PbsModel: reflectances must lie in [0, 1]");
  PbsModel m;
  m.rH = std::sqrt(reflectanceH);
  m.tH = std::sqrt(1.0 - reflectanceH);
  m.rV = std::sqrt(reflectanceV);
  m.tV = std::sqrt(1.0 - reflectanceV);
  m.deltaPhi = deltaPhi;
  return m;
}

bool PbsModel::is_lossless(double tol) const {
  return std::abs(tH * tH + rH * rH - 1.0) <= tol && std::abs(tV * tV + rV * rV - 1.0) <= tol;
}

Complex CoincidenceTable::a(int dataPol, int programPol) const {
  if (dataPol == 0) return programPol == 0 ? hh : hv;
  return programPol == 0 ? vh : vv;
}

double CoincidenceTable::total_weight() const {
  return std::norm(hh) + std::norm(hv) + std::norm(vh) + std::norm(vv);
}

Mat2 ideal_phase_unitary(double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("ideal_phase_unitary: phi must be finite");
  Mat2 u;
  u(0, 0) = 1.0;
  u(1, 1) = std::polar(1.0, phi);
  return u;
}

PolKet program_ket(const ProgramSetting& setting) {
  if (!std::isfinite(setting.angle)) throw std::invalid_argument("program_ket: angle must be finite");
  if (setting.mode == ProgramSetting::Mode::Phase) {
    return {kInvSqrt2, std::polar(kInvSqrt2, setting.angle)};
  }
  return {std::cos(setting.angle), std::sin(setting.angle)};
}

CoincidenceTable pbs_coincidence(const PolKet& data, const PolKet& program, const PbsModel& pbs) {
  if (!data.is_normalized() || !program.is_normalized())
    throw std::invalid_argument("pbs_coincidence: input kets must be normalized");

  const double tH = pbs.tH, rH = pbs.rH, tV = pbs.tV, rV = pbs.rV;
  // Two amplitudes reach every kept outcome: both photons transmitted or both
  // reflected. Reflection carries phase i, so the both-reflected path enters
  // with -r_x r_y; the data-output V mode carries the fixed pi phase.
  CoincidenceTable out;
  out.hh = data.aH * program.aH * (tH * tH - rH * rH);
  out.vv = data.aV * program.aV * (rV * rV - tV * tV);
  out.hv = data.aH * program.aV * tH * tV - data.aV * program.aH * rH * rV;
  out.vh = data.aH * program.aV * rH * rV - data.aV * program.aH * tH * tV;
  return out;
}

KrausOp effective_kraus(const ProgramSetting& setting, const PbsModel& pbs) {
  const PolKet program = program_ket(setting);
  const Complex heraldPhase = std::polar(1.0, pbs.deltaPhi);

  KrausOp k;
  const PolKet basis[2] = {ket_h(), ket_v()};
  for (int in = 0; in < 2; ++in) {
    const CoincidenceTable t = pbs_coincidence(basis[in], program, pbs);
    // <+| on the program output port.
    k.m(0, in) = (t.a(0, 0) + t.a(0, 1)) * kInvSqrt2;
    k.m(1, in) = (t.a(1, 0) + t.a(1, 1)) * kInvSqrt2 * heraldPhase;
  }
  return k;
}

ChoiMatrix choi_from_kraus(const KrausOp& k) {
  qmath::Vec4 v;
  for (std::size_t in = 0; in < 2; ++in)
    for (std::size_t out = 0; out < 2; ++out) v[2 * in + out] = k.m(out, in);
  return qmath::outer(v, v);
}

DensityMatrix2 apply_process(const ChoiMatrix& chi, const DensityMatrix2& rho) {
  return qmath::partial_trace_in(qmath::kron(qmath::transpose(rho), qmath::identity<2>()) * chi);
}

double success_probability(const KrausOp& k, const DensityMatrix2& rho) {
  return qmath::trace(k.m * rho * qmath::adjoint(k.m)).real();
}

double hom_analysis_visibility(const PbsModel& analysis) {
  const double tH2 = analysis.tH * analysis.tH;
  const double rH2 = analysis.rH * analysis.rH;
  const double tV2 = analysis.tV * analysis.tV;
  const double rV2 = analysis.rV * analysis.rV;
  // Coincidence probability across the splitter for two orthogonally
  // polarized photons analyzed in the 45-degree basis: fully overlapped vs
  // distinguishable.
  const double pDip = tH2 * rH2 + tV2 * rV2;
  const double pBaseline = 0.5 * (tH2 + tV2) * (rH2 + rV2);
  if (pBaseline <= 0.0) return 0.0;
  return 1.0 - pDip / pBaseline;
}

std::vector<std::pair<double, double>> hom_scan(const std::vector<double>& delays, const HomModel& hom,
                                                const PbsModel& analysis) {
  if (!(hom.coherenceTime > 0.0)) throw std::invalid_argument("hom_scan: coherenceTime must be positive");
  if (hom.overlap < 0.0 || hom.overlap > 1.0) throw std::invalid_argument("hom_scan: overlap must lie in [0, 1]");
  const double visibility = hom.overlap * hom_analysis_visibility(analysis);
  std::vector<std::pair<double, double>> rows;
  rows.reserve(delays.size());
  for (double tau : delays) {
    const double x = tau / hom.coherenceTime;
    const double rate = hom.baselineRate * (1.0 - visibility * std::exp(-0.5 * x * x));
    rows.emplace_back(tau, rate);
  }
  return rows;
}

}  // namespace pgate::optics
