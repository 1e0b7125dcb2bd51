// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "pgate/qmath.hpp"

// Physical model of the heralded programmable gate: two photons (data and
// program) interfere on a polarizing beam splitter, exactly one photon is
// kept per output port, and the program output is projected onto |+>. The
// surviving data photon then carries K|psi> for an effective 2x2 operator K.
//
// PBS mode convention: for each polarization the two spatial modes undergo a
// lossless 2x2 transformation with real transmission t and reflection r and
// a phase i on reflection. On top of that the vertical mode of the data
// output port carries a fixed pi phase, chosen so the ideal PBS yields the
// conventional conditional state A(H,H) = aH pH, A(V,V) = aV pV. All residual
// phase freedom of a real splitter is a single observable combination and is
// modeled by PbsModel::deltaPhi, applied as diag(1, e^{i deltaPhi}) on the
// heralded data output.

namespace pgate {

// Choi (process) matrix on H_in (x) H_out, input factor first:
// rho_out = Tr_in[(rho_in^T (x) 1_out) chi].
using ChoiMatrix = qmath::Mat4;
using DensityMatrix2 = qmath::Mat2;

namespace optics {

using qmath::Complex;
using qmath::Mat2;
using qmath::Mat4;

// Pure single-photon polarization state over {H, V}.
struct PolKet {
  Complex aH{};
  Complex aV{};

  double norm2() const;
  bool is_normalized(double tol = 1e-12) const;
};

inline PolKet ket_h() { return {1.0, 0.0}; }
inline PolKet ket_v() { return {0.0, 1.0}; }
PolKet ket_plus();
PolKet ket_minus();
PolKet ket_r();
PolKet ket_l();

// Program register content: Phase(phi) applies U(phi) = diag(1, e^{i phi});
// Filter(theta) attenuates V relative to H by tan(theta).
struct ProgramSetting {
  enum class Mode { Phase, Filter };
  Mode mode = Mode::Phase;
  double angle = 0.0;

  static ProgramSetting phase(double phi) { return {Mode::Phase, phi}; }
  static ProgramSetting filter(double theta) { return {Mode::Filter, theta}; }
};

// Lossless PBS with per-polarization amplitude transmission/reflection plus
// the effective phase offset between the output polarizations.
struct PbsModel {
  double tH = 1.0;
  double rH = 0.0;
  double tV = 0.0;
  double rV = 1.0;
  double deltaPhi = 0.0;

  static PbsModel ideal() { return {}; }
  // Intensity reflectances; amplitudes are the square roots.
  static PbsModel from_reflectances(double reflectanceH, double reflectanceV, double deltaPhi);

  bool is_lossless(double tol = 1e-12) const;
};

// Post-selected two-photon amplitudes: a(x, y) is the amplitude for
// polarization x in the data output port and y in the program output port.
struct CoincidenceTable {
  Complex hh{}, hv{}, vh{}, vv{};

  Complex a(int dataPol, int programPol) const;
  double total_weight() const;  // sum |a|^2, <= 1 after post-selection
};

struct KrausOp {
  Mat2 m{};
};

// Hong-Ou-Mandel dip model: overlap is the mode indistinguishability,
// coherenceTime sets the Gaussian dip width, baselineRate the far-delay
// coincidence rate.
struct HomModel {
  double overlap = 1.0;
  double coherenceTime = 0.0;
  double baselineRate = 0.0;
};

// U(phi) = diag(1, e^{i phi}).
Mat2 ideal_phase_unitary(double phi);

// Expands a ProgramSetting into the program photon polarization state.
PolKet program_ket(const ProgramSetting& setting);

// Scatters (data, program) through the PBS and keeps the amplitudes with
// exactly one photon in each output port. Both kets must be normalized.
CoincidenceTable pbs_coincidence(const PolKet& data, const PolKet& program, const PbsModel& pbs);

// The effective operator mapping data input amplitudes to heralded data
// output amplitudes: basis inputs through pbs_coincidence, program index
// contracted with <+|, then diag(1, e^{i deltaPhi}) on the output.
// Ideal PBS with Phase(phi) gives K = U(phi)/2.
KrausOp effective_kraus(const ProgramSetting& setting, const PbsModel& pbs);

// chi = (1 (x) K) |Phi+><Phi+| (1 (x) K'), with unnormalized
// |Phi+> = |HH> + |VV>. Rank 1, PSD, trace Tr[K'K].
ChoiMatrix choi_from_kraus(const KrausOp& k);

// rho_out = Tr_in[(rho^T (x) 1) chi]; the output trace is the heralded
// success probability.
DensityMatrix2 apply_process(const ChoiMatrix& chi, const DensityMatrix2& rho);

// Tr[K rho K'].
double success_probability(const KrausOp& k, const DensityMatrix2& rho);

// HOM dip visibility of the analysis stage alone: two photons with mutually
// orthogonal polarizations in one spatial mode, analyzed in the basis rotated
// 45 degrees from the splitter axes. 1 for an ideal splitter. The main PBS
// drops out of this ratio, so the argument models the analyzing splitter.
double hom_analysis_visibility(const PbsModel& analysis);

// rate(tau) = baselineRate * (1 - V exp(-tau^2 / (2 coherenceTime^2))) with
// V = overlap * hom_analysis_visibility(analysis).
std::vector<std::pair<double, double>> hom_scan(const std::vector<double>& delays, const HomModel& hom,
                                                const PbsModel& analysis);

}  // namespace optics
}  // namespace pgate
