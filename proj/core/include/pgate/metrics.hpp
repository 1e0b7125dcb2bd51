// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "pgate/optics.hpp"
#include "pgate/qmath.hpp"

// Figures of merit and calibration: process fidelity against the rank-1
// ideal processes, effective-phase extraction, offset fitting with
// unwrapping, software compensation and state fidelities.

namespace pgate::metrics {

using optics::KrausOp;
using optics::PolKet;

// chi_id(phi) = (1 (x) U(phi)) |Phi+><Phi+| (1 (x) U(phi)'), trace 2.
ChoiMatrix ideal_choi_phase(double phi);

// (cos(theta)|HH> + sin(theta)|VV>)(h.c.), trace 1.
ChoiMatrix ideal_choi_filter(double theta);

// Tr[chi chi_id] / (Tr[chi] Tr[chi_id]); scale-invariant in both arguments.
// Throws std::invalid_argument when either trace vanishes.
double process_fidelity(const ChoiMatrix& chi, const ChoiMatrix& chiId);

// The phase maximizing Tr[chi chi_id(phi)] over [0, 2pi). The overlap is
// A + B cos(phi - phi0), so the maximum is the argument of the <VV|chi|HH>
// element; returns nullopt for phase-insensitive processes
// (B <= 1e-12 Tr chi).
std::optional<double> effective_phase(const ChoiMatrix& chi);

// Reference implementation of effective_phase: 1 mrad grid search over the
// overlap plus parabolic refinement. Used to cross-check the closed form.
std::optional<double> effective_phase_scan(const ChoiMatrix& chi);

struct PhaseFit {
  double slope = 0.0;
  double offset = 0.0;               // in (-pi, pi]
  std::vector<double> residuals;     // against the fitted line, per point
};

// Unwraps measured phases to a continuous branch (successive differences
// forced into (-pi, pi]) and fits phiEff = slope * phi + offset by ordinary
// least squares. Requires at least two distinct phi values.
PhaseFit fit_phase_offset(const std::vector<std::pair<double, double>>& points);

// (1 (x) U(-deltaPhi)) chi (1 (x) U(-deltaPhi)'); trace- and PSD-preserving.
ChoiMatrix compensate_choi(const ChoiMatrix& chi, double deltaPhi);

// <psi| rho |psi> / Tr[rho]. Throws when Tr[rho] vanishes.
double state_fidelity(const PolKet& psi, const DensityMatrix2& rho);

// Mean state fidelity between U(phi)|input> and the process output over the
// six canonical inputs. Throws when any heralded output has zero trace.
double average_state_fidelity(const KrausOp& k, double phi);
double average_state_fidelity(const ChoiMatrix& chi, double phi);

// Mean state fidelity of a filter process against the normalized targets
// diag(cos theta, sin theta)|input>; inputs with vanishing target are
// excluded (complete filtering extinguishes them by construction).
double average_state_fidelity_filter(const ChoiMatrix& chi, double theta);

// F_avg = (2 F_chi + 1) / 3, exact for trace-preserving processes.
double horodecki_avg(double processFidelity);

}  // namespace pgate::metrics
