// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "pgate/pipeline.hpp"

// Machine-readable report emission. Every writer is deterministic: identical
// inputs produce byte-identical files (doubles printed with %.17g, no
// timestamps, fixed key order).
//
// Phase sweeps emit fig2_choi.csv (reconstructed process matrices),
// fig3_phase.csv (effective vs programmed phase), fig4_fidelity.csv
// (per-point figures of merit), summary.json and effective_config.txt.
// Filter sweeps emit fig5_filter.csv plus summary and config echo; HOM scans
// emit hom_scan.csv; reconstructions emit reconstruction.json with the 16
// complex process-matrix entries (row-major, input (x) output order) and the
// estimation metadata.

namespace pgate::report {

void write_phase_sweep(const std::filesystem::path& outDir, const pipeline::SweepReport& report,
                       const config::ExperimentConfig& cfg);

void write_filter_sweep(const std::filesystem::path& outDir, const pipeline::SweepReport& report,
                        const config::ExperimentConfig& cfg);

void write_hom_scan(const std::filesystem::path& outDir, const pipeline::HomScanResult& result,
                    const config::ExperimentConfig& cfg);

void write_reconstruction(const std::filesystem::path& outDir, const pipeline::ReconstructionResult& result,
                          const config::ExperimentConfig& cfg);

}  // namespace pgate::report
