// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

// Batch front end for the programmable-gate simulator: sweeps, HOM scan,
// dataset simulation and file-driven reconstruction. Subcommands write
// plot-ready tables and a JSON summary into --out.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pgate/config.hpp"
#include "pgate/dataset_io.hpp"
#include "pgate/pipeline.hpp"
#include "pgate/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  std::string configPath;
  std::string outDir = "pgate-out";
  bool outDirSet = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> deltaPhi;
  bool noiseless = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.configPath, "Configuration file (key = value lines)");
  cmd->add_option("--seed", args.seed, "RNG seed");
  cmd->add_option("--out", args.outDir, "Output directory")->each([&args](const std::string&) {
    args.outDirSet = true;
  });
  cmd->add_option("--delta-phi", args.deltaPhi, "Compensation offset override [rad]");
  cmd->add_flag("--noiseless", args.noiseless, "Exact expected frequencies instead of Poisson counts");
}

pgate::config::ExperimentConfig load_config(const CommonArgs& args) {
  pgate::config::ExperimentConfig cfg;
  if (!args.configPath.empty())
    cfg = pgate::config::ExperimentConfig::parse_file(args.configPath);
  if (args.seed) cfg.seed = *args.seed;
  if (args.noiseless) cfg.noiseless = true;
  if (args.deltaPhi) cfg.compensationDeltaPhi = *args.deltaPhi;
  // PGATE_OUT, when set, overrides the default output directory only.
  return cfg;
}

std::filesystem::path out_dir(const CommonArgs& args) {
  if (args.outDirSet) return args.outDir;
  if (const char* env = std::getenv("PGATE_OUT")) return env;
  return args.outDir;
}

void print_sweep(const pgate::pipeline::SweepReport& report, const char* label) {
  std::printf("%s: %zu points\n", label, report.points.size());
  std::printf("  mean fidelity raw/compensated: %.6f / %.6f (gain %.4f pp)\n", report.meanFidelityRaw,
              report.meanFidelityCompensated, 100.0 * report.meanCompensationGain);
  std::printf("  fitted slope %.6f, fitted delta-phi %.6f rad, compensation used %.6f rad\n",
              report.fittedSlope, report.fittedOffset, report.compensationOffsetUsed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Programmable single-qubit phase gate / polarization filter simulator"};
  app.require_subcommand(1);

  CommonArgs sweepPhaseArgs, sweepFilterArgs, homArgs, reconstructArgs, simulateArgs;

  auto* sweepPhase = app.add_subcommand("sweep-phase", "Tomography sweep over the phase grid");
  add_common(sweepPhase, sweepPhaseArgs);

  auto* sweepFilter = app.add_subcommand("sweep-filter", "Tomography sweep over the filter grid");
  add_common(sweepFilter, sweepFilterArgs);

  auto* homScan = app.add_subcommand("hom-scan", "Hong-Ou-Mandel dip scan");
  add_common(homScan, homArgs);

  auto* reconstruct = app.add_subcommand("reconstruct", "MLE reconstruction from a dataset file");
  add_common(reconstruct, reconstructArgs);
  std::string datasetPath;
  std::optional<double> targetPhase, targetTheta;
  reconstruct->add_option("dataset", datasetPath, "Dataset CSV file")->required();
  auto* optPhase = reconstruct->add_option("--target-phase", targetPhase, "Target Phase(phi) [rad]");
  auto* optTheta = reconstruct->add_option("--target-theta", targetTheta, "Target Filter(theta) [rad]");
  optPhase->excludes(optTheta);

  auto* simulate = app.add_subcommand("simulate", "Emit a simulated dataset file");
  add_common(simulate, simulateArgs);
  std::optional<double> simPhase, simTheta;
  std::uint64_t datasetIndex = 0;
  std::string outFile = "dataset.csv";
  auto* simPhaseOpt = simulate->add_option("--phi", simPhase, "Program Phase(phi) [rad]");
  auto* simThetaOpt = simulate->add_option("--theta", simTheta, "Program Filter(theta) [rad]");
  simPhaseOpt->excludes(simThetaOpt);
  simulate->add_option("--dataset-index", datasetIndex,
                       "RNG dataset index (phase sweep point k uses k, filter point n uses 1000 + n)");
  simulate->add_option("--out-file", outFile, "Output dataset path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sweepPhase->parsed()) {
      const auto cfg = load_config(sweepPhaseArgs);
      const auto report = pgate::pipeline::run_sweep_phase(cfg);
      pgate::report::write_phase_sweep(out_dir(sweepPhaseArgs), report, cfg);
      print_sweep(report, "sweep-phase");
      if (!report.any_converged()) {
        std::fprintf(stderr, "error: no sweep point converged\n");
        return kExitNumerical;
      }
      return kExitOk;
    }
    if (sweepFilter->parsed()) {
      const auto cfg = load_config(sweepFilterArgs);
      const auto report = pgate::pipeline::run_sweep_filter(cfg);
      pgate::report::write_filter_sweep(out_dir(sweepFilterArgs), report, cfg);
      print_sweep(report, "sweep-filter");
      if (!report.any_converged()) {
        std::fprintf(stderr, "error: no sweep point converged\n");
        return kExitNumerical;
      }
      return kExitOk;
    }
    if (homScan->parsed()) {
      const auto cfg = load_config(homArgs);
      const auto result = pgate::pipeline::run_hom_scan(cfg);
      pgate::report::write_hom_scan(out_dir(homArgs), result, cfg);
      std::printf("hom-scan: %zu delays, visibility %.6f\n", result.rows.size(), result.visibility);
      return kExitOk;
    }
    if (reconstruct->parsed()) {
      if (!targetPhase && !targetTheta) {
        std::fprintf(stderr, "error: reconstruct needs --target-phase or --target-theta\n");
        return kExitUsage;
      }
      const auto cfg = load_config(reconstructArgs);
      const auto target = targetPhase ? pgate::optics::ProgramSetting::phase(*targetPhase)
                                      : pgate::optics::ProgramSetting::filter(*targetTheta);
      const auto dataset = pgate::io::read_dataset(datasetPath);
      const auto result = pgate::pipeline::run_reconstruct(dataset, target, cfg);
      pgate::report::write_reconstruction(out_dir(reconstructArgs), result, cfg);
      std::printf("reconstruct: fidelity raw/compensated %.6f / %.6f, %d iterations%s\n", result.fidelityRaw,
                  result.fidelityCompensated, result.mle.iterations,
                  result.mle.converged ? "" : " (not converged)");
      if (!result.mle.converged) return kExitNumerical;
      return kExitOk;
    }
    if (simulate->parsed()) {
      if (!simPhase && !simTheta) {
        std::fprintf(stderr, "error: simulate needs --phi or --theta\n");
        return kExitUsage;
      }
      const auto cfg = load_config(simulateArgs);
      const auto program = simPhase ? pgate::optics::ProgramSetting::phase(*simPhase)
                                    : pgate::optics::ProgramSetting::filter(*simTheta);
      pgate::pipeline::run_simulate(cfg, program, datasetIndex, outFile);
      std::printf("simulate: wrote %s\n", outFile.c_str());
      return kExitOk;
    }
  } catch (const pgate::config::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const pgate::io::DataError& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "data error: %s\n", e.what());
    return kExitData;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
