// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// the measured values; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "pgate/config.hpp"
#include "pgate/metrics.hpp"
#include "pgate/optics.hpp"
#include "pgate/pipeline.hpp"
#include "pgate/report.hpp"
#include "pgate/rng.hpp"
#include "pgate/tomo.hpp"
#include "routing_oracle.hpp"
#include "test_random.hpp"

namespace {

using namespace pgate;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report_line(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

config::ExperimentConfig modeled_config(std::uint64_t seed) {
  config::ExperimentConfig cfg;  // defaults are the modeled experiment
  cfg.seed = seed;
  return cfg;
}

double wrapped(double x) { return std::remainder(x, 2.0 * kPi); }

// 1. Ideal closure: noiseless ideal sweep, fidelity >= 0.9999 everywhere,
//    |phi_eff - phi| <= 1e-6, |fitted offset| <= 1e-6, < 10 s.
void criterion_1() {
  const auto start = Clock::now();
  config::ExperimentConfig cfg;
  cfg.pbsIdeal = true;
  cfg.pbsDeltaPhi = 0.0;
  cfg.noiseless = true;
  const auto report = pipeline::run_sweep_phase(cfg);
  double minFidelity = 1.0;
  double worstPhaseError = 0.0;
  for (const auto& p : report.points) {
    minFidelity = std::min(minFidelity, p.fidelityRaw);
    if (!p.effectivePhase) {
      worstPhaseError = 1e9;
      continue;
    }
    worstPhaseError = std::max(worstPhaseError, std::abs(wrapped(*p.effectivePhase - p.setting.angle)));
  }
  const double elapsed = seconds_since(start);
  const bool pass = minFidelity >= 0.9999 && worstPhaseError <= 1e-6 &&
                    std::abs(report.fittedOffset) <= 1e-6 && elapsed < 10.0;
  report_line(1, pass,
              fmt("ideal closure: min fidelity %.6f (>= 0.9999), max |phi_eff - phi| %.2e (<= 1e-6), "
                  "|fitted offset| %.2e (<= 1e-6), %.1f s (< 10 s)",
                  minFidelity, worstPhaseError, std::abs(report.fittedOffset), elapsed));
}

struct NoisyRuns {
  std::vector<pipeline::SweepReport> phase;
  std::vector<pipeline::SweepReport> filter;
  double elapsedPhase = 0.0;
};

// 2. Modeled-experiment phase sweep over >= 5 seeds: per-seed mean
//    compensated fidelity in [0.961, 0.981], per-point spread < 2 pp,
//    phase sweeps < 2 min.
void criterion_2(const NoisyRuns& runs) {
  double lo = 1.0, hi = 0.0, worstSpread = 0.0;
  for (const auto& r : runs.phase) {
    lo = std::min(lo, r.meanFidelityCompensated);
    hi = std::max(hi, r.meanFidelityCompensated);
    double pointLo = 1.0, pointHi = 0.0;
    for (const auto& p : r.points) {
      pointLo = std::min(pointLo, p.fidelityCompensated);
      pointHi = std::max(pointHi, p.fidelityCompensated);
    }
    worstSpread = std::max(worstSpread, pointHi - pointLo);
  }
  const bool pass = lo >= 0.961 && hi <= 0.981 && worstSpread < 0.02 && runs.elapsedPhase < 120.0;
  report_line(2, pass,
              fmt("phase-sweep reproduction: mean compensated fidelity %.4f..%.4f over %zu seeds "
                  "(in [0.961, 0.981]), worst spread %.4f (< 0.02), %.1f s (< 120 s)",
                  lo, hi, runs.phase.size(), worstSpread, runs.elapsedPhase));
}

// 3. Offset recovery: fitted offset within 0.02 rad of -0.265 on every noisy
//    seed; within 1e-6 rad with the offset as the only imperfection and
//    noiseless counts.
void criterion_3(const NoisyRuns& runs) {
  double worstNoisy = 0.0;
  for (const auto& r : runs.phase) worstNoisy = std::max(worstNoisy, std::abs(r.fittedOffset + 0.265));

  config::ExperimentConfig cfg;
  cfg.pbsIdeal = true;
  cfg.pbsDeltaPhi = -0.265;
  cfg.noiseless = true;
  cfg.mle.stepTolerance = 1e-13;
  cfg.mle.maxIterations = 4000000;
  const auto noiseless = pipeline::run_sweep_phase(cfg);
  const double noiselessErr = std::abs(noiseless.fittedOffset + 0.265);

  const bool pass = worstNoisy <= 0.02 && noiselessErr <= 1e-6;
  report_line(3, pass,
              fmt("offset recovery: worst noisy |fit + 0.265| %.4f rad (<= 0.02), noiseless %.2e rad "
                  "(<= 1e-6)",
                  worstNoisy, noiselessErr));
}

// 4. Compensation gain in [0.5, 1.5] percentage points under the modeled-experiment
//    configuration.
void criterion_4(const NoisyRuns& runs) {
  double sum = 0.0;
  for (const auto& r : runs.phase) sum += r.meanCompensationGain;
  const double gain = sum / static_cast<double>(runs.phase.size());
  const bool pass = gain >= 0.005 && gain <= 0.015;
  report_line(4, pass,
              fmt("compensation gain: mean %.3f pp over %zu seeds (required [0.5, 1.5] pp)", 100.0 * gain,
                  runs.phase.size()));
}

// 5. Filter reproduction: mean compensated fidelity in [0.964, 0.984], gain
//    maximal at theta = pi/4 and exactly zero at theta = 0, pi/2.
void criterion_5(const NoisyRuns& runs) {
  double lo = 1.0, hi = 0.0;
  bool maxAtQuarter = true;
  bool endpointsZero = true;
  for (const auto& r : runs.filter) {
    lo = std::min(lo, r.meanFidelityCompensated);
    hi = std::max(hi, r.meanFidelityCompensated);
    std::size_t best = 0;
    double bestGain = -1.0;
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      const double gain = r.points[i].fidelityCompensated - r.points[i].fidelityRaw;
      if (gain > bestGain) {
        bestGain = gain;
        best = i;
      }
    }
    maxAtQuarter = maxAtQuarter && std::abs(r.points[best].setting.angle - kPi / 4.0) < 1e-12;
    const auto& first = r.points.front();
    const auto& last = r.points.back();
    endpointsZero = endpointsZero &&
                    std::abs(first.fidelityCompensated - first.fidelityRaw) <= 1e-12 &&
                    std::abs(last.fidelityCompensated - last.fidelityRaw) <= 1e-12;
  }
  const bool pass = lo >= 0.964 && hi <= 0.984 && maxAtQuarter && endpointsZero;
  report_line(5, pass,
              fmt("filter reproduction: mean compensated fidelity %.4f..%.4f (in [0.964, 0.984]), gain "
                  "max at pi/4: %s, zero at endpoints: %s",
                  lo, hi, maxAtQuarter ? "yes" : "no", endpointsZero ? "yes" : "no"));
}

// 6. Success probability: analytic 0.25 for the ideal gate on 100 random
//    pure inputs (1e-12); sampled totals within 3 sigma of the expectation.
void criterion_6() {
  rng::Philox4x32 gen(606);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double phi = 2.0 * kPi * gen.next_double();
    const auto k = optics::effective_kraus(optics::ProgramSetting::phase(phi), optics::PbsModel::ideal());
    const auto v = testsupport::haar_random_ket<2>(gen);
    worst = std::max(worst, std::abs(optics::success_probability(k, qmath::outer(v, v)) - 0.25));
  }

  const auto cfg = modeled_config(2026);
  bool totalsOk = true;
  double worstSigma = 0.0;
  for (std::size_t idx = 0; idx < cfg.phaseGrid.size(); ++idx) {
    const auto kraus = optics::effective_kraus(optics::ProgramSetting::phase(cfg.phaseGrid[idx]), cfg.pbs());
    double expected = 0.0;
    for (const auto& s : tomo::canonical_settings())
      expected += cfg.rateCalibration * cfg.exposure * tomo::expected_probability(kraus, s);
    const auto ds = tomo::simulate_counts(kraus, optics::ProgramSetting::phase(cfg.phaseGrid[idx]),
                                          cfg.exposure, cfg.rateCalibration, cfg.seed, idx, false);
    const double deviation = std::abs(ds.total_counts() - expected) / std::sqrt(expected);
    worstSigma = std::max(worstSigma, deviation);
    totalsOk = totalsOk && deviation < 3.0;
  }
  const bool pass = worst <= 1e-12 && totalsOk;
  report_line(6, pass,
              fmt("success probability: max |Tr[K rho K'] - 0.25| %.2e (<= 1e-12), worst count-total "
                  "deviation %.2f sigma (< 3)",
                  worst, worstSigma));
}

// 7. Compensated average state fidelity per phase point within
//    [0.966, 0.995] on every noisy seed.
void criterion_7(const NoisyRuns& runs) {
  double lo = 1.0, hi = 0.0;
  bool defined = true;
  for (const auto& r : runs.phase) {
    for (const auto& p : r.points) {
      if (!p.avgStateFidelityCompensated) {
        defined = false;
        continue;
      }
      lo = std::min(lo, *p.avgStateFidelityCompensated);
      hi = std::max(hi, *p.avgStateFidelityCompensated);
    }
  }
  const bool pass = defined && lo >= 0.966 && hi <= 0.995;
  report_line(7, pass,
              fmt("state-fidelity band: compensated F_avg %.4f..%.4f across all seeds and phases "
                  "(in [0.966, 0.995])",
                  lo, hi));
}

// 8. Property suite: MLE monotonicity, PSD reconstruction, fidelity scale
//    invariance, the cos^2 law, the Horodecki identity, and oracle agreement.
void criterion_8() {
  std::string detail;
  bool pass = true;

  {  // MLE monotonicity and PSD on a fixed noisy dataset.
    const auto cfg = modeled_config(808);
    const auto kraus = optics::effective_kraus(optics::ProgramSetting::phase(kPi / 3.0), cfg.pbs());
    const auto ds = tomo::simulate_counts(kraus, optics::ProgramSetting::phase(kPi / 3.0), cfg.exposure,
                                          cfg.rateCalibration, cfg.seed, 0, false);
    const auto mle = tomo::mle_reconstruct(ds);
    bool monotone = true;
    for (std::size_t i = 1; i < mle.logLikelihoodTrace.size(); ++i)
      monotone = monotone && mle.logLikelihoodTrace[i] >= mle.logLikelihoodTrace[i - 1] - 1e-12;
    const double minEig = qmath::min_eigenvalue(mle.chi);
    const bool psd = minEig >= -1e-9 * qmath::trace(mle.chi).real();
    pass = pass && monotone && psd;
    detail += fmt("monotone=%s psd(min eig %.1e)=%s", monotone ? "yes" : "no", minEig, psd ? "yes" : "no");
  }

  {  // Fidelity scale invariance and the cos^2 law.
    rng::Philox4x32 gen(881);
    double worstScale = 0.0, worstCos = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto m = testsupport::random_matrix<2>(gen);
      const auto chi = optics::choi_from_kraus(optics::KrausOp{m});
      const double a = 2.0 * kPi * gen.next_double();
      const double b = 2.0 * kPi * gen.next_double();
      const auto target = metrics::ideal_choi_phase(a);
      const double c1 = 0.01 + 10.0 * gen.next_double();
      const double c2 = 0.01 + 10.0 * gen.next_double();
      worstScale = std::max(worstScale, std::abs(metrics::process_fidelity(c1 * chi, c2 * target) -
                                                 metrics::process_fidelity(chi, target)));
      const double law = std::pow(std::cos(0.5 * (a - b)), 2);
      worstCos = std::max(worstCos, std::abs(metrics::process_fidelity(metrics::ideal_choi_phase(a),
                                                                       metrics::ideal_choi_phase(b)) -
                                             law));
    }
    pass = pass && worstScale <= 1e-12 && worstCos <= 1e-12;
    detail += fmt(", scale-inv %.1e, cos^2 law %.1e (<= 1e-12)", worstScale, worstCos);
  }

  {  // Horodecki identity for unitary maps.
    rng::Philox4x32 gen(882);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const auto u = testsupport::random_unitary2(gen);
      const double phi = 2.0 * kPi * gen.next_double();
      const auto chi = optics::choi_from_kraus(optics::KrausOp{u});
      worst = std::max(worst, std::abs(metrics::average_state_fidelity(chi, phi) -
                                       metrics::horodecki_avg(metrics::process_fidelity(
                                           chi, metrics::ideal_choi_phase(phi)))));
    }
    pass = pass && worst <= 1e-9;
    detail += fmt(", horodecki %.1e (<= 1e-9)", worst);
  }

  {  // Closed-form coincidence amplitudes against the routing oracle.
    rng::Philox4x32 gen(883);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto data = testsupport::random_polket(gen);
      const auto program = testsupport::random_polket(gen);
      const auto pbs = testsupport::random_pbs(gen);
      const auto fast = optics::pbs_coincidence(data, program, pbs);
      const auto oracle = testsupport::brute_force_coincidence(data, program, pbs);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) worst = std::max(worst, std::abs(fast.a(x, y) - oracle.a(x, y)));
    }
    pass = pass && worst <= 1e-10;
    detail += fmt(", routing oracle %.1e (<= 1e-10)", worst);
  }

  report_line(8, pass, "property suite: " + detail);
}

// 9. Determinism: identical config and seed produce byte-identical reports.
void criterion_9() {
  const auto cfg = modeled_config(909);
  const fs::path dirA = fs::temp_directory_path() / "pgate_acceptance_a";
  const fs::path dirB = fs::temp_directory_path() / "pgate_acceptance_b";
  fs::remove_all(dirA);
  fs::remove_all(dirB);
  report::write_phase_sweep(dirA, pipeline::run_sweep_phase(cfg), cfg);
  report::write_phase_sweep(dirB, pipeline::run_sweep_phase(cfg), cfg);

  bool identical = true;
  std::string firstDiff;
  for (const char* name : {"fig2_choi.csv", "fig3_phase.csv", "fig4_fidelity.csv", "summary.json",
                           "effective_config.txt"}) {
    std::ifstream a(dirA / name, std::ios::binary);
    std::ifstream b(dirB / name, std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (sa.str() != sb.str() || sa.str().empty()) {
      identical = false;
      if (firstDiff.empty()) firstDiff = name;
    }
  }
  fs::remove_all(dirA);
  fs::remove_all(dirB);
  report_line(9, identical,
              identical ? "determinism: all report files byte-identical across reruns"
                        : "determinism: file differs: " + firstDiff);
}

}  // namespace

int main() {
  std::printf("pgate acceptance suite\n");

  criterion_1();

  NoisyRuns runs;
  const auto startPhase = Clock::now();
  for (std::uint64_t seed = 101; seed <= 105; ++seed)
    runs.phase.push_back(pipeline::run_sweep_phase(modeled_config(seed)));
  runs.elapsedPhase = seconds_since(startPhase);
  for (std::uint64_t seed = 101; seed <= 105; ++seed)
    runs.filter.push_back(pipeline::run_sweep_filter(modeled_config(seed)));

  criterion_2(runs);
  criterion_3(runs);
  criterion_4(runs);
  criterion_5(runs);
  criterion_6();
  criterion_7(runs);
  criterion_8();
  criterion_9();

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
