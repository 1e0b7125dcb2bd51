// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/tomo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pgate/rng.hpp"

namespace pgate::tomo {

using qmath::Complex;
using qmath::Vec4;

const std::array<PolKet, kNumStates>& canonical_states() {
  static const std::array<PolKet, kNumStates> states = {
      optics::ket_h(), optics::ket_v(), optics::ket_plus(),
      optics::ket_minus(), optics::ket_r(), optics::ket_l()};
  return states;
}

char canonical_label(int index) {
  static constexpr char labels[kNumStates] = {'H', 'V', 'P', 'M', 'R', 'L'};
  if (index < 0 || index >= kNumStates) throw std::out_of_range("canonical_label: index out of range");
  return labels[index];
}

int canonical_index(char label) {
  switch (label) {
    case 'H': return 0;
    case 'V': return 1;
    case 'P': return 2;
    case 'M': return 3;
    case 'R': return 4;
    case 'L': return 5;
    default: return -1;
  }
}

std::vector<MeasurementSetting> canonical_settings() {
  std::vector<MeasurementSetting> settings;
  settings.reserve(kNumSettings);
  for (int in = 0; in < kNumStates; ++in)
    for (int proj = 0; proj < kNumStates; ++proj) settings.push_back({in, proj});
  return settings;
}

double TomographyDataset::total_counts() const {
  double total = 0.0;
  for (const auto& r : records) total += r.counts;
  return total;
}

void TomographyDataset::validate() const {
  std::array<int, kNumSettings> seen{};
  for (const auto& r : records) {
    if (r.setting.inputIndex < 0 || r.setting.inputIndex >= kNumStates ||
        r.setting.projectorIndex < 0 || r.setting.projectorIndex >= kNumStates)
      throw std::invalid_argument("dataset: setting index out of range");
    if (r.counts < 0.0) throw std::invalid_argument("dataset: negative counts");
    if (!(r.exposure > 0.0)) throw std::invalid_argument("dataset: exposure must be positive");
    ++seen[r.setting.inputIndex * kNumStates + r.setting.projectorIndex];
  }
  for (int in = 0; in < kNumStates; ++in)
    for (int proj = 0; proj < kNumStates; ++proj) {
      const int n = seen[in * kNumStates + proj];
      if (n != 1) {
        std::string msg = n == 0 ? "dataset: missing record for (input " : "dataset: duplicate record for (input ";
        msg += canonical_label(in);
        msg += ", projector ";
        msg += canonical_label(proj);
        msg += ")";
        throw std::invalid_argument(msg);
      }
    }
}

double expected_probability(const KrausOp& k, const MeasurementSetting& s) {
  const PolKet& in = s.input();
  const PolKet& proj = s.projector();
  const Complex outH = k.m(0, 0) * in.aH + k.m(0, 1) * in.aV;
  const Complex outV = k.m(1, 0) * in.aH + k.m(1, 1) * in.aV;
  return std::norm(std::conj(proj.aH) * outH + std::conj(proj.aV) * outV);
}

namespace {

// |input*> (x) |proj>; measurement_operator(s) is its rank-1 projector and
// Tr[chi M] reduces to <u| chi |u>.
Vec4 setting_vector(const MeasurementSetting& s) {
  const PolKet& in = s.input();
  const PolKet& proj = s.projector();
  const Complex inAmps[2] = {std::conj(in.aH), std::conj(in.aV)};
  const Complex projAmps[2] = {proj.aH, proj.aV};
  Vec4 u;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a) u[2 * i + a] = inAmps[i] * projAmps[a];
  return u;
}

}  // namespace

Mat4 measurement_operator(const MeasurementSetting& s) {
  const Vec4 u = setting_vector(s);
  return qmath::outer(u, u);
}

TomographyDataset simulate_counts(const KrausOp& k, const ProgramSetting& program, double exposure,
                                  double rateCalibration, std::uint64_t seed, std::uint64_t datasetIndex,
                                  bool noiseless) {
  if (!(exposure > 0.0)) throw std::invalid_argument("simulate_counts: exposure must be positive");
  if (rateCalibration < 0.0) throw std::invalid_argument("simulate_counts: rateCalibration must be >= 0");

  TomographyDataset ds;
  ds.program = program;
  ds.rateCalibration = rateCalibration;
  const auto settings = canonical_settings();
  ds.records.reserve(settings.size());
  for (std::size_t j = 0; j < settings.size(); ++j) {
    const double mean = rateCalibration * exposure * expected_probability(k, settings[j]);
    double counts = mean;
    if (!noiseless) {
      rng::Philox4x32 gen(seed, datasetIndex, j);
      counts = static_cast<double>(rng::poisson(gen, mean));
    }
    ds.records.push_back({settings[j], counts, exposure});
  }
  return ds;
}

namespace {

struct LikelihoodTerms {
  std::vector<Vec4> vectors;      // one per record
  std::vector<double> frequencies;
  double floor = 0.0;

  // p_j = <u_j| chi |u_j>, clamped at the floor.
  double probability(const Mat4& chi, std::size_t j) const {
    const Vec4& u = vectors[j];
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r) {
      Complex row = 0.0;
      for (std::size_t c = 0; c < 4; ++c) row += chi(r, c) * u[c];
      acc += std::conj(u[r]) * row;
    }
    return std::max(acc.real(), floor);
  }

  void probabilities(const Mat4& chi, std::vector<double>& p) const {
    p.resize(vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) p[j] = probability(chi, j);
  }

  double loglik_from(const std::vector<double>& p) const {
    double sum = 0.0;
    double norm = 0.0;
    for (double pj : p) norm += pj;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (frequencies[j] > 0.0) sum += frequencies[j] * std::log(p[j] / norm);
    }
    return sum;
  }

  double loglik(const Mat4& chi) const {
    std::vector<double> p;
    probabilities(chi, p);
    return loglik_from(p);
  }
};

LikelihoodTerms make_terms(const TomographyDataset& data, double floor) {
  const double total = data.total_counts();
  if (!(total > 0.0)) throw std::invalid_argument("mle: dataset has no counts");
  LikelihoodTerms terms;
  terms.floor = floor;
  terms.vectors.reserve(data.records.size());
  terms.frequencies.reserve(data.records.size());
  for (const auto& r : data.records) {
    terms.vectors.push_back(setting_vector(r.setting));
    terms.frequencies.push_back(r.counts / total);
  }
  return terms;
}

}  // namespace

double loglikelihood(const Mat4& chi, const TomographyDataset& data, double probabilityFloor) {
  data.validate();
  return make_terms(data, probabilityFloor).loglik(chi);
}

MleResult mle_reconstruct(const TomographyDataset& data, const MleOptions& options) {
  data.validate();
  const LikelihoodTerms terms = make_terms(data, options.probabilityFloor);
  const std::size_t n = terms.vectors.size();

  MleResult result;
  result.probabilityFloor = options.probabilityFloor;
  Mat4 chi = 0.25 * qmath::identity<4>();
  const double targetTrace = qmath::trace(chi).real();

  std::vector<double> probs, candProbs;
  terms.probabilities(chi, probs);
  double loglik = terms.loglik_from(probs);
  result.logLikelihoodTrace.push_back(loglik);

  for (int iter = 0; iter < options.maxIterations; ++iter) {
    // R = sum_j (f_j / p_j) |u_j><u_j|
    Mat4 r;
    for (std::size_t j = 0; j < n; ++j) {
      const double f = terms.frequencies[j];
      if (f <= 0.0) continue;
      const double w = f / probs[j];
      const Vec4& u = terms.vectors[j];
      for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t col = 0; col < 4; ++col) r(row, col) += w * u[row] * std::conj(u[col]);
    }

    const double rTraceQuarter = 0.25 * qmath::trace(r).real();
    bool accepted = false;
    Mat4 nextChi;
    double nextLoglik = loglik;
    for (double eps : options.dilution) {
      Mat4 step = r;
      if (eps < 1.0) {
        step = eps * r;
        const double mix = (1.0 - eps) * rTraceQuarter;
        for (std::size_t d = 0; d < 4; ++d) step(d, d) += mix;
      }
      Mat4 candidate = qmath::hermitize(step * chi * step);
      const double tr = qmath::trace(candidate).real();
      if (!(tr > 0.0) || !std::isfinite(tr)) continue;
      candidate = (targetTrace / tr) * candidate;
      terms.probabilities(candidate, candProbs);
      const double candLoglik = terms.loglik_from(candProbs);
      if (candLoglik >= loglik - 1e-12) {
        nextChi = candidate;
        nextLoglik = candLoglik;
        probs.swap(candProbs);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      // No admissible step: stationary to working precision.
      result.converged = true;
      break;
    }

    const double stepSize = qmath::max_abs(nextChi - chi);
    chi = nextChi;
    result.logLikelihoodTrace.push_back(nextLoglik);
    ++result.iterations;
    const double change = std::abs(nextLoglik - loglik) / std::max(1.0, std::abs(nextLoglik));
    loglik = nextLoglik;
    const bool done = options.stepTolerance > 0.0 ? stepSize < options.stepTolerance
                                                  : change < options.tolerance;
    if (done) {
      result.converged = true;
      break;
    }
  }

  result.chi = chi;
  return result;
}

}  // namespace pgate::tomo
