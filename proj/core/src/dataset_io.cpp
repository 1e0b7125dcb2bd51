// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgate/dataset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace pgate::io {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(const std::filesystem::path& path, int line, const std::string& what) {
  throw DataError(path.string() + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

void write_dataset(const std::filesystem::path& path, const tomo::TomographyDataset& dataset) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  out << "input,projector,counts,exposure_s\n";
  for (const auto& r : dataset.records) {
    out << tomo::canonical_label(r.setting.inputIndex) << ','
        << tomo::canonical_label(r.setting.projectorIndex) << ','
        << fmt(r.counts) << ',' << fmt(r.exposure) << '\n';
  }
  if (!out) throw DataError("write failed: " + path.string());
}

tomo::TomographyDataset read_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open dataset: " + path.string());

  tomo::TomographyDataset ds;
  std::string line;
  int lineNo = 0;
  bool sawHeader = false;
  while (std::getline(in, line)) {
    ++lineNo;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (!sawHeader) {
      if (stripped != "input,projector,counts,exposure_s")
        fail(path, lineNo, "expected header 'input,projector,counts,exposure_s'");
      sawHeader = true;
      continue;
    }

    std::vector<std::string> fields;
    std::stringstream ss(stripped);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (fields.size() != 4) fail(path, lineNo, "expected 4 comma-separated fields");

    tomo::CountRecord rec;
    if (fields[0].size() != 1 || tomo::canonical_index(fields[0][0]) < 0)
      fail(path, lineNo, "unknown input label '" + fields[0] + "'");
    if (fields[1].size() != 1 || tomo::canonical_index(fields[1][0]) < 0)
      fail(path, lineNo, "unknown projector label '" + fields[1] + "'");
    rec.setting.inputIndex = tomo::canonical_index(fields[0][0]);
    rec.setting.projectorIndex = tomo::canonical_index(fields[1][0]);
    try {
      std::size_t pos = 0;
      rec.counts = std::stod(fields[2], &pos);
      if (pos != fields[2].size()) throw std::invalid_argument("");
      pos = 0;
      rec.exposure = std::stod(fields[3], &pos);
      if (pos != fields[3].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(path, lineNo, "malformed numeric field");
    }
    if (!std::isfinite(rec.counts) || rec.counts < 0.0) fail(path, lineNo, "counts must be finite and >= 0");
    if (!std::isfinite(rec.exposure) || rec.exposure <= 0.0) fail(path, lineNo, "exposure must be positive");
    ds.records.push_back(rec);
  }
  if (!sawHeader) throw DataError(path.string() + ": empty dataset file");
  return ds;
}

}  // namespace pgate::io
