// Copyright 2026 The pgate Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <stdexcept>

#include "pgate/tomo.hpp"

// Dataset files are CSV with the header line
//   input,projector,counts,exposure_s
// followed by one record per line. State labels come from {H,V,P,M,R,L};
// counts are non-negative (integers for sampled data, exact means for
// noiseless data) and exposure is in seconds.

namespace pgate::io {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_dataset(const std::filesystem::path& path, const tomo::TomographyDataset& dataset);

// Throws DataError naming the offending line on malformed input. The result
// is not validated for completeness; call dataset.validate() for that.
tomo::TomographyDataset read_dataset(const std::filesystem::path& path);

}  // namespace pgate::io
