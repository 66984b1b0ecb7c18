#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mdteds {

/// Failure scoped to a single evaluation record ("no reference tables",
/// "judge unavailable", "judge response invalid"). Callers running batches
/// catch it and flag the record; it never aborts a batch.
struct RecordError : std::runtime_error {
  explicit RecordError(const std::string& message, std::string detail = {})
      : std::runtime_error(message), detail(std::move(detail)) {}

  /// Audit payload, e.g. the raw judge response.
  std::string detail;
};

/// Invalid dataset file or invocation; maps to CLI exit code 2.
struct DatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mdteds
