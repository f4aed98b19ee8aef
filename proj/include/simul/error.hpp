// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace simul {

enum class Errc {
  EmptyTrace,
  NonMonotonicTimestamps,
  MixedUnits,
  MissingTimestamps,
  NonPositiveSegmentLength,
  DivisionByZero,
  EmptySide,
  MissingReference,
  EmptyOutput,
  EmptyCorpus,
  InvalidK,
  InvalidLengths,
  InvalidRange,
  FileNotFound,
  ParseError,
  ConfigConflict,
  IdNotFound,
  IoError,
};

const char* errc_name(Errc code);

/// Thrown by every operation in this library; carries a stable error code
/// so callers can branch without string matching.
class LatencyError : public std::runtime_error {
 public:
  LatencyError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw LatencyError(code, message);
}

}  // namespace simul
