// SPDX-License-Identifier: Apache-2.0

#include "simul/error.hpp"

namespace simul {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::EmptyTrace: return "EmptyTrace";
    case Errc::NonMonotonicTimestamps: return "NonMonotonicTimestamps";
    case Errc::MixedUnits: return "MixedUnits";
    case Errc::MissingTimestamps: return "MissingTimestamps";
    case Errc::NonPositiveSegmentLength: return "NonPositiveSegmentLength";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EmptySide: return "EmptySide";
    case Errc::MissingReference: return "MissingReference";
    case Errc::EmptyOutput: return "EmptyOutput";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::InvalidK: return "InvalidK";
    case Errc::InvalidLengths: return "InvalidLengths";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::ParseError: return "ParseError";
    case Errc::ConfigConflict: return "ConfigConflict";
    case Errc::IdNotFound: return "IdNotFound";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace simul
