// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace simul {

enum class Modality { Text, Speech };
enum class Action { Read, Write };

const char* modality_name(Modality m);

/// One READ or WRITE step of an incremental translation session.
/// Text events carry whitespace-separated tokens in `payload` (a canonical
/// trace carries exactly one token per event); speech events carry a
/// duration. `ts_ms` is the wall-clock end of the event, measured from the
/// start of the session, and is required only for computation-aware
/// evaluation.
struct Event {
  Action action = Action::Read;
  std::string payload;
  double duration_ms = 0.0;
  std::optional<double> ts_ms;

  static Event read_token(std::string token, std::optional<double> ts = std::nullopt) {
    return Event{Action::Read, std::move(token), 0.0, ts};
  }
  static Event write_token(std::string token, std::optional<double> ts = std::nullopt) {
    return Event{Action::Write, std::move(token), 0.0, ts};
  }
  static Event read_speech(double duration_ms, std::optional<double> ts = std::nullopt) {
    return Event{Action::Read, {}, duration_ms, ts};
  }
  static Event write_speech(double duration_ms, std::optional<double> ts = std::nullopt) {
    return Event{Action::Write, {}, duration_ms, ts};
  }
};

/// An ordered event sequence for one sentence. Tokenization is the caller's
/// responsibility; the library consumes pre-tokenized traces.
struct SessionTrace {
  std::string id;
  Modality src_modality = Modality::Text;
  Modality tgt_modality = Modality::Text;
  std::vector<Event> events;
  std::optional<std::vector<std::string>> reference;

  bool has_full_timestamps() const;
};

/// Splits a text payload on ASCII whitespace.
std::vector<std::string> split_tokens(const std::string& payload);

/// Checks trace invariants and returns the canonical form: multi-token text
/// events are split into single-token events, order preserved, the event
/// timestamp kept on the last split piece.
///
/// Errors: EmptyTrace, NonMonotonicTimestamps, MixedUnits, and
/// MissingTimestamps when `require_timestamps` is set.
SessionTrace validate_trace(const SessionTrace& raw, bool require_timestamps = false);

}  // namespace simul
