// SPDX-License-Identifier: Apache-2.0

#include "simul/trace.hpp"

#include <cctype>

#include "simul/error.hpp"

namespace simul {

const char* modality_name(Modality m) {
  return m == Modality::Text ? "text" : "speech";
}

bool SessionTrace::has_full_timestamps() const {
  for (const auto& e : events) {
    if (!e.ts_ms.has_value()) return false;
  }
  return true;
}

std::vector<std::string> split_tokens(const std::string& payload) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : payload) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

namespace {

Modality side_modality(const SessionTrace& trace, Action a) {
  return a == Action::Read ? trace.src_modality : trace.tgt_modality;
}

}  // namespace

SessionTrace validate_trace(const SessionTrace& raw, bool require_timestamps) {
  if (raw.events.empty()) fail(Errc::EmptyTrace, "trace '" + raw.id + "' has no events");

  double last_ts = -1.0;
  for (const auto& e : raw.events) {
    if (e.ts_ms.has_value()) {
      if (*e.ts_ms < last_ts) {
        fail(Errc::NonMonotonicTimestamps,
             "trace '" + raw.id + "': event timestamps must be non-decreasing");
      }
      last_ts = *e.ts_ms;
    } else if (require_timestamps) {
      fail(Errc::MissingTimestamps,
           "trace '" + raw.id + "' lacks timestamps required for computation-aware evaluation");
    }
  }

  SessionTrace out;
  out.id = raw.id;
  out.src_modality = raw.src_modality;
  out.tgt_modality = raw.tgt_modality;
  out.reference = raw.reference;
  out.events.reserve(raw.events.size());

  for (const auto& e : raw.events) {
    const Modality side = side_modality(raw, e.action);
    if (side == Modality::Speech) {
      if (e.duration_ms < 0.0) {
        fail(Errc::MixedUnits, "trace '" + raw.id + "': negative speech duration");
      }
      if (!e.payload.empty() && e.duration_ms == 0.0) {
        fail(Errc::MixedUnits, "trace '" + raw.id + "': " + modality_name(side) +
                                   " side carries a token payload instead of a duration");
      }
      out.events.push_back(e);
      continue;
    }
    // Text side: one token per canonical event.
    auto tokens = split_tokens(e.payload);
    if (tokens.empty()) {
      fail(Errc::MixedUnits, "trace '" + raw.id + "': text-side event without a token payload");
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      Event piece;
      piece.action = e.action;
      piece.payload = std::move(tokens[i]);
      if (i + 1 == tokens.size()) piece.ts_ms = e.ts_ms;
      out.events.push_back(std::move(piece));
    }
  }
  return out;
}

}  // namespace simul
