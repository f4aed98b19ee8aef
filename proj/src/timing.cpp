// SPDX-License-Identifier: Apache-2.0

#include "simul/timing.hpp"

#include <algorithm>

#include "simul/error.hpp"

namespace simul {

TimedSession assign_nca_times(const ChunkedSession& chunked) {
  TimedSession t;
  t.unit = TimeUnit::Step;
  t.chunking = chunked;

  t.in_end.resize(chunked.input_len());
  for (int i = 0; i < chunked.input_len(); ++i) t.in_end[i] = i + 1;

  t.out_end.reserve(chunked.output_len());
  double prev = 0.0;
  for (int c = 1; c <= chunked.chunk_count(); ++c) {
    const double gate = chunked.cum_in[c];
    const int n_out = chunked.chunks[c - 1].output_len();
    for (int i = 0; i < n_out; ++i) {
      prev = std::max(prev, gate) + 1.0;
      t.out_end.push_back(prev);
    }
  }
  return t;
}

namespace {

// End times for a text side: the unit's own timestamp, or the next
// timestamped unit on the same side (all pieces of a split event end when
// the event ends).
std::vector<double> text_end_times(const std::vector<SubSegment>& units, const std::string& id) {
  std::vector<double> ends(units.size());
  double next_ts = -1.0;
  for (int i = static_cast<int>(units.size()) - 1; i >= 0; --i) {
    if (units[i].ts_ms.has_value()) next_ts = *units[i].ts_ms;
    if (next_ts < 0.0) {
      fail(Errc::MissingTimestamps,
           "trace '" + id + "': text event without a timestamp in computation-aware mode");
    }
    ends[i] = next_ts;
  }
  return ends;
}

std::vector<double> speech_input_offsets(const std::vector<SubSegment>& units) {
  std::vector<double> ends(units.size());
  double offset = 0.0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    offset += units[i].duration_ms;
    ends[i] = offset;
  }
  return ends;
}

}  // namespace

TimedSession assign_ca_times(const ChunkedSession& chunked) {
  TimedSession t;
  t.unit = TimeUnit::Millisecond;
  t.chunking = chunked;

  if (chunked.src_modality == Modality::Speech) {
    t.in_end = speech_input_offsets(chunked.input_units);
  } else {
    t.in_end = text_end_times(chunked.input_units, chunked.id);
  }

  if (chunked.tgt_modality == Modality::Text) {
    t.out_end = text_end_times(chunked.output_units, chunked.id);
  } else {
    // Speech output must be sequential: a chunk's playback starts at its
    // emission timestamp or the previous chunk's playback end, whichever is
    // later.
    t.out_end.resize(chunked.output_len());
    double prev_playback_end = 0.0;
    for (const ChunkSpan& c : chunked.chunks) {
      if (c.output_len() == 0) continue;
      std::optional<double> emission;
      for (int i = c.out_end - 1; i >= c.out_begin && !emission; --i) {
        emission = chunked.output_units[i].ts_ms;
      }
      if (!emission) {
        fail(Errc::MissingTimestamps,
             "trace '" + chunked.id + "': speech output chunk without an emission timestamp");
      }
      const double start = std::max(*emission, prev_playback_end);
      double offset = 0.0;
      for (int i = c.out_begin; i < c.out_end; ++i) {
        offset += chunked.output_units[i].duration_ms;
        t.out_end[i] = start + offset;
      }
      prev_playback_end = start + offset;
    }
  }
  return t;
}

}  // namespace simul
