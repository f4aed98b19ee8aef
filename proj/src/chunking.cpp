// SPDX-License-Identifier: Apache-2.0

#include "simul/chunking.hpp"

#include <algorithm>
#include <cmath>

#include "simul/error.hpp"

namespace simul {

int ChunkedSession::chunk_of_output(int t) const {
  // cum_out is non-decreasing; find the first chunk whose cumulative output
  // count reaches t.
  auto it = std::lower_bound(cum_out.begin() + 1, cum_out.end(), t);
  return static_cast<int>(it - cum_out.begin());
}

void ChunkedSession::rebuild_cumulative() {
  const int c = chunk_count();
  cum_in.assign(c + 1, 0);
  cum_out.assign(c + 1, 0);
  for (int i = 0; i < c; ++i) {
    cum_in[i + 1] = chunks[i].in_end;
    cum_out[i + 1] = chunks[i].out_end;
  }
  chunked_input_len = c > 0 ? chunks.back().in_end : 0;
}

namespace {

SubSegment unit_from_event(const Event& e, Modality side) {
  SubSegment u;
  if (side == Modality::Text) {
    u.token = e.payload;
  } else {
    u.duration_ms = e.duration_ms;
  }
  u.ts_ms = e.ts_ms;
  return u;
}

}  // namespace

ChunkedSession derive_chunks(const SessionTrace& trace) {
  ChunkedSession s;
  s.id = trace.id;
  s.src_modality = trace.src_modality;
  s.tgt_modality = trace.tgt_modality;
  s.reference = trace.reference;

  const auto& ev = trace.events;
  std::size_t i = 0;
  while (i < ev.size()) {
    const int in_begin = s.input_len();
    while (i < ev.size() && ev[i].action == Action::Read) {
      s.input_units.push_back(unit_from_event(ev[i], s.src_modality));
      ++i;
    }
    if (i >= ev.size()) break;  // trailing reads: kept in input_units, no chunk
    const int out_begin = s.output_len();
    while (i < ev.size() && ev[i].action == Action::Write) {
      s.output_units.push_back(unit_from_event(ev[i], s.tgt_modality));
      ++i;
    }
    s.chunks.push_back(ChunkSpan{in_begin, s.input_len(), out_begin, s.output_len()});
  }
  s.rebuild_cumulative();
  return s;
}

ChunkedSession chunked_from_lengths(const std::vector<std::pair<int, int>>& lens,
                                    int trailing_reads) {
  ChunkedSession s;
  for (const auto& [in_len, out_len] : lens) {
    if (in_len < 0 || out_len < 0) fail(Errc::InvalidLengths, "negative chunk length");
    ChunkSpan span;
    span.in_begin = s.input_len();
    for (int i = 0; i < in_len; ++i) {
      s.input_units.push_back(SubSegment{"x" + std::to_string(s.input_len() + 1), 0.0, {}});
    }
    span.in_end = s.input_len();
    span.out_begin = s.output_len();
    for (int i = 0; i < out_len; ++i) {
      s.output_units.push_back(SubSegment{"y" + std::to_string(s.output_len() + 1), 0.0, {}});
    }
    span.out_end = s.output_len();
    s.chunks.push_back(span);
  }
  if (trailing_reads < 0) fail(Errc::InvalidLengths, "negative trailing read count");
  for (int i = 0; i < trailing_reads; ++i) {
    s.input_units.push_back(SubSegment{"x" + std::to_string(s.input_len() + 1), 0.0, {}});
  }
  s.rebuild_cumulative();
  return s;
}

namespace {

// Appends ceil(total/seg_ms) slices for one chunk: full slices of seg_ms,
// then the remainder. A zero-duration chunk yields no slices.
void slice_chunk(std::vector<SubSegment>& out, double total, double seg_ms,
                 const std::optional<double>& emission_ts) {
  if (total <= 0.0) return;
  const int n = static_cast<int>(std::ceil(total / seg_ms));
  for (int i = 0; i < n; ++i) {
    SubSegment slice;
    slice.duration_ms = (i + 1 < n) ? seg_ms : total - seg_ms * (n - 1);
    if (i + 1 == n) slice.ts_ms = emission_ts;
    out.push_back(slice);
  }
}

double run_duration(const std::vector<SubSegment>& units, int begin, int end) {
  double d = 0.0;
  for (int i = begin; i < end; ++i) d += units[i].duration_ms;
  return d;
}

std::optional<double> run_last_ts(const std::vector<SubSegment>& units, int begin, int end) {
  for (int i = end - 1; i >= begin; --i) {
    if (units[i].ts_ms.has_value()) return units[i].ts_ms;
  }
  return std::nullopt;
}

}  // namespace

ChunkedSession subsegment_speech(const ChunkedSession& chunked, double seg_ms) {
  if (seg_ms <= 0.0) {
    fail(Errc::NonPositiveSegmentLength, "sub-segment length must be positive");
  }
  const bool src_speech = chunked.src_modality == Modality::Speech;
  const bool tgt_speech = chunked.tgt_modality == Modality::Speech;
  if (!src_speech && !tgt_speech) return chunked;

  ChunkedSession s;
  s.id = chunked.id;
  s.src_modality = chunked.src_modality;
  s.tgt_modality = chunked.tgt_modality;
  s.reference = chunked.reference;
  s.chunks.reserve(chunked.chunks.size());

  for (const ChunkSpan& c : chunked.chunks) {
    ChunkSpan span;
    span.in_begin = s.input_len();
    if (src_speech) {
      slice_chunk(s.input_units, run_duration(chunked.input_units, c.in_begin, c.in_end),
                  seg_ms, run_last_ts(chunked.input_units, c.in_begin, c.in_end));
    } else {
      s.input_units.insert(s.input_units.end(), chunked.input_units.begin() + c.in_begin,
                           chunked.input_units.begin() + c.in_end);
    }
    span.in_end = s.input_len();
    span.out_begin = s.output_len();
    if (tgt_speech) {
      slice_chunk(s.output_units, run_duration(chunked.output_units, c.out_begin, c.out_end),
                  seg_ms, run_last_ts(chunked.output_units, c.out_begin, c.out_end));
    } else {
      s.output_units.insert(s.output_units.end(), chunked.output_units.begin() + c.out_begin,
                            chunked.output_units.begin() + c.out_end);
    }
    span.out_end = s.output_len();
    s.chunks.push_back(span);
  }

  // Trailing reads form no chunk but still contribute input sub-segments.
  const int trail_begin = chunked.chunked_input_len;
  const int trail_end = chunked.input_len();
  if (src_speech) {
    slice_chunk(s.input_units, run_duration(chunked.input_units, trail_begin, trail_end), seg_ms,
                run_last_ts(chunked.input_units, trail_begin, trail_end));
  } else {
    s.input_units.insert(s.input_units.end(), chunked.input_units.begin() + trail_begin,
                         chunked.input_units.begin() + trail_end);
  }

  s.rebuild_cumulative();
  return s;
}

std::vector<int> delay_function(const ChunkedSession& chunked) {
  std::vector<int> g;
  g.reserve(chunked.output_len());
  for (int c = 1; c <= chunked.chunk_count(); ++c) {
    const int n_out = chunked.chunks[c - 1].output_len();
    for (int i = 0; i < n_out; ++i) g.push_back(chunked.cum_in[c]);
  }
  return g;
}

}  // namespace simul
