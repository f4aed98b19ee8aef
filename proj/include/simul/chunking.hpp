// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "simul/trace.hpp"

namespace simul {

/// The atomic latency unit: a text token, or one slice of a speech chunk.
struct SubSegment {
  std::string token;
  double duration_ms = 0.0;
  std::optional<double> ts_ms;
};

/// Half-open index ranges into the flat unit arrays of a ChunkedSession.
struct ChunkSpan {
  int in_begin = 0;
  int in_end = 0;
  int out_begin = 0;
  int out_end = 0;

  int input_len() const { return in_end - in_begin; }
  int output_len() const { return out_end - out_begin; }
};

/// A session regrouped into paired chunks: chunk c's input is the maximal
/// run of reads preceding the c-th maximal run of writes, its output is that
/// write run. Reads after the final write belong to no chunk but still count
/// toward the input length. A leading write run forms chunk 1 with an empty
/// input chunk.
struct ChunkedSession {
  std::string id;
  Modality src_modality = Modality::Text;
  Modality tgt_modality = Modality::Text;
  std::vector<SubSegment> input_units;   // chunked inputs first, then trailing reads
  std::vector<SubSegment> output_units;
  std::vector<ChunkSpan> chunks;
  int chunked_input_len = 0;             // units in input_units that belong to a chunk
  std::vector<int> cum_in;               // cum_in[c] = cumulative input length through chunk c; cum_in[0] = 0
  std::vector<int> cum_out;
  std::optional<std::vector<std::string>> reference;

  int input_len() const { return static_cast<int>(input_units.size()); }
  int output_len() const { return static_cast<int>(output_units.size()); }
  int chunk_count() const { return static_cast<int>(chunks.size()); }

  /// 1-based chunk index of the 1-based output unit t.
  int chunk_of_output(int t) const;

  /// Recomputes cum_in/cum_out and chunked_input_len from `chunks`.
  void rebuild_cumulative();
};

/// Groups a validated trace into chunks by maximal read/write runs.
ChunkedSession derive_chunks(const SessionTrace& trace);

/// Builds a text-to-text chunking directly from per-chunk (input, output)
/// lengths, with optional trailing reads. Handy for hand-built structures.
ChunkedSession chunked_from_lengths(const std::vector<std::pair<int, int>>& lens,
                                    int trailing_reads = 0);

/// Re-slices every speech side into sub-segments of `seg_ms` from the start
/// of each chunk; the final slice keeps the remainder so the chunk duration
/// is conserved. Text sides are returned untouched.
ChunkedSession subsegment_speech(const ChunkedSession& chunked, double seg_ms = 300.0);

/// The monotonic non-decreasing delay function: element t-1 is the number of
/// input sub-segments read before the t-th output sub-segment is predicted.
std::vector<int> delay_function(const ChunkedSession& chunked);

}  // namespace simul
