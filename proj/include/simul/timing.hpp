// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "simul/chunking.hpp"

namespace simul {

enum class TimeUnit { Step, Millisecond };

/// Per-sub-segment end times for both sides of a session under one of the
/// two time models, plus the chunk structure they were derived from.
struct TimedSession {
  std::vector<double> in_end;
  std::vector<double> out_end;
  TimeUnit unit = TimeUnit::Step;
  ChunkedSession chunking;
};

/// Non-computation-aware step clock: the source streams one sub-segment per
/// step (input i ends at step i), reading and writing proceed in parallel,
/// and each output sub-segment takes one step, gated so that a chunk's first
/// output starts only after the chunk's last input has ended.
TimedSession assign_nca_times(const ChunkedSession& chunked);

/// Computation-aware millisecond clock built from wall-clock timestamps.
/// Speech inputs end at cumulative speech offsets; text inputs at their
/// event timestamps. Text outputs end at their event timestamps (output
/// duration ignored); speech outputs play back sequentially, each chunk
/// starting at its emission timestamp or the previous chunk's playback end,
/// whichever is later.
TimedSession assign_ca_times(const ChunkedSession& chunked);

}  // namespace simul
