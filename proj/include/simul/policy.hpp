// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "simul/trace.hpp"

namespace simul {

/// A synthetic read/write policy: wait-k, chunk-k, or a fixed two-segment
/// split. Generated tokens are positional placeholders; content is
/// irrelevant to latency.
struct PolicySpec {
  enum class Kind { WaitK, ChunkK, TwoSegment };

  Kind kind = Kind::WaitK;
  int src_len = 0;
  int tgt_len = 0;
  int k = 0;
  std::array<int, 2> in_lens{};
  std::array<int, 2> out_lens{};

  static PolicySpec wait_k(int src_len, int tgt_len, int k);
  static PolicySpec chunk_k(int src_len, int tgt_len, int k);
  static PolicySpec two_segment(std::array<int, 2> in_lens, std::array<int, 2> out_lens);
};

SessionTrace generate_trace(const PolicySpec& spec);

/// Reads k tokens, then alternates one write and one read; leftover outputs
/// are written consecutively once the source is exhausted, leftover reads
/// trail after the final write.
SessionTrace wait_k_trace(int src_len, int tgt_len, int k);

/// Alternates runs of k reads and k writes; the final input chunk is the
/// source residue, and once the source is exhausted all remaining outputs
/// form one final chunk.
SessionTrace chunk_k_trace(int src_len, int tgt_len, int k);

/// Two paired segments: reads in_lens[0], writes out_lens[0], reads
/// in_lens[1], writes out_lens[1].
SessionTrace two_segment_trace(std::array<int, 2> in_lens, std::array<int, 2> out_lens);

/// Independent brute-force ATD under the step clock: walks the raw event
/// sequence, schedules outputs against the chunk gate, and assigns
/// correspondences with an explicit cursor. Shares no code with the
/// closed-form path; used to cross-check it.
double oracle_timeline_atd(const SessionTrace& trace);

enum class SimCase { Case1_40_40, Case2_40_100, Case3_40_20, Case4_L1, Case5_L2 };
enum class SweepPolicy { WaitK, ChunkK };

std::optional<SimCase> sim_case_from_name(const std::string& name);
const char* sim_case_name(SimCase c);

struct SweepRow {
  int param = 0;
  std::string policy;
  double al = 0.0;
  double atd = 0.0;
  std::optional<double> ap;
  std::optional<double> cw;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool with_ap_cw = false;
};

/// Runs one simulation case over the parameter range [lo, hi]: generates the
/// trace per parameter value, evaluates AL and step-clock ATD (plus AP/CW on
/// request) in one pass, and returns row-aligned results.
SweepResult run_sweep(SimCase sim_case, const std::vector<SweepPolicy>& policies, int lo, int hi,
                      bool with_ap_cw = false);

/// Default parameter range for a case: k in [1,40] for the fixed-length
/// cases, segment length in [1,60] for the two-segment cases.
std::pair<int, int> default_sweep_range(SimCase c);

}  // namespace simul
