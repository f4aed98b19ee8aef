// SPDX-License-Identifier: Apache-2.0

#include "simul/policy.hpp"

#include <algorithm>

#include "simul/error.hpp"
#include "simul/metrics.hpp"

namespace simul {

namespace {

std::string src_token(int i) { return "s" + std::to_string(i); }
std::string tgt_token(int i) { return "t" + std::to_string(i); }

void check_lengths(int src_len, int tgt_len) {
  if (src_len < 1 || tgt_len < 1) {
    fail(Errc::InvalidLengths, "source and target lengths must be at least 1");
  }
}

}  // namespace

PolicySpec PolicySpec::wait_k(int src_len, int tgt_len, int k) {
  PolicySpec s;
  s.kind = Kind::WaitK;
  s.src_len = src_len;
  s.tgt_len = tgt_len;
  s.k = k;
  return s;
}

PolicySpec PolicySpec::chunk_k(int src_len, int tgt_len, int k) {
  PolicySpec s = wait_k(src_len, tgt_len, k);
  s.kind = Kind::ChunkK;
  return s;
}

PolicySpec PolicySpec::two_segment(std::array<int, 2> in_lens, std::array<int, 2> out_lens) {
  PolicySpec s;
  s.kind = Kind::TwoSegment;
  s.in_lens = in_lens;
  s.out_lens = out_lens;
  return s;
}

SessionTrace generate_trace(const PolicySpec& spec) {
  switch (spec.kind) {
    case PolicySpec::Kind::WaitK: return wait_k_trace(spec.src_len, spec.tgt_len, spec.k);
    case PolicySpec::Kind::ChunkK: return chunk_k_trace(spec.src_len, spec.tgt_len, spec.k);
    case PolicySpec::Kind::TwoSegment: return two_segment_trace(spec.in_lens, spec.out_lens);
  }
  fail(Errc::InvalidLengths, "unknown policy kind");
}

SessionTrace wait_k_trace(int src_len, int tgt_len, int k) {
  if (k < 1) fail(Errc::InvalidK, "wait-k needs k >= 1");
  check_lengths(src_len, tgt_len);

  SessionTrace trace;
  trace.id = "wait" + std::to_string(k) + "-" + std::to_string(src_len) + "x" +
             std::to_string(tgt_len);
  trace.events.reserve(src_len + tgt_len);

  int reads = 0, writes = 0;
  for (; reads < std::min(k, src_len); ++reads) {
    trace.events.push_back(Event::read_token(src_token(reads + 1)));
  }
  while (writes < tgt_len) {
    trace.events.push_back(Event::write_token(tgt_token(++writes)));
    if (writes < tgt_len && reads < src_len) {
      trace.events.push_back(Event::read_token(src_token(++reads)));
    }
  }
  while (reads < src_len) {
    trace.events.push_back(Event::read_token(src_token(++reads)));
  }
  return trace;
}

SessionTrace chunk_k_trace(int src_len, int tgt_len, int k) {
  if (k < 1) fail(Errc::InvalidK, "chunk-k needs k >= 1");
  check_lengths(src_len, tgt_len);

  SessionTrace trace;
  trace.id = "chunk" + std::to_string(k) + "-" + std::to_string(src_len) + "x" +
             std::to_string(tgt_len);
  trace.events.reserve(src_len + tgt_len);

  int reads = 0, writes = 0;
  while (reads < src_len || writes < tgt_len) {
    for (int i = std::min(k, src_len - reads); i > 0; --i) {
      trace.events.push_back(Event::read_token(src_token(++reads)));
    }
    // Once the source is exhausted, all remaining outputs form one chunk.
    int run = reads < src_len ? std::min(k, tgt_len - writes) : tgt_len - writes;
    for (; run > 0; --run) {
      trace.events.push_back(Event::write_token(tgt_token(++writes)));
    }
  }
  return trace;
}

SessionTrace two_segment_trace(std::array<int, 2> in_lens, std::array<int, 2> out_lens) {
  if (in_lens[0] < 1 || in_lens[1] < 1) {
    fail(Errc::InvalidLengths, "two-segment input lengths must be positive");
  }
  if (out_lens[0] < 0 || out_lens[1] < 0 || (out_lens[0] == 0 && out_lens[1] == 0)) {
    fail(Errc::InvalidLengths, "two-segment output lengths must be non-negative, not both zero");
  }

  SessionTrace trace;
  trace.id = "twoseg-" + std::to_string(in_lens[0]) + "+" + std::to_string(in_lens[1]) + "-" +
             std::to_string(out_lens[0]) + "+" + std::to_string(out_lens[1]);
  int reads = 0, writes = 0;
  for (int seg = 0; seg < 2; ++seg) {
    for (int i = 0; i < in_lens[seg]; ++i) {
      trace.events.push_back(Event::read_token(src_token(++reads)));
    }
    for (int i = 0; i < out_lens[seg]; ++i) {
      trace.events.push_back(Event::write_token(tgt_token(++writes)));
    }
  }
  return trace;
}

double oracle_timeline_atd(const SessionTrace& trace) {
  // Step clock: input i occupies step i. Outputs are emitted sequentially,
  // each gated on the inputs read so far. The correspondence cursor advances
  // once per output token, held back while the output side is in debt from a
  // longer previous output chunk and clamped at the inputs read so far.
  int reads = 0;
  int writes = 0;
  int reads_at_prev_run_end = 0;
  int debt = 0;
  bool in_write_run = false;
  double prev_out_end = 0.0;
  double delay_sum = 0.0;

  for (const Event& e : trace.events) {
    if (e.action == Action::Read) {
      if (in_write_run) {
        reads_at_prev_run_end = reads;
        in_write_run = false;
      }
      ++reads;
    } else {
      if (!in_write_run) {
        debt = std::max(writes - reads_at_prev_run_end, 0);
        in_write_run = true;
      }
      ++writes;
      const double out_end = std::max(prev_out_end, static_cast<double>(reads)) + 1.0;
      prev_out_end = out_end;
      const int cursor = std::min(writes - debt, reads);
      delay_sum += out_end - (cursor > 0 ? cursor : 0);
    }
  }
  if (writes == 0) fail(Errc::EmptyOutput, "trace '" + trace.id + "' has no output");
  return delay_sum / writes;
}

std::optional<SimCase> sim_case_from_name(const std::string& name) {
  if (name == "case1") return SimCase::Case1_40_40;
  if (name == "case2") return SimCase::Case2_40_100;
  if (name == "case3") return SimCase::Case3_40_20;
  if (name == "case4") return SimCase::Case4_L1;
  if (name == "case5") return SimCase::Case5_L2;
  return std::nullopt;
}

const char* sim_case_name(SimCase c) {
  switch (c) {
    case SimCase::Case1_40_40: return "case1";
    case SimCase::Case2_40_100: return "case2";
    case SimCase::Case3_40_20: return "case3";
    case SimCase::Case4_L1: return "case4";
    case SimCase::Case5_L2: return "case5";
  }
  return "?";
}

std::pair<int, int> default_sweep_range(SimCase c) {
  switch (c) {
    case SimCase::Case1_40_40:
    case SimCase::Case2_40_100:
    case SimCase::Case3_40_20:
      return {1, 40};
    case SimCase::Case4_L1:
    case SimCase::Case5_L2:
      return {1, 60};
  }
  return {1, 40};
}

namespace {

SweepRow evaluate_row(int param, std::string policy, const SessionTrace& trace, bool with_ap_cw) {
  const ChunkedSession chunked = derive_chunks(validate_trace(trace));
  SweepRow row;
  row.param = param;
  row.policy = std::move(policy);
  row.al = average_lagging(chunked);
  row.atd = atd(assign_nca_times(chunked)).value;
  if (with_ap_cw) {
    row.ap = average_proportion(chunked);
    row.cw = average_cw(chunked);
  }
  return row;
}

}  // namespace

SweepResult run_sweep(SimCase sim_case, const std::vector<SweepPolicy>& policies, int lo, int hi,
                      bool with_ap_cw) {
  if (lo < 1 || hi < lo) fail(Errc::InvalidRange, "sweep range must satisfy 1 <= lo <= hi");

  const bool fixed_lengths = sim_case == SimCase::Case1_40_40 ||
                             sim_case == SimCase::Case2_40_100 ||
                             sim_case == SimCase::Case3_40_20;
  if (fixed_lengths) {
    if (hi > 40) fail(Errc::InvalidRange, "k range for the fixed-length cases is 1..40");
    if (policies.empty()) fail(Errc::InvalidRange, "no policies selected");
  }

  SweepResult result;
  result.with_ap_cw = with_ap_cw;
  for (int param = lo; param <= hi; ++param) {
    switch (sim_case) {
      case SimCase::Case1_40_40:
      case SimCase::Case2_40_100:
      case SimCase::Case3_40_20: {
        const int tgt = sim_case == SimCase::Case1_40_40    ? 40
                        : sim_case == SimCase::Case2_40_100 ? 100
                                                            : 20;
        for (SweepPolicy p : policies) {
          const bool wait = p == SweepPolicy::WaitK;
          result.rows.push_back(evaluate_row(
              param, wait ? "wait" : "chunk",
              wait ? wait_k_trace(40, tgt, param) : chunk_k_trace(40, tgt, param), with_ap_cw));
        }
        break;
      }
      case SimCase::Case4_L1:
        result.rows.push_back(
            evaluate_row(param, "twoseg", two_segment_trace({20, 20}, {param, 20}), with_ap_cw));
        break;
      case SimCase::Case5_L2:
        result.rows.push_back(
            evaluate_row(param, "twoseg", two_segment_trace({20, 20}, {20, param}), with_ap_cw));
        break;
    }
  }
  return result;
}

}  // namespace simul
