// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simul/timing.hpp"

namespace simul {

/// Length ratio used by average lagging: output length, reference length,
/// or the longer of the two, each divided by the input length.
enum class LatencyRatioMode { Output, Reference, Laal };

enum class Metric { Cw, Ap, Al, Laal, Atd };

const char* metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& name);
std::vector<Metric> all_metrics();

/// One row of the token-delay correspondence: output sub-segment t in chunk
/// `chunk` maps to input sub-segment `a` (0 only for leading-write chunks),
/// via the pre-clamp index `s`.
struct TokenCorrespondence {
  int t = 0;
  int chunk = 0;
  int s = 0;
  int a = 0;
  double out_end = 0.0;  // end time of output t
  double in_end = 0.0;   // end time of input a; 0 when a = 0
  double delay = 0.0;
};

struct AtdResult {
  double value = 0.0;
  std::vector<TokenCorrespondence> correspondences;
};

/// Average consecutive wait: input length divided by the number of chunks
/// whose output is non-empty and whose input advanced the read count.
/// Errors: EmptySide, DivisionByZero.
double average_cw(const ChunkedSession& chunked);

/// Average proportion of the input read per output sub-segment.
/// Errors: EmptySide.
double average_proportion(const ChunkedSession& chunked);

/// Average lagging with the configured length-ratio mode. When the delay
/// function never reaches the full input (trailing reads), the cut-off step
/// falls back to the output length. May be negative.
/// Errors: EmptySide, MissingReference.
double average_lagging(const ChunkedSession& chunked,
                       LatencyRatioMode mode = LatencyRatioMode::Output);

/// Average token delay: the mean difference between each output
/// sub-segment's end time and its corresponding input sub-segment's end
/// time, with the full correspondence list for inspection.
/// Errors: EmptyOutput.
AtdResult atd(const TimedSession& timed);

/// Per-sentence metric values; a metric that errored is absent and recorded
/// in `errors` as (metric or "session", message).
struct SentenceMetrics {
  std::string id;
  std::optional<double> cw, ap, al, laal, atd;
  std::vector<double> atd_delays;
  std::vector<std::pair<std::string, std::string>> errors;

  bool ok() const { return errors.empty(); }
  const std::optional<double>& value(Metric m) const;
};

struct CorpusSummary {
  std::optional<double> cw, ap, al, laal, atd;
  int n = 0;         // sentences aggregated (no errors)
  int excluded = 0;  // sentences dropped because a requested metric errored

  const std::optional<double>& value(Metric m) const;
};

struct MetricReport {
  std::vector<SentenceMetrics> sentences;
  CorpusSummary corpus;
};

/// Unweighted per-sentence arithmetic means; sentences with any error are
/// excluded from every mean and counted separately.
/// Errors: EmptyCorpus.
CorpusSummary corpus_aggregate(const std::vector<SentenceMetrics>& sentences);

}  // namespace simul
