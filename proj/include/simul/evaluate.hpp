// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "simul/jsonl.hpp"
#include "simul/metrics.hpp"

namespace simul {

enum class TimeModel { Nca, Ca };
enum class ReportFormat { Json, Tsv };

struct EvalConfig {
  std::string input_path;
  TimeModel time_model = TimeModel::Nca;
  LatencyRatioMode ratio_mode = LatencyRatioMode::Output;
  std::vector<Metric> metrics = all_metrics();
  ReportFormat format = ReportFormat::Json;
  double seg_ms = 300.0;
  int parallelism = 1;
  bool skip_bad = false;

  bool wants(Metric m) const;
  TimeUnit atd_unit() const {
    return time_model == TimeModel::Nca ? TimeUnit::Step : TimeUnit::Millisecond;
  }
};

/// Validates, chunks, sub-segments speech sides, and assigns end times under
/// the configured time model. Errors as the underlying operations.
TimedSession session_timeline(const SessionTrace& raw, TimeModel model, double seg_ms = 300.0);

/// Evaluates the requested metrics on one session; failures are recorded
/// per metric instead of thrown.
SentenceMetrics evaluate_session(const SessionTrace& raw, const EvalConfig& config);

/// Evaluates sessions (in parallel when configured) and aggregates. Results
/// are ordered by input position regardless of parallelism.
/// Errors: EmptyCorpus, ConfigConflict (CA requested but no session has
/// timestamps).
MetricReport evaluate_sessions(const std::vector<SessionTrace>& sessions,
                               const EvalConfig& config);

/// File-to-report pipeline; with skip_bad, malformed lines are quarantined
/// into `<input>.bad`. Errors: FileNotFound, ParseError, IoError, plus
/// evaluate_sessions errors.
MetricReport evaluate_corpus(const EvalConfig& config);

}  // namespace simul
