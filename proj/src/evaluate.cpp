// SPDX-License-Identifier: Apache-2.0

#include "simul/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include "simul/error.hpp"

namespace simul {

bool EvalConfig::wants(Metric m) const {
  return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
}

TimedSession session_timeline(const SessionTrace& raw, TimeModel model, double seg_ms) {
  const SessionTrace trace = validate_trace(raw, model == TimeModel::Ca);
  ChunkedSession chunked = derive_chunks(trace);
  if (trace.src_modality == Modality::Speech || trace.tgt_modality == Modality::Speech) {
    chunked = subsegment_speech(chunked, seg_ms);
  }
  return model == TimeModel::Nca ? assign_nca_times(chunked) : assign_ca_times(chunked);
}

SentenceMetrics evaluate_session(const SessionTrace& raw, const EvalConfig& config) {
  SentenceMetrics sm;
  sm.id = raw.id;

  ChunkedSession chunked;
  try {
    const SessionTrace trace = validate_trace(raw, config.time_model == TimeModel::Ca);
    chunked = derive_chunks(trace);
    if (trace.src_modality == Modality::Speech || trace.tgt_modality == Modality::Speech) {
      chunked = subsegment_speech(chunked, config.seg_ms);
    }
  } catch (const LatencyError& e) {
    sm.errors.emplace_back("session", e.what());
    return sm;
  }

  auto compute = [&](Metric m, auto&& fn) {
    if (!config.wants(m)) return;
    try {
      fn();
    } catch (const LatencyError& e) {
      sm.errors.emplace_back(metric_name(m), e.what());
    }
  };
  compute(Metric::Cw, [&] { sm.cw = average_cw(chunked); });
  compute(Metric::Ap, [&] { sm.ap = average_proportion(chunked); });
  compute(Metric::Al, [&] { sm.al = average_lagging(chunked, config.ratio_mode); });
  compute(Metric::Laal, [&] { sm.laal = average_lagging(chunked, LatencyRatioMode::Laal); });
  compute(Metric::Atd, [&] {
    const TimedSession timed = config.time_model == TimeModel::Nca ? assign_nca_times(chunked)
                                                                   : assign_ca_times(chunked);
    AtdResult r = atd(timed);
    sm.atd = r.value;
    sm.atd_delays.reserve(r.correspondences.size());
    for (const TokenCorrespondence& tc : r.correspondences) sm.atd_delays.push_back(tc.delay);
  });
  return sm;
}

MetricReport evaluate_sessions(const std::vector<SessionTrace>& sessions,
                               const EvalConfig& config) {
  if (sessions.empty()) fail(Errc::EmptyCorpus, "no sessions in input");

  if (config.time_model == TimeModel::Ca) {
    const bool any_timestamped = std::any_of(sessions.begin(), sessions.end(),
                                             [](const SessionTrace& s) { return s.has_full_timestamps(); });
    if (!any_timestamped) {
      fail(Errc::ConfigConflict,
           "computation-aware evaluation requested but no session carries timestamps");
    }
  }

  MetricReport report;
  report.sentences.resize(sessions.size());
  const int jobs = std::max(1, config.parallelism);
  if (jobs == 1 || sessions.size() == 1) {
    for (std::size_t i = 0; i < sessions.size(); ++i) {
      report.sentences[i] = evaluate_session(sessions[i], config);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < sessions.size(); i = next.fetch_add(1)) {
        report.sentences[i] = evaluate_session(sessions[i], config);
      }
    };
    std::vector<std::thread> pool;
    const int n_threads = static_cast<int>(std::min<std::size_t>(jobs, sessions.size()));
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.corpus = corpus_aggregate(report.sentences);
  return report;
}

MetricReport evaluate_corpus(const EvalConfig& config) {
  JsonlCorpus corpus = load_jsonl(config.input_path, config.skip_bad);
  if (!corpus.bad_lines.empty()) {
    const std::string sidecar = config.input_path + ".bad";
    std::ofstream out(sidecar);
    if (!out) fail(Errc::IoError, "cannot write quarantine file '" + sidecar + "'");
    for (const auto& [line_no, text] : corpus.bad_lines) out << text << '\n';
  }
  return evaluate_sessions(corpus.sessions, config);
}

}  // namespace simul
