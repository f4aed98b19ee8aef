// SPDX-License-Identifier: Apache-2.0

#include "simul/metrics.hpp"

#include <algorithm>
#include <cctype>

#include "simul/error.hpp"

namespace simul {

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::Cw: return "CW";
    case Metric::Ap: return "AP";
    case Metric::Al: return "AL";
    case Metric::Laal: return "LAAL";
    case Metric::Atd: return "ATD";
  }
  return "?";
}

std::optional<Metric> metric_from_name(const std::string& name) {
  std::string lower;
  lower.reserve(name.size());
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "cw") return Metric::Cw;
  if (lower == "ap") return Metric::Ap;
  if (lower == "al") return Metric::Al;
  if (lower == "laal") return Metric::Laal;
  if (lower == "atd") return Metric::Atd;
  return std::nullopt;
}

std::vector<Metric> all_metrics() {
  return {Metric::Al, Metric::Laal, Metric::Ap, Metric::Cw, Metric::Atd};
}

namespace {

void require_both_sides(const ChunkedSession& s) {
  if (s.output_len() == 0) fail(Errc::EmptySide, "trace '" + s.id + "' has no output");
  if (s.input_len() == 0) fail(Errc::EmptySide, "trace '" + s.id + "' has no input");
}

}  // namespace

double average_cw(const ChunkedSession& chunked) {
  require_both_sides(chunked);
  int boundaries_with_reads = 0;
  for (const ChunkSpan& c : chunked.chunks) {
    if (c.output_len() > 0 && c.input_len() > 0) ++boundaries_with_reads;
  }
  if (boundaries_with_reads == 0) {
    fail(Errc::DivisionByZero,
         "trace '" + chunked.id + "': no output chunk follows a read");
  }
  return static_cast<double>(chunked.input_len()) / boundaries_with_reads;
}

double average_proportion(const ChunkedSession& chunked) {
  require_both_sides(chunked);
  double sum = 0.0;
  for (int g : delay_function(chunked)) sum += g;
  return sum / (static_cast<double>(chunked.input_len()) * chunked.output_len());
}

double average_lagging(const ChunkedSession& chunked, LatencyRatioMode mode) {
  require_both_sides(chunked);
  const int x_len = chunked.input_len();
  const int y_len = chunked.output_len();

  double r = 0.0;
  switch (mode) {
    case LatencyRatioMode::Output:
      r = static_cast<double>(y_len) / x_len;
      break;
    case LatencyRatioMode::Reference:
    case LatencyRatioMode::Laal: {
      if (!chunked.reference || chunked.reference->empty()) {
        fail(Errc::MissingReference,
             "trace '" + chunked.id + "': length-ratio mode needs a reference translation");
      }
      const int ref_len = static_cast<int>(chunked.reference->size());
      const int num = mode == LatencyRatioMode::Reference ? ref_len : std::max(y_len, ref_len);
      r = static_cast<double>(num) / x_len;
      break;
    }
  }

  const std::vector<int> g = delay_function(chunked);
  // Cut-off: first output predicted after the whole input was read; falls
  // back to |y| when the input is never exhausted within the outputs.
  int cutoff = y_len;
  for (int t = 1; t <= y_len; ++t) {
    if (g[t - 1] == x_len) {
      cutoff = t;
      break;
    }
  }
  double sum = 0.0;
  for (int t = 1; t <= cutoff; ++t) sum += g[t - 1] - (t - 1) / r;
  return sum / cutoff;
}

AtdResult atd(const TimedSession& timed) {
  const ChunkedSession& s = timed.chunking;
  if (s.output_len() == 0) fail(Errc::EmptyOutput, "trace '" + s.id + "' has no output");

  AtdResult result;
  result.correspondences.reserve(s.output_len());
  double sum = 0.0;
  for (int c = 1; c <= s.chunk_count(); ++c) {
    // How far the previous output prefix overhangs the previous input
    // prefix; a longer earlier output pushes correspondences back.
    const int debt = std::max(s.cum_out[c - 1] - s.cum_in[c - 1], 0);
    for (int t = s.cum_out[c - 1] + 1; t <= s.cum_out[c]; ++t) {
      TokenCorrespondence tc;
      tc.t = t;
      tc.chunk = c;
      tc.s = t - debt;
      tc.a = std::min(tc.s, s.cum_in[c]);
      tc.out_end = timed.out_end[t - 1];
      tc.in_end = tc.a > 0 ? timed.in_end[tc.a - 1] : 0.0;
      tc.delay = tc.out_end - tc.in_end;
      sum += tc.delay;
      result.correspondences.push_back(tc);
    }
  }
  result.value = sum / s.output_len();
  return result;
}

const std::optional<double>& SentenceMetrics::value(Metric m) const {
  switch (m) {
    case Metric::Cw: return cw;
    case Metric::Ap: return ap;
    case Metric::Al: return al;
    case Metric::Laal: return laal;
    case Metric::Atd: return atd;
  }
  return cw;
}

const std::optional<double>& CorpusSummary::value(Metric m) const {
  switch (m) {
    case Metric::Cw: return cw;
    case Metric::Ap: return ap;
    case Metric::Al: return al;
    case Metric::Laal: return laal;
    case Metric::Atd: return atd;
  }
  return cw;
}

CorpusSummary corpus_aggregate(const std::vector<SentenceMetrics>& sentences) {
  if (sentences.empty()) fail(Errc::EmptyCorpus, "no sentences to aggregate");

  CorpusSummary corpus;
  double sums[5] = {};
  int counts[5] = {};
  for (const SentenceMetrics& sm : sentences) {
    if (!sm.ok()) {
      ++corpus.excluded;
      continue;
    }
    ++corpus.n;
    const std::optional<double> vals[5] = {sm.cw, sm.ap, sm.al, sm.laal, sm.atd};
    for (int i = 0; i < 5; ++i) {
      if (vals[i]) {
        sums[i] += *vals[i];
        ++counts[i];
      }
    }
  }
  std::optional<double>* out[5] = {&corpus.cw, &corpus.ap, &corpus.al, &corpus.laal, &corpus.atd};
  for (int i = 0; i < 5; ++i) {
    if (counts[i] > 0) *out[i] = sums[i] / counts[i];
  }
  return corpus;
}

}  // namespace simul
