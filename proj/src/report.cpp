// SPDX-License-Identifier: Apache-2.0

#include "simul/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace simul {

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

void append_metric_fields(std::string& out, const SentenceMetrics& sm,
                          const std::vector<Metric>& requested) {
  for (Metric m : requested) {
    if (const auto& v = sm.value(m)) {
      out += ',';
      out += quoted(metric_name(m));
      out += ':';
      out += format_fixed6(*v);
    }
  }
}

}  // namespace

std::string report_json(const MetricReport& report, const std::vector<Metric>& requested,
                        TimeUnit atd_unit) {
  std::string out = "{\"atd_unit\":";
  out += atd_unit == TimeUnit::Step ? "\"steps\"" : "\"ms\"";

  out += ",\"corpus\":{";
  bool first = true;
  for (Metric m : requested) {
    if (const auto& v = report.corpus.value(m)) {
      if (!first) out += ',';
      first = false;
      out += quoted(metric_name(m));
      out += ':';
      out += format_fixed6(*v);
    }
  }
  if (!first) out += ',';
  out += "\"n\":" + std::to_string(report.corpus.n);
  out += ",\"excluded\":" + std::to_string(report.corpus.excluded);
  out += "}";

  out += ",\"sentences\":[";
  for (std::size_t i = 0; i < report.sentences.size(); ++i) {
    const SentenceMetrics& sm = report.sentences[i];
    if (i > 0) out += ',';
    out += "{\"id\":" + quoted(sm.id);
    append_metric_fields(out, sm, requested);
    if (!sm.atd_delays.empty()) {
      out += ",\"atd_delays\":[";
      for (std::size_t d = 0; d < sm.atd_delays.size(); ++d) {
        if (d > 0) out += ',';
        out += format_fixed6(sm.atd_delays[d]);
      }
      out += ']';
    }
    if (!sm.errors.empty()) {
      out += ",\"errors\":{";
      for (std::size_t e = 0; e < sm.errors.size(); ++e) {
        if (e > 0) out += ',';
        out += quoted(sm.errors[e].first) + ':' + quoted(sm.errors[e].second);
      }
      out += '}';
    }
    out += '}';
  }
  out += "]}";
  return out;
}

std::string report_tsv(const MetricReport& report, const std::vector<Metric>& requested) {
  auto is_requested = [&](Metric m) {
    for (Metric r : requested) {
      if (r == m) return true;
    }
    return false;
  };
  const Metric columns[] = {Metric::Al, Metric::Laal, Metric::Ap, Metric::Cw, Metric::Atd};

  std::string out = "id";
  for (Metric m : columns) {
    out += '\t';
    out += metric_name(m);
  }
  out += '\n';
  for (const SentenceMetrics& sm : report.sentences) {
    if (!sm.ok()) continue;
    out += sm.id;
    for (Metric m : columns) {
      out += '\t';
      const auto& v = sm.value(m);
      out += is_requested(m) && v ? format_fixed6(*v) : "NA";
    }
    out += '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = result.with_ap_cw ? "param,policy,AL,ATD,AP,CW" : "param,policy,AL,ATD";
  out += '\n';
  for (const SweepRow& row : result.rows) {
    out += std::to_string(row.param);
    out += ',';
    out += row.policy;
    out += ',';
    out += format_fixed6(row.al);
    out += ',';
    out += format_fixed6(row.atd);
    if (result.with_ap_cw) {
      out += ',';
      out += row.ap ? format_fixed6(*row.ap) : "NA";
      out += ',';
      out += row.cw ? format_fixed6(*row.cw) : "NA";
    }
    out += '\n';
  }
  return out;
}

}  // namespace simul
