// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "simul/metrics.hpp"
#include "simul/policy.hpp"

namespace simul {

/// Fixed-point rendering with six decimal places; used for every float the
/// tools emit so reports diff cleanly.
std::string format_fixed6(double value);

/// {"atd_unit": ..., "corpus": {"AL": ..., "n": ..., "excluded": ...},
///  "sentences": [...]}. Only requested metrics appear; errored sentences
/// keep their id and an "errors" object.
std::string report_json(const MetricReport& report, const std::vector<Metric>& requested,
                        TimeUnit atd_unit);

/// Header `id AL LAAL AP CW ATD`, one row per aggregated sentence (excluded
/// sentences are omitted), unrequested metrics rendered as NA.
std::string report_tsv(const MetricReport& report, const std::vector<Metric>& requested);

/// Header `param,policy,AL,ATD[,AP,CW]`, one row per (param, policy).
std::string sweep_csv(const SweepResult& result);

}  // namespace simul
