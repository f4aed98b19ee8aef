// SPDX-License-Identifier: Apache-2.0
//
// simul-latency: latency metrics and policy simulations for simultaneous
// translation traces.
//   evaluate  score a JSONL trace corpus (CW/AP/AL/LAAL/ATD)
//   simulate  run a wait-k / chunk-k / two-segment sweep to CSV
//   inspect   print the per-token delay correspondence of one session

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simul/error.hpp"
#include "simul/evaluate.hpp"
#include "simul/report.hpp"

namespace {

int exit_code_for(simul::Errc code) {
  switch (code) {
    case simul::Errc::ConfigConflict:
    case simul::Errc::InvalidRange:
    case simul::Errc::InvalidK:
    case simul::Errc::InvalidLengths:
    case simul::Errc::NonPositiveSegmentLength:
      return 1;  // usage / config
    default:
      return 2;  // data
  }
}

std::vector<simul::Metric> parse_metric_list(const std::string& csv) {
  std::vector<simul::Metric> metrics;
  std::string item;
  std::stringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto m = simul::metric_from_name(item);
    if (!m) simul::fail(simul::Errc::ConfigConflict, "unknown metric '" + item + "'");
    if (std::find(metrics.begin(), metrics.end(), *m) == metrics.end()) metrics.push_back(*m);
  }
  if (metrics.empty()) simul::fail(simul::Errc::ConfigConflict, "empty metric list");
  return metrics;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  try {
    if (sep == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, sep)), std::stoi(text.substr(sep + 2))};
  } catch (const std::exception&) {
    simul::fail(simul::Errc::InvalidRange, "range must look like A..B, got '" + text + "'");
  }
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) simul::fail(simul::Errc::IoError, "cannot write '" + path + "'");
  out << content;
}

int cmd_evaluate(const simul::EvalConfig& config, const std::string& out_path) {
  const simul::MetricReport report = simul::evaluate_corpus(config);
  const std::string rendered = config.format == simul::ReportFormat::Json
                                   ? simul::report_json(report, config.metrics, config.atd_unit())
                                   : simul::report_tsv(report, config.metrics);
  write_output(out_path, rendered);
  if (config.format == simul::ReportFormat::Json && (out_path.empty() || out_path == "-")) {
    std::cout << '\n';
  }
  return 0;
}

int cmd_simulate(const std::string& case_name, const std::vector<std::string>& policy_names,
                 const std::string& range_text, const std::string& out_path, bool with_ap_cw) {
  const auto sim_case = simul::sim_case_from_name(case_name);
  if (!sim_case) {
    simul::fail(simul::Errc::InvalidRange, "unknown case '" + case_name + "' (case1..case5)");
  }
  std::vector<simul::SweepPolicy> policies;
  for (const std::string& p : policy_names) {
    if (p == "wait") {
      policies.push_back(simul::SweepPolicy::WaitK);
    } else if (p == "chunk") {
      policies.push_back(simul::SweepPolicy::ChunkK);
    } else {
      simul::fail(simul::Errc::InvalidRange, "unknown policy '" + p + "' (wait, chunk)");
    }
  }
  auto [lo, hi] = range_text.empty() ? simul::default_sweep_range(*sim_case)
                                     : parse_range(range_text);
  const simul::SweepResult result = simul::run_sweep(*sim_case, policies, lo, hi, with_ap_cw);
  write_output(out_path, simul::sweep_csv(result));
  return 0;
}

int cmd_inspect(const std::string& input_path, const std::string& id) {
  const simul::JsonlCorpus corpus = simul::load_jsonl(input_path);
  const simul::SessionTrace* found = nullptr;
  for (const auto& s : corpus.sessions) {
    if (s.id == id) {
      found = &s;
      break;
    }
  }
  if (!found) simul::fail(simul::Errc::IdNotFound, "no session with id '" + id + "'");

  const simul::TimedSession timed = simul::session_timeline(*found, simul::TimeModel::Nca);
  const simul::AtdResult result = simul::atd(timed);
  std::cout << "t\tc\ts\ta\tT_out\tT_in\tdelay\n";
  for (const simul::TokenCorrespondence& tc : result.correspondences) {
    std::cout << tc.t << '\t' << tc.chunk << '\t' << tc.s << '\t' << tc.a << '\t'
              << simul::format_fixed6(tc.out_end) << '\t' << simul::format_fixed6(tc.in_end)
              << '\t' << simul::format_fixed6(tc.delay) << '\n';
  }
  std::cout << "# ATD\t" << simul::format_fixed6(result.value) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latency metrology for simultaneous translation traces"};
  app.require_subcommand(1);

  simul::EvalConfig config;
  std::string time_model = "nca";
  std::string ratio = "output";
  std::string metrics_csv = "al,laal,ap,cw,atd";
  std::string format = "json";
  std::string eval_out;

  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a JSONL trace corpus");
  evaluate->add_option("--input", config.input_path, "JSONL trace file")->required();
  evaluate->add_option("--time-model", time_model, "nca | ca")
      ->check(CLI::IsMember({"nca", "ca"}));
  evaluate->add_option("--ratio", ratio, "AL length-ratio mode: output | reference | laal")
      ->check(CLI::IsMember({"output", "reference", "laal"}));
  evaluate->add_option("--metrics", metrics_csv, "comma list of al,laal,ap,cw,atd");
  evaluate->add_option("--format", format, "json | tsv")->check(CLI::IsMember({"json", "tsv"}));
  evaluate->add_option("--seg-ms", config.seg_ms, "speech sub-segment length in ms");
  evaluate->add_option("--jobs", config.parallelism, "parallel sessions")
      ->check(CLI::PositiveNumber);
  evaluate->add_flag("--skip-bad", config.skip_bad,
                     "quarantine malformed lines to <input>.bad instead of failing");
  evaluate->add_option("--out", eval_out, "report file (default: stdout)");

  std::string case_name;
  std::string range_text;
  std::string sim_out;
  std::vector<std::string> policy_names = {"wait", "chunk"};
  bool with_ap_cw = false;

  CLI::App* simulate = app.add_subcommand("simulate", "Run a policy sweep to CSV");
  simulate->add_option("--case", case_name, "case1 | case2 | case3 | case4 | case5")->required();
  simulate->add_option("--policies", policy_names, "policies for case1-3: wait, chunk")
      ->delimiter(',');
  simulate->add_option("--range", range_text, "parameter range A..B (default per case)");
  simulate->add_option("--out", sim_out, "output CSV file")->required();
  simulate->add_flag("--with-ap-cw", with_ap_cw, "append AP and CW columns");

  std::string inspect_input;
  std::string inspect_id;
  CLI::App* inspect = app.add_subcommand("inspect", "Print a session's delay correspondences");
  inspect->add_option("--input", inspect_input, "JSONL trace file")->required();
  inspect->add_option("--id", inspect_id, "session id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (evaluate->parsed()) {
      config.time_model = time_model == "ca" ? simul::TimeModel::Ca : simul::TimeModel::Nca;
      config.ratio_mode = ratio == "reference" ? simul::LatencyRatioMode::Reference
                          : ratio == "laal"    ? simul::LatencyRatioMode::Laal
                                               : simul::LatencyRatioMode::Output;
      config.metrics = parse_metric_list(metrics_csv);
      config.format = format == "tsv" ? simul::ReportFormat::Tsv : simul::ReportFormat::Json;
      if (config.seg_ms <= 0.0) {
        simul::fail(simul::Errc::NonPositiveSegmentLength, "--seg-ms must be positive");
      }
      return cmd_evaluate(config, eval_out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(case_name, policy_names, range_text, sim_out, with_ap_cw);
    }
    return cmd_inspect(inspect_input, inspect_id);
  } catch (const simul::LatencyError& e) {
    std::cerr << "simul-latency: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "simul-latency: " << e.what() << '\n';
    return 2;
  }
}
