// SPDX-License-Identifier: Apache-2.0

#include "simul/jsonl.hpp"

#include <fstream>

#include <json.hpp>

#include "simul/error.hpp"

namespace simul {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::string where = line_no > 0 ? "line " + std::to_string(line_no) + ": " : "";
  fail(Errc::ParseError, where + what);
}

Modality parse_modality(const json& side, int line_no, const char* key) {
  if (!side.is_object() || !side.contains("modality") || !side["modality"].is_string()) {
    parse_fail(line_no, std::string("'") + key + "' needs a \"modality\" string");
  }
  const std::string m = side["modality"].get<std::string>();
  if (m == "text") return Modality::Text;
  if (m == "speech") return Modality::Speech;
  parse_fail(line_no, "unknown modality '" + m + "'");
}

double non_negative_number(const json& v, int line_no, const char* key) {
  if (!v.is_number()) parse_fail(line_no, std::string("event field '") + key + "' must be a number");
  const double d = v.get<double>();
  if (d < 0.0) parse_fail(line_no, std::string("event field '") + key + "' must be non-negative");
  return d;
}

}  // namespace

SessionTrace parse_session_json(const std::string& line, int line_no) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    parse_fail(line_no, e.what());
  }
  if (!j.is_object()) parse_fail(line_no, "session must be a JSON object");

  SessionTrace trace;
  if (!j.contains("id") || !j["id"].is_string()) parse_fail(line_no, "missing string field \"id\"");
  trace.id = j["id"].get<std::string>();
  if (!j.contains("src") || !j.contains("tgt")) {
    parse_fail(line_no, "session needs \"src\" and \"tgt\" modality objects");
  }
  trace.src_modality = parse_modality(j["src"], line_no, "src");
  trace.tgt_modality = parse_modality(j["tgt"], line_no, "tgt");

  if (!j.contains("events") || !j["events"].is_array()) {
    parse_fail(line_no, "missing array field \"events\"");
  }
  for (const json& je : j["events"]) {
    if (!je.is_object()) parse_fail(line_no, "event must be a JSON object");
    Event e;
    if (!je.contains("a") || !je["a"].is_string()) {
      parse_fail(line_no, "event needs an action field \"a\"");
    }
    const std::string a = je["a"].get<std::string>();
    if (a == "r") {
      e.action = Action::Read;
    } else if (a == "w") {
      e.action = Action::Write;
    } else {
      parse_fail(line_no, "event action must be \"r\" or \"w\", got '" + a + "'");
    }
    if (je.contains("tok")) {
      if (!je["tok"].is_string()) parse_fail(line_no, "event field 'tok' must be a string");
      e.payload = je["tok"].get<std::string>();
    }
    if (je.contains("ms")) e.duration_ms = non_negative_number(je["ms"], line_no, "ms");
    if (je.contains("ts")) e.ts_ms = non_negative_number(je["ts"], line_no, "ts");
    trace.events.push_back(std::move(e));
  }

  if (j.contains("reference")) {
    if (!j["reference"].is_array()) parse_fail(line_no, "\"reference\" must be an array");
    std::vector<std::string> ref;
    for (const json& tok : j["reference"]) {
      if (!tok.is_string()) parse_fail(line_no, "\"reference\" entries must be strings");
      ref.push_back(tok.get<std::string>());
    }
    trace.reference = std::move(ref);
  }
  return trace;
}

std::string session_to_json(const SessionTrace& trace) {
  json j;
  j["id"] = trace.id;
  j["src"] = {{"modality", modality_name(trace.src_modality)}};
  j["tgt"] = {{"modality", modality_name(trace.tgt_modality)}};
  j["events"] = json::array();
  for (const Event& e : trace.events) {
    json je;
    je["a"] = e.action == Action::Read ? "r" : "w";
    const Modality side = e.action == Action::Read ? trace.src_modality : trace.tgt_modality;
    if (side == Modality::Text) {
      je["tok"] = e.payload;
    } else {
      je["ms"] = e.duration_ms;
    }
    if (e.ts_ms) je["ts"] = *e.ts_ms;
    j["events"].push_back(std::move(je));
  }
  if (trace.reference) j["reference"] = *trace.reference;
  return j.dump();
}

JsonlCorpus load_jsonl(const std::string& path, bool skip_bad) {
  std::ifstream in(path);
  if (!in) fail(Errc::FileNotFound, "cannot open '" + path + "'");

  JsonlCorpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      corpus.sessions.push_back(parse_session_json(line, line_no));
    } catch (const LatencyError&) {
      if (!skip_bad) throw;
      corpus.bad_lines.emplace_back(line_no, line);
    }
  }
  return corpus;
}

}  // namespace simul
