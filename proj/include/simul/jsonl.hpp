// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simul/trace.hpp"

namespace simul {

/// Parses one JSONL session line:
/// {"id": str, "src": {"modality": "text"|"speech"}, "tgt": {...},
///  "events": [{"a": "r"|"w", "tok": str, "ms": number, "ts": number}],
///  "reference": [str]}
/// Unknown fields are ignored. Errors: ParseError (message carries
/// `line_no` when non-zero).
SessionTrace parse_session_json(const std::string& line, int line_no = 0);

/// Serializes a trace back to one JSONL line.
std::string session_to_json(const SessionTrace& trace);

struct JsonlCorpus {
  std::vector<SessionTrace> sessions;
  std::vector<std::pair<int, std::string>> bad_lines;  // (line number, raw text)
};

/// Loads a JSONL trace file. Malformed lines either abort with ParseError or,
/// with `skip_bad`, are collected into `bad_lines` for quarantine.
/// Errors: FileNotFound, ParseError.
JsonlCorpus load_jsonl(const std::string& path, bool skip_bad = false);

}  // namespace simul
