// Copyright 2026 The cs-eval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cseval/corpus.h"

#include <fstream>
#include <set>

#include "json.hpp"

#include "cseval/error.h"

namespace cseval {

namespace {

using nlohmann::json;

std::string RequireString(const json& record, const char* field,
                          std::size_t line) {
  auto it = record.find(field);
  if (it == record.end()) {
    throw ParseError(std::string("missing field '") + field + "'", line);
  }
  if (!it->is_string()) {
    throw ParseError(std::string("field '") + field + "' must be a string",
                     line);
  }
  return it->get<std::string>();
}

UtteranceRecord ParseRecord(const json& j, std::size_t line) {
  if (!j.is_object()) throw ParseError("record must be a JSON object", line);
  UtteranceRecord r;
  r.utterance_id = RequireString(j, "utterance_id", line);
  r.recording_id = RequireString(j, "recording_id", line);
  r.reference = RequireString(j, "reference", line);

  auto hyps = j.find("hypotheses");
  if (hyps == j.end() || !hyps->is_object() || hyps->empty()) {
    throw ParseError("field 'hypotheses' must be a non-empty object", line);
  }
  for (const auto& [system, text] : hyps->items()) {
    if (!text.is_string()) {
      throw ParseError("hypothesis '" + system + "' must be a string", line);
    }
    r.hypotheses[system] = text.get<std::string>();
  }

  if (auto edits = j.find("minimal_edits"); edits != j.end()) {
    if (!edits->is_object()) {
      throw ParseError("field 'minimal_edits' must be an object", line);
    }
    for (const auto& [annotator, value] : edits->items()) {
      auto& per_system = r.minimal_edits[annotator];
      if (value.is_string()) {
        if (r.hypotheses.size() != 1) {
          throw ParseError("minimal edit of '" + annotator +
                               "' must be keyed by system when the record has "
                               "several hypotheses",
                           line);
        }
        per_system[r.hypotheses.begin()->first] = value.get<std::string>();
        continue;
      }
      if (!value.is_object()) {
        throw ParseError("minimal edits of '" + annotator +
                             "' must be a string or an object",
                         line);
      }
      for (const auto& [system, text] : value.items()) {
        if (!r.hypotheses.count(system)) {
          throw ParseError("minimal edit of '" + annotator +
                               "' names unknown system '" + system + "'",
                           line);
        }
        if (!text.is_string()) {
          throw ParseError("minimal edit text must be a string", line);
        }
        per_system[system] = text.get<std::string>();
      }
    }
  }

  if (auto primary = j.find("primary_annotator");
      primary != j.end() && !primary->is_null()) {
    if (!primary->is_string()) {
      throw ParseError("field 'primary_annotator' must be a string", line);
    }
    r.primary_annotator = primary->get<std::string>();
  }
  if (auto unclear = j.find("unclear"); unclear != j.end()) {
    if (!unclear->is_boolean()) {
      throw ParseError("field 'unclear' must be a boolean", line);
    }
    r.unclear = unclear->get<bool>();
  }
  return r;
}

}  // namespace

std::vector<std::string> UtteranceRecord::AnnotatorsFor(
    const std::string& system_id) const {
  std::vector<std::string> out;
  for (const auto& [annotator, per_system] : minimal_edits) {
    if (per_system.count(system_id)) out.push_back(annotator);
  }
  return out;
}

const std::string* UtteranceRecord::MinimalEdit(
    const std::string& annotator, const std::string& system_id) const {
  auto a = minimal_edits.find(annotator);
  if (a == minimal_edits.end()) return nullptr;
  auto s = a->second.find(system_id);
  return s == a->second.end() ? nullptr : &s->second;
}

Corpus ParseCorpus(std::istream& in) {
  Corpus corpus;
  std::set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') {
      continue;
    }
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    UtteranceRecord record = ParseRecord(j, line_no);
    if (!ids.insert(record.utterance_id).second) {
      throw DuplicateIdError("duplicate utterance_id '" + record.utterance_id +
                                 "'",
                             line_no);
    }
    corpus.push_back(std::move(record));
  }
  return corpus;
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus " + path.string());
  return ParseCorpus(in);
}

void WriteCorpus(const Corpus& corpus, std::ostream& out) {
  for (const auto& r : corpus) {
    json j;
    j["utterance_id"] = r.utterance_id;
    j["recording_id"] = r.recording_id;
    j["reference"] = r.reference;
    j["hypotheses"] = r.hypotheses;
    j["minimal_edits"] = r.minimal_edits;
    if (r.primary_annotator) j["primary_annotator"] = *r.primary_annotator;
    j["unclear"] = r.unclear;
    out << j.dump() << '\n';
  }
}

std::vector<std::string> SystemIds(const Corpus& corpus) {
  std::set<std::string> systems;
  for (const auto& r : corpus) {
    for (const auto& [system, text] : r.hypotheses) systems.insert(system);
  }
  return {systems.begin(), systems.end()};
}

}  // namespace cseval
