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

#ifndef CSEVAL_CORPUS_H_
#define CSEVAL_CORPUS_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cseval {

// One corpus row. Minimal edits are keyed by annotator, then by system:
// each annotator post-edits every hypothesis they were assigned.
struct UtteranceRecord {
  std::string utterance_id;
  std::string recording_id;
  std::string reference;
  std::map<std::string, std::string> hypotheses;
  std::map<std::string, std::map<std::string, std::string>> minimal_edits;
  std::optional<std::string> primary_annotator;
  bool unclear = false;

  // Annotators with an edit for `system_id`, sorted.
  std::vector<std::string> AnnotatorsFor(const std::string& system_id) const;
  const std::string* MinimalEdit(const std::string& annotator,
                                 const std::string& system_id) const;
};

using Corpus = std::vector<UtteranceRecord>;

// JSON-lines, one record per line:
//   {"utterance_id": "u1", "recording_id": "r1", "reference": "...",
//    "hypotheses": {"sysA": "..."},
//    "minimal_edits": {"A1": {"sysA": "..."}},
//    "primary_annotator": "A1", "unclear": false}
// An annotator's value may be a plain string when the record has exactly
// one hypothesis. Blank lines and lines starting with '#' are skipped.
// Throws ParseError (with line number) and DuplicateIdError.
Corpus ParseCorpus(std::istream& in);
Corpus LoadCorpus(const std::filesystem::path& path);

void WriteCorpus(const Corpus& corpus, std::ostream& out);

// Sorted ids of every system that occurs in the corpus.
std::vector<std::string> SystemIds(const Corpus& corpus);

}  // namespace cseval

#endif  // CSEVAL_CORPUS_H_
