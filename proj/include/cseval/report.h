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

#ifndef CSEVAL_REPORT_H_
#define CSEVAL_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cseval/benchmark.h"

namespace cseval {

// Fixed six decimals; "undefined" for an empty value.
std::string FormatValue(std::optional<double> value);

// Quotes a CSV field when it contains a comma, quote or newline.
std::string CsvField(std::string_view field);

// metric,config,pearson,spearman,n
// One row per scored (utterance, system) pair.
void WriteSentenceScoresCsv(const std::vector<MetricScorer>& scorers,
                            const ScoredCorpus& scored, std::ostream& out);
void WriteCorrelationCsv(const CorrelationReport& report, std::ostream& out);
// recording_id,cmi,<metric spec>... (per-recording Pearson)
void WriteRecordingCsv(const CorrelationReport& report, std::ostream& out);
void WriteCorrelationMarkdown(const CorrelationReport& report,
                              std::ostream& out);

// metric,config,system,score,rank,gold_rank,agrees
void WriteSystemCsv(const SystemReport& report, std::ostream& out);
void WriteSystemMarkdown(const SystemReport& report, std::ostream& out);

void WriteIaaCsv(const IaaReport& report, std::ostream& out);
void WriteIaaMarkdown(const IaaReport& report, std::ostream& out);

}  // namespace cseval

#endif  // CSEVAL_REPORT_H_
