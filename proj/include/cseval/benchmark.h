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

#ifndef CSEVAL_BENCHMARK_H_
#define CSEVAL_BENCHMARK_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cseval/codeswitch.h"
#include "cseval/corpus.h"
#include "cseval/metric_config.h"

namespace cseval {

// CER of the hypothesis against its minimal edit (the edit is the
// reference). Throws EmptyReferenceError for an empty minimal edit.
double GoldCer(std::string_view hypothesis, std::string_view minimal_edit);
EditCounts GoldCerCounts(std::string_view hypothesis,
                         std::string_view minimal_edit);

// Annotator whose edit defines GoldCER for (record, system): the override
// if it annotated the pair, else the record's primary annotator, else the
// lexicographically first annotator. Empty when nobody annotated it.
std::optional<std::string> GoldAnnotator(
    const UtteranceRecord& record, const std::string& system_id,
    const std::optional<std::string>& override_annotator = std::nullopt);

enum class Granularity { kCer, kWer };
Granularity ParseGranularity(std::string_view text);

struct IaaReport {
  Granularity granularity = Granularity::kCer;
  std::vector<std::string> annotators;
  // Symmetric: pairwise.at({a, b}) == pairwise.at({b, a}).
  std::map<std::pair<std::string, std::string>, double> pairwise;
  // Annotator edit vs ASR hypothesis (edit as reference).
  std::map<std::string, double> vs_hypothesis;
  // Annotator edit vs corpus reference (reference as reference).
  std::map<std::string, double> vs_reference;
  double pairwise_avg = 0.0;
  double hypothesis_avg = 0.0;
  double reference_avg = 0.0;
  // (record, system) items annotated by two or more annotators.
  std::size_t items = 0;
  std::size_t excluded_unclear = 0;
};

// Pairwise rates are means over shared items of the two directed rates
// averaged. Only items with at least two annotators take part; unclear
// records are excluded. Throws InsufficientAnnotatorsError.
IaaReport IaaMatrix(const Corpus& corpus, Granularity granularity);

struct BenchmarkOptions {
  std::optional<std::string> annotator;
  unsigned jobs = 1;
  const LanguageLexicon* language_lexicon = nullptr;
};

// A scored (utterance, system) pair. metric_scores[k] is empty when metric
// k could not score the pair (empty reference).
struct ScoredPair {
  std::string utterance_id;
  std::string recording_id;
  std::string system_id;
  double gold_cer = 0.0;
  EditCounts gold_counts;
  std::vector<std::optional<SentenceScore>> metric_scores;
};

struct ScoredCorpus {
  std::vector<ScoredPair> pairs;
  std::size_t excluded_unclear_records = 0;
  std::size_t excluded_pairs = 0;
  std::vector<std::string> warnings;
};

// Scores every (utterance, system) pair of the non-unclear records, in
// utterance-id then system-id order. Pairs without a usable minimal edit
// are excluded with a warning. Work is spread over `options.jobs` threads.
ScoredCorpus ScoreCorpus(const Corpus& corpus,
                         const std::vector<MetricScorer>& scorers,
                         const BenchmarkOptions& options = {});

struct CorrelationEntry {
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::size_t n = 0;
};

struct MetricCorrelation {
  std::string metric;
  std::string config;
  std::string spec;
  Orientation orientation = Orientation::kError;
  CorrelationEntry overall;
  std::map<std::string, CorrelationEntry> per_recording;
  // Sample standard deviation of the defined per-recording Pearson values.
  std::optional<double> per_recording_stddev;
};

struct CorrelationReport {
  std::vector<MetricCorrelation> metrics;
  std::size_t pairs = 0;
  std::size_t excluded_unclear_records = 0;
  std::size_t excluded_pairs = 0;
  // Recording-level CMI over the references of included records; empty
  // when a recording has no language-dependent tokens.
  std::map<std::string, std::optional<double>> recording_cmi;
  std::vector<std::string> warnings;
};

// Error metrics are correlated with GoldCER, accuracy metrics with
// 1 - GoldCER.
CorrelationReport SentenceCorrelations(const Corpus& corpus,
                                       const std::vector<MetricScorer>& scorers,
                                       const ScoredCorpus& scored,
                                       const BenchmarkOptions& options = {});

struct MetricSystemScores {
  std::string metric;
  std::string config;
  std::string spec;
  Orientation orientation = Orientation::kError;
  std::vector<double> scores;
  std::vector<std::size_t> ranks;
  bool agrees_with_gold = false;
};

struct SystemReport {
  std::vector<std::string> systems;
  std::vector<double> gold_cer;
  std::vector<std::size_t> gold_ranks;
  std::vector<MetricSystemScores> metrics;
};

// Ranks are 1-based; ties go to the lexicographically smaller system id.
std::vector<std::size_t> RankSystems(const std::vector<double>& scores,
                                     Orientation orientation);

SystemReport SystemScores(const std::vector<MetricScorer>& scorers,
                          const ScoredCorpus& scored);

// CMI of every included reference, grouped by recording.
std::map<std::string, std::optional<double>> RecordingCmis(
    const Corpus& corpus, const LanguageLexicon* lexicon = nullptr);

}  // namespace cseval

#endif  // CSEVAL_BENCHMARK_H_
