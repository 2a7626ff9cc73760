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

#include "cseval/benchmark.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <mutex>
#include <set>
#include <thread>

#include "cseval/error.h"
#include "cseval/ortho_metrics.h"
#include "cseval/statistics.h"
#include "cseval/textnorm.h"

namespace cseval {

namespace {

double Rate(Granularity g, std::string_view ref, std::string_view hyp) {
  if (g == Granularity::kCer) return Cer(ref, hyp);
  return Wer(Surfaces(Tokenize(ref)), Surfaces(Tokenize(hyp)));
}

std::optional<double> TryRate(Granularity g, std::string_view ref,
                              std::string_view hyp) {
  try {
    return Rate(g, ref, hyp);
  } catch (const EmptyReferenceError&) {
    return std::nullopt;
  }
}

std::optional<double> MeanOf(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  return Mean(values);
}

CorrelationEntry Correlate(const std::vector<double>& metric,
                           const std::vector<double>& gold) {
  return {Pearson(metric, gold), Spearman(metric, gold), metric.size()};
}

struct WorkItem {
  const UtteranceRecord* record;
  std::string system_id;
};

}  // namespace

EditCounts GoldCerCounts(std::string_view hypothesis,
                         std::string_view minimal_edit) {
  if (Tokenize(minimal_edit).empty()) {
    throw EmptyReferenceError("minimal edit is empty");
  }
  return CharCounts(minimal_edit, hypothesis);
}

double GoldCer(std::string_view hypothesis, std::string_view minimal_edit) {
  return WerFromCounts(GoldCerCounts(hypothesis, minimal_edit));
}

std::optional<std::string> GoldAnnotator(
    const UtteranceRecord& record, const std::string& system_id,
    const std::optional<std::string>& override_annotator) {
  if (override_annotator && record.MinimalEdit(*override_annotator, system_id)) {
    return override_annotator;
  }
  if (record.primary_annotator &&
      record.MinimalEdit(*record.primary_annotator, system_id)) {
    return record.primary_annotator;
  }
  std::vector<std::string> annotators = record.AnnotatorsFor(system_id);
  if (annotators.empty()) return std::nullopt;
  return annotators.front();
}

Granularity ParseGranularity(std::string_view text) {
  if (text == "cer" || text == "CER") return Granularity::kCer;
  if (text == "wer" || text == "WER") return Granularity::kWer;
  throw ConfigError("granularity must be cer or wer, got '" +
                    std::string(text) + "'");
}

IaaReport IaaMatrix(const Corpus& corpus, Granularity granularity) {
  IaaReport report;
  report.granularity = granularity;
  std::map<std::pair<std::string, std::string>, std::vector<double>> pair_rates;
  std::map<std::string, std::vector<double>> hyp_rates;
  std::map<std::string, std::vector<double>> ref_rates;
  std::set<std::string> annotators;

  for (const auto& record : corpus) {
    if (record.unclear) {
      ++report.excluded_unclear;
      continue;
    }
    for (const auto& [system, hypothesis] : record.hypotheses) {
      const std::vector<std::string> who = record.AnnotatorsFor(system);
      if (who.size() < 2) continue;
      ++report.items;
      for (std::size_t i = 0; i < who.size(); ++i) {
        const std::string& a = *record.MinimalEdit(who[i], system);
        annotators.insert(who[i]);
        if (auto r = TryRate(granularity, a, hypothesis)) {
          hyp_rates[who[i]].push_back(*r);
        }
        if (auto r = TryRate(granularity, record.reference, a)) {
          ref_rates[who[i]].push_back(*r);
        }
        for (std::size_t j = i + 1; j < who.size(); ++j) {
          const std::string& b = *record.MinimalEdit(who[j], system);
          std::optional<double> ab = TryRate(granularity, a, b);
          std::optional<double> ba = TryRate(granularity, b, a);
          if (!ab && !ba) continue;
          double rate = ab && ba ? (*ab + *ba) / 2.0 : ab ? *ab : *ba;
          pair_rates[{who[i], who[j]}].push_back(rate);
        }
      }
    }
  }
  if (annotators.size() < 2) {
    throw InsufficientAnnotatorsError(
        "inter-annotator agreement needs items edited by two or more "
        "annotators");
  }
  report.annotators.assign(annotators.begin(), annotators.end());

  std::vector<double> pair_means;
  for (const auto& [key, rates] : pair_rates) {
    const double mean = Mean(rates);
    report.pairwise[key] = mean;
    report.pairwise[{key.second, key.first}] = mean;
    pair_means.push_back(mean);
  }
  std::vector<double> hyp_means;
  std::vector<double> ref_means;
  for (const auto& a : report.annotators) {
    if (auto m = MeanOf(hyp_rates[a])) {
      report.vs_hypothesis[a] = *m;
      hyp_means.push_back(*m);
    }
    if (auto m = MeanOf(ref_rates[a])) {
      report.vs_reference[a] = *m;
      ref_means.push_back(*m);
    }
  }
  report.pairwise_avg = Mean(pair_means);
  report.hypothesis_avg = Mean(hyp_means);
  report.reference_avg = Mean(ref_means);
  return report;
}

ScoredCorpus ScoreCorpus(const Corpus& corpus,
                         const std::vector<MetricScorer>& scorers,
                         const BenchmarkOptions& options) {
  ScoredCorpus out;
  std::vector<const UtteranceRecord*> records;
  for (const auto& record : corpus) {
    if (record.unclear) {
      ++out.excluded_unclear_records;
    } else {
      records.push_back(&record);
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const UtteranceRecord* a, const UtteranceRecord* b) {
                     return a->utterance_id < b->utterance_id;
                   });
  std::vector<WorkItem> items;
  for (const auto* record : records) {
    for (const auto& [system, text] : record->hypotheses) {
      items.push_back({record, system});
    }
  }

  std::vector<std::optional<ScoredPair>> results(items.size());
  std::vector<std::vector<std::string>> warnings(items.size());
  auto work = [&](std::size_t k) {
    const UtteranceRecord& record = *items[k].record;
    const std::string& system = items[k].system_id;
    const std::string where = record.utterance_id + "/" + system;
    const std::optional<std::string> annotator =
        GoldAnnotator(record, system, options.annotator);
    if (!annotator) {
      warnings[k].push_back(where + ": no minimal edit, pair excluded");
      return;
    }
    const std::string& hypothesis = record.hypotheses.at(system);
    ScoredPair pair{record.utterance_id, record.recording_id, system};
    try {
      pair.gold_counts =
          GoldCerCounts(hypothesis, *record.MinimalEdit(*annotator, system));
      pair.gold_cer = WerFromCounts(pair.gold_counts);
    } catch (const EmptyReferenceError& e) {
      warnings[k].push_back(where + ": " + e.what() + ", pair excluded");
      return;
    }
    const ScoringItem item{record.utterance_id, where, record.reference,
                           hypothesis};
    pair.metric_scores.reserve(scorers.size());
    for (const auto& scorer : scorers) {
      try {
        pair.metric_scores.emplace_back(scorer.Score(item));
      } catch (const EmptyReferenceError& e) {
        warnings[k].push_back(where + ": " + scorer.config().spec + ": " +
                              e.what() + ", skipped for this metric");
        pair.metric_scores.emplace_back(std::nullopt);
      } catch (const TranslationFailedError& e) {
        warnings[k].push_back(where + ": " + scorer.config().spec + ": " +
                              e.what() + ", skipped for this metric");
        pair.metric_scores.emplace_back(std::nullopt);
      }
    }
    results[k] = std::move(pair);
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1 || items.size() < 2) {
    for (std::size_t k = 0; k < items.size(); ++k) work(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < items.size(); k = next++) {
          try {
            work(k);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (std::size_t k = 0; k < items.size(); ++k) {
    for (auto& w : warnings[k]) out.warnings.push_back(std::move(w));
    if (results[k]) {
      out.pairs.push_back(std::move(*results[k]));
    } else {
      ++out.excluded_pairs;
    }
  }
  return out;
}

std::map<std::string, std::optional<double>> RecordingCmis(
    const Corpus& corpus, const LanguageLexicon* lexicon) {
  std::map<std::string, std::vector<LanguageTaggedUtterance>> by_recording;
  for (const auto& record : corpus) {
    if (record.unclear) continue;
    by_recording[record.recording_id].push_back(
        TagLanguages(Tokenize(record.reference), lexicon));
  }
  std::map<std::string, std::optional<double>> out;
  for (const auto& [recording, utterances] : by_recording) {
    try {
      out[recording] = RecordingCmi(utterances);
    } catch (const NoLanguageTokensError&) {
      out[recording] = std::nullopt;
    }
  }
  return out;
}

CorrelationReport SentenceCorrelations(const Corpus& corpus,
                                       const std::vector<MetricScorer>& scorers,
                                       const ScoredCorpus& scored,
                                       const BenchmarkOptions& options) {
  CorrelationReport report;
  report.pairs = scored.pairs.size();
  report.excluded_unclear_records = scored.excluded_unclear_records;
  report.excluded_pairs = scored.excluded_pairs;
  report.warnings = scored.warnings;
  report.recording_cmi = RecordingCmis(corpus, options.language_lexicon);

  for (std::size_t k = 0; k < scorers.size(); ++k) {
    const MetricConfig& config = scorers[k].config();
    MetricCorrelation mc{config.name(), config.config(), config.spec,
                         scorers[k].orientation()};
    const bool accuracy = mc.orientation == Orientation::kAccuracy;
    std::vector<double> metric;
    std::vector<double> gold;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
        per_recording;
    for (const auto& pair : scored.pairs) {
      if (!pair.metric_scores[k]) continue;
      const double g = accuracy ? 1.0 - pair.gold_cer : pair.gold_cer;
      metric.push_back(pair.metric_scores[k]->value);
      gold.push_back(g);
      auto& [rm, rg] = per_recording[pair.recording_id];
      rm.push_back(pair.metric_scores[k]->value);
      rg.push_back(g);
    }
    mc.overall = Correlate(metric, gold);
    std::vector<double> recording_r;
    for (const auto& [recording, series] : per_recording) {
      CorrelationEntry entry = Correlate(series.first, series.second);
      if (entry.pearson) recording_r.push_back(*entry.pearson);
      mc.per_recording[recording] = entry;
    }
    mc.per_recording_stddev = SampleStdDev(recording_r);
    if (!mc.overall.pearson) {
      report.warnings.push_back(config.spec +
                                ": correlation undefined (constant series)");
    }
    report.metrics.push_back(std::move(mc));
  }
  return report;
}

std::vector<std::size_t> RankSystems(const std::vector<double>& scores,
                                     Orientation orientation) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return orientation == Orientation::kError ? scores[a] < scores[b]
                                              : scores[a] > scores[b];
  });
  std::vector<std::size_t> ranks(scores.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r + 1;
  return ranks;
}

SystemReport SystemScores(const std::vector<MetricScorer>& scorers,
                          const ScoredCorpus& scored) {
  SystemReport report;
  std::map<std::string, std::vector<const ScoredPair*>> by_system;
  for (const auto& pair : scored.pairs) {
    by_system[pair.system_id].push_back(&pair);
  }
  for (const auto& [system, pairs] : by_system) {
    report.systems.push_back(system);
    EditCounts gold;
    for (const auto* p : pairs) gold += p->gold_counts;
    report.gold_cer.push_back(WerFromCounts(gold));
  }
  report.gold_ranks = RankSystems(report.gold_cer, Orientation::kError);

  for (std::size_t k = 0; k < scorers.size(); ++k) {
    const MetricConfig& config = scorers[k].config();
    MetricSystemScores ms{config.name(), config.config(), config.spec,
                          scorers[k].orientation()};
    for (const auto& [system, pairs] : by_system) {
      std::vector<SentenceScore> scores;
      for (const auto* p : pairs) {
        if (p->metric_scores[k]) scores.push_back(*p->metric_scores[k]);
      }
      if (scores.empty()) {
        throw Error("system '" + system + "' has no pairs scoreable by '" +
                    config.spec + "'");
      }
      ms.scores.push_back(scorers[k].Pool(scores));
    }
    ms.ranks = RankSystems(ms.scores, ms.orientation);
    ms.agrees_with_gold = ms.ranks == report.gold_ranks;
    report.metrics.push_back(std::move(ms));
  }
  return report;
}

}  // namespace cseval
