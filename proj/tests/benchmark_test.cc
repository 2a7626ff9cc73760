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

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cseval/error.h"
#include "test_util.h"

namespace cseval {
namespace {

UtteranceRecord Record(const std::string& id, const std::string& recording,
                       const std::string& reference,
                       std::map<std::string, std::string> hyps,
                       std::map<std::string, std::map<std::string, std::string>>
                           edits) {
  UtteranceRecord r;
  r.utterance_id = id;
  r.recording_id = recording;
  r.reference = reference;
  r.hypotheses = std::move(hyps);
  r.minimal_edits = std::move(edits);
  return r;
}

std::vector<MetricScorer> Scorers(const std::vector<std::string>& specs) {
  std::vector<MetricScorer> out;
  for (const auto& s : specs) out.emplace_back(ParseMetricConfig(s), ScoringResources{});
  return out;
}

TEST(GoldCerTest, Examples) {
  EXPECT_EQ(GoldCer("abc", "abc"), 0.0);
  EXPECT_NEAR(GoldCer("abd", "abc"), 1.0 / 3.0, 1e-12);
  EXPECT_THROW(GoldCer("abc", ""), EmptyReferenceError);
  EXPECT_THROW(GoldCer("abc", "   "), EmptyReferenceError);
}

TEST(GoldAnnotatorTest, Precedence) {
  UtteranceRecord r = Record("u", "r", "x", {{"s", "x"}},
                             {{"b", {{"s", "x"}}}, {"a", {{"s", "x"}}},
                              {"c", {{"t", "x"}}}});
  EXPECT_EQ(GoldAnnotator(r, "s"), "a");
  r.primary_annotator = "b";
  EXPECT_EQ(GoldAnnotator(r, "s"), "b");
  EXPECT_EQ(GoldAnnotator(r, "s", std::string("a")), "a");
  // An override without an edit for this system falls back.
  EXPECT_EQ(GoldAnnotator(r, "s", std::string("c")), "b");
  EXPECT_EQ(GoldAnnotator(r, "zzz"), std::nullopt);
}

TEST(IaaTest, SingleCharacterApart) {
  Corpus corpus{Record("u", "r", "abcdefghij", {{"s", "abcdefghij"}},
                       {{"a1", {{"s", "abcdefghij"}}},
                        {"a2", {{"s", "abcdefghiX"}}}})};
  const IaaReport cer = IaaMatrix(corpus, Granularity::kCer);
  EXPECT_NEAR((cer.pairwise.at({"a1", "a2"})), 0.1, 1e-12);
  EXPECT_EQ(cer.pairwise.at({"a1", "a2"}), cer.pairwise.at({"a2", "a1"}));
  EXPECT_EQ(cer.vs_hypothesis.at("a1"), 0.0);
  EXPECT_NEAR(cer.vs_hypothesis.at("a2"), 0.1, 1e-12);
  EXPECT_NEAR(cer.vs_reference.at("a2"), 0.1, 1e-12);
  EXPECT_NEAR(cer.pairwise_avg, 0.1, 1e-12);
  EXPECT_NEAR(cer.hypothesis_avg, 0.05, 1e-12);
  EXPECT_EQ(cer.items, 1u);
  const IaaReport wer = IaaMatrix(corpus, Granularity::kWer);
  EXPECT_EQ(wer.pairwise.at({"a1", "a2"}), 1.0);
}

TEST(IaaTest, IdenticalAnnotatorsGiveZeroMatrix) {
  Corpus corpus{Record("u", "r", "go home", {{"s", "go hom"}},
                       {{"a", {{"s", "go home"}}},
                        {"b", {{"s", "go home"}}},
                        {"c", {{"s", "go home"}}}})};
  const IaaReport report = IaaMatrix(corpus, Granularity::kCer);
  EXPECT_EQ(report.annotators, (std::vector<std::string>{"a", "b", "c"}));
  for (const auto& [key, value] : report.pairwise) EXPECT_EQ(value, 0.0);
  EXPECT_EQ(report.pairwise.size(), 6u);
  EXPECT_EQ(report.reference_avg, 0.0);
  EXPECT_GT(report.hypothesis_avg, 0.0);
}

TEST(IaaTest, SymmetricAveragesAndExclusions) {
  Corpus corpus{
      Record("u1", "r", "كتاب school", {{"s", "كتاب skool"}},
             {{"a", {{"s", "كتاب school"}}}, {"b", {{"s", "كتب school"}}},
              {"c", {{"s", "كتاب سكول"}}}}),
      Record("u2", "r", "go home now", {{"s", "go hom now"}, {"t", "go"}},
             {{"a", {{"s", "go home now"}, {"t", "go"}}},
              {"b", {{"s", "go hom now"}}}})};
  UtteranceRecord unclear =
      Record("u3", "r", "x", {{"s", "y"}}, {{"a", {{"s", "q"}}}, {"b", {{"s", "z"}}}});
  unclear.unclear = true;
  corpus.push_back(unclear);
  const IaaReport report = IaaMatrix(corpus, Granularity::kCer);
  EXPECT_EQ(report.items, 2u);
  EXPECT_EQ(report.excluded_unclear, 1u);
  double upper = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < report.annotators.size(); ++i) {
    for (std::size_t j = 0; j < report.annotators.size(); ++j) {
      if (i == j) continue;
      const auto& a = report.annotators[i];
      const auto& b = report.annotators[j];
      EXPECT_EQ(report.pairwise.at({a, b}), report.pairwise.at({b, a}));
      if (i < j) {
        upper += report.pairwise.at({a, b});
        ++count;
      }
    }
  }
  EXPECT_NEAR(report.pairwise_avg, upper / count, 1e-15);
}

TEST(IaaTest, NeedsTwoAnnotators) {
  Corpus corpus{Record("u", "r", "x", {{"s", "x"}}, {{"a", {{"s", "x"}}}})};
  EXPECT_THROW(IaaMatrix(corpus, Granularity::kCer),
               InsufficientAnnotatorsError);
  EXPECT_THROW(ParseGranularity("phone"), ConfigError);
}

Corpus TwoSystemCorpus() {
  Corpus corpus;
  const std::vector<std::string> refs{"abcdefgh", "ijklmnop", "qrstuvwx",
                                      "yzabcdef", "ghijklmn", "opqrstuv"};
  for (std::size_t i = 0; i < refs.size(); ++i) {
    std::string good = refs[i];
    std::string bad = refs[i];
    for (std::size_t e = 0; e <= i % 3; ++e) bad[e] = 'X';
    if (i % 2) good[7] = 'Y';
    corpus.push_back(Record("u" + std::to_string(i), i < 3 ? "r1" : "r2",
                            refs[i], {{"good", good}, {"bad", bad}},
                            {{"a", {{"good", refs[i]}, {"bad", refs[i]}}}}));
  }
  return corpus;
}

TEST(ScoreCorpusTest, OrderExclusionsAndDeterminism) {
  Corpus corpus = TwoSystemCorpus();
  corpus[2].minimal_edits.clear();
  corpus[3].minimal_edits["a"]["bad"] = " ";
  const auto scorers = Scorers({"cer", "wer"});
  const ScoredCorpus one = ScoreCorpus(corpus, scorers);
  EXPECT_EQ(one.pairs.size(), 12u - 3u);
  EXPECT_EQ(one.excluded_pairs, 3u);
  EXPECT_EQ(one.warnings.size(), 3u);
  EXPECT_EQ(one.pairs[0].utterance_id, "u0");
  EXPECT_EQ(one.pairs[0].system_id, "bad");
  EXPECT_EQ(one.pairs[1].system_id, "good");

  BenchmarkOptions parallel;
  parallel.jobs = 4;
  const ScoredCorpus four = ScoreCorpus(corpus, scorers, parallel);
  ASSERT_EQ(four.pairs.size(), one.pairs.size());
  for (std::size_t i = 0; i < one.pairs.size(); ++i) {
    EXPECT_EQ(four.pairs[i].utterance_id, one.pairs[i].utterance_id);
    EXPECT_EQ(four.pairs[i].system_id, one.pairs[i].system_id);
    EXPECT_EQ(four.pairs[i].gold_cer, one.pairs[i].gold_cer);
    EXPECT_EQ(four.pairs[i].metric_scores[0]->value,
              one.pairs[i].metric_scores[0]->value);
  }
  EXPECT_EQ(four.warnings, one.warnings);
}

TEST(ScoreCorpusTest, UnclearRecordsReduceCountsExactly) {
  Corpus corpus = TwoSystemCorpus();
  const auto scorers = Scorers({"cer"});
  const std::size_t before = ScoreCorpus(corpus, scorers).pairs.size();
  corpus[1].unclear = true;
  corpus[4].unclear = true;
  const ScoredCorpus after = ScoreCorpus(corpus, scorers);
  EXPECT_EQ(after.excluded_unclear_records, 2u);
  EXPECT_EQ(before - after.pairs.size(), 2u * 2u);
}

TEST(ScoreCorpusTest, EmptyReferenceSkipsOnlyThatMetric) {
  Corpus corpus{Record("u", "r", "[noise]", {{"s", "hello"}},
                       {{"a", {{"s", "hello"}}}}),
                Record("v", "r", "go", {{"s", "go"}}, {{"a", {{"s", "go"}}}})};
  corpus[0].reference = "";
  const ScoredCorpus scored = ScoreCorpus(corpus, Scorers({"wer"}));
  ASSERT_EQ(scored.pairs.size(), 2u);
  EXPECT_FALSE(scored.pairs[0].metric_scores[0].has_value());
  EXPECT_TRUE(scored.pairs[1].metric_scores[0].has_value());
  EXPECT_EQ(scored.warnings.size(), 1u);
}

TEST(CorrelationTest, GoldMetricsCorrelatePerfectly) {
  const Corpus corpus = TwoSystemCorpus();
  // Minimal edits equal the references, so CER is GoldCER itself and
  // chrF-style accuracy moves opposite to it.
  const auto scorers = Scorers({"cer", "chrf"});
  const ScoredCorpus scored = ScoreCorpus(corpus, scorers);
  const CorrelationReport report = SentenceCorrelations(corpus, scorers, scored);
  ASSERT_EQ(report.metrics.size(), 2u);
  EXPECT_NEAR(*report.metrics[0].overall.pearson, 1.0, 1e-12);
  EXPECT_NEAR(*report.metrics[0].overall.spearman, 1.0, 1e-12);
  EXPECT_EQ(report.metrics[0].overall.n, 12u);
  EXPECT_GT(*report.metrics[1].overall.pearson, 0.5);
  EXPECT_EQ(report.metrics[0].per_recording.size(), 2u);
  EXPECT_TRUE(report.metrics[0].per_recording_stddev.has_value());
  EXPECT_NEAR(*report.metrics[0].per_recording_stddev, 0.0, 1e-12);
  EXPECT_EQ(report.recording_cmi.size(), 2u);
}

TEST(CorrelationTest, AccuracyMetricAgainstOneMinusGold) {
  // A metric equal to 1 - GoldCER correlates at +1 after the transform.
  const Corpus corpus = TwoSystemCorpus();
  const auto scorers = Scorers({"cer"});
  ScoredCorpus scored = ScoreCorpus(corpus, scorers);
  std::vector<MetricScorer> accuracy = Scorers({"chrf"});
  for (auto& pair : scored.pairs) {
    pair.metric_scores[0]->value = 1.0 - pair.gold_cer;
  }
  const CorrelationReport report =
      SentenceCorrelations(corpus, accuracy, scored);
  EXPECT_NEAR(*report.metrics[0].overall.pearson, 1.0, 1e-12);
}

TEST(SystemScoresTest, DominanceRankingAndAgreement) {
  const Corpus corpus = TwoSystemCorpus();
  const auto scorers = Scorers({"cer", "wer", "mer", "wil", "bleu", "chrf"});
  const SystemReport report = SystemScores(scorers, ScoreCorpus(corpus, scorers));
  EXPECT_EQ(report.systems, (std::vector<std::string>{"bad", "good"}));
  EXPECT_EQ(report.gold_ranks, (std::vector<std::size_t>{2, 1}));
  ASSERT_EQ(report.metrics.size(), 6u);
  for (const auto& m : report.metrics) {
    EXPECT_EQ(m.ranks.size(), 2u);
    EXPECT_EQ(m.agrees_with_gold, m.ranks == report.gold_ranks);
  }
  EXPECT_TRUE(report.metrics[0].agrees_with_gold);
  EXPECT_TRUE(report.metrics[5].agrees_with_gold);
}

TEST(SystemScoresTest, SingleSystemRanksFirst) {
  Corpus corpus{Record("u", "r", "abc", {{"only", "abd"}},
                       {{"a", {{"only", "abc"}}}})};
  const auto scorers = Scorers({"cer", "bleu"});
  const SystemReport report = SystemScores(scorers, ScoreCorpus(corpus, scorers));
  EXPECT_EQ(report.gold_ranks, (std::vector<std::size_t>{1}));
  for (const auto& m : report.metrics) {
    EXPECT_EQ(m.ranks, (std::vector<std::size_t>{1}));
  }
}

TEST(SystemScoresTest, RanksInvariantUnderPositiveScaling) {
  const Corpus corpus = TwoSystemCorpus();
  const auto scorers = Scorers({"chrf"});
  ScoredCorpus scored = ScoreCorpus(corpus, scorers);
  const auto before = SystemScores(scorers, scored).metrics[0].ranks;
  for (auto& pair : scored.pairs) pair.metric_scores[0]->value *= 3.7;
  EXPECT_EQ(SystemScores(scorers, scored).metrics[0].ranks, before);
}

TEST(RankSystemsTest, OrientationAndTies) {
  EXPECT_EQ(RankSystems({0.3, 0.1, 0.2}, Orientation::kError),
            (std::vector<std::size_t>{3, 1, 2}));
  EXPECT_EQ(RankSystems({0.3, 0.1, 0.2}, Orientation::kAccuracy),
            (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(RankSystems({0.5, 0.5}, Orientation::kError),
            (std::vector<std::size_t>{1, 2}));
}

TEST(RecordingCmiTest, SkipsEmptyUtterances) {
  Corpus corpus{Record("u1", "r1", "انا meeting project رايح", {{"s", "x"}}, {}),
                Record("u2", "r1", "انا رايح", {{"s", "x"}}, {}),
                Record("u3", "r1", "[noise]", {{"s", "x"}}, {}),
                Record("u4", "r2", "[noise]", {{"s", "x"}}, {})};
  const auto cmi = RecordingCmis(corpus);
  EXPECT_NEAR(*cmi.at("r1"), 25.0, 1e-12);
  EXPECT_FALSE(cmi.at("r2").has_value());
}

}  // namespace
}  // namespace cseval
