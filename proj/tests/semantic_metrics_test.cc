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

#include "cseval/semantic_metrics.h"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cseval/error.h"
#include "oracle_values.h"
#include "test_util.h"

namespace cseval {
namespace {

using V = std::vector<double>;

TEST(CosineTest, Examples) {
  EXPECT_NEAR(Cosine(V{1, 1}, V{1, 0}), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(Cosine(V{1, 0}, V{0, 1}), 0.0, 1e-15);
  EXPECT_NEAR(Cosine(V{1, 2, 3}, V{-1, -2, -3}), -1.0, 1e-15);
  EXPECT_THROW(Cosine(V{1, 2}, V{1, 2, 3}), DimensionMismatchError);
  EXPECT_THROW(Cosine(V{0, 0}, V{1, 2}), ZeroVectorError);
}

TEST(CosineTest, SelfSimilarityAndScaleInvariance) {
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 200; ++trial) {
    V a(8), b(8);
    for (auto& x : a) x = g(rng);
    for (auto& x : b) x = g(rng);
    EXPECT_NEAR(Cosine(a, a), 1.0, 1e-12);
    V scaled = a;
    const double s = scale(rng);
    for (auto& x : scaled) x *= s;
    EXPECT_NEAR(Cosine(scaled, b), Cosine(a, b), 1e-12);
    const double c = Cosine(a, b);
    EXPECT_GE(c, -1.0);
    EXPECT_LE(c, 1.0);
  }
}

TEST(BleuTest, Examples) {
  EXPECT_DOUBLE_EQ(Bleu({"a", "b", "c", "d"}, {"a", "b", "c", "d"}), 1.0);
  EXPECT_EQ(Bleu({"a", "b"}, {"c", "d"}), 0.0);
  EXPECT_EQ(Bleu({"a", "b"}, {}), 0.0);
  EXPECT_THROW(Bleu({}, {"a"}), EmptyReferenceError);
  EXPECT_NEAR(Bleu({"a", "b", "c", "d"}, {"a", "b", "c", "d", "e"}),
              testing::kBleuAbcdVsAbcde, 1e-12);
}

TEST(BleuTest, BrevityPenalty) {
  // Short hypothesis matching a prefix: unigram precision 1, penalized length.
  const double b = Bleu({"a", "b", "c", "d"}, {"a", "b"});
  const double expected =
      std::exp(1.0 - 2.0) * std::pow(1.0 * (2.0 / 2.0) * 1.0 * 1.0, 0.25);
  EXPECT_NEAR(b, expected, 1e-12);
}

TEST(ChrfTest, Examples) {
  EXPECT_DOUBLE_EQ(Chrf("abcd", "abcd"), 1.0);
  EXPECT_EQ(Chrf("abc", "xyz"), 0.0);
  EXPECT_EQ(Chrf("abc", ""), 0.0);
  EXPECT_THROW(Chrf("", "abc"), EmptyReferenceError);
  EXPECT_NEAR(Chrf("abcd", "abcf"), testing::kChrfAbcdVsAbcf, 1e-12);
  EXPECT_DOUBLE_EQ(Chrf("كتاب", "كتاب"), 1.0);
}

TEST(NgramOracleTest, MatchesFrozenCases) {
  const auto cases = testing::LoadNgramCases();
  ASSERT_EQ(cases.size(), 100u);
  for (const auto& c : cases) {
    EXPECT_NEAR(Bleu(c.ref_words, c.hyp_words), c.bleu, 1e-9);
    EXPECT_NEAR(Chrf(c.ref_chars, c.hyp_chars), c.chrf, 1e-9);
  }
}

TEST(ChannelTest, AggregationArithmetic) {
  const ChannelScores s = Aggregated({{"base", 0.8}, {"ar", 0.6}, {"en", 1.0}});
  EXPECT_NEAR(s.avg, 0.8, 1e-15);
  EXPECT_EQ(s.max, 1.0);
  EXPECT_EQ(s.Get(Aggregate::kAvg), s.avg);
  EXPECT_EQ(s.Get(Aggregate::kMax), s.max);
  EXPECT_LE(s.avg, s.max);
  EXPECT_THROW(Aggregated({}), Error);
  EXPECT_EQ(ParseAggregate("max"), Aggregate::kMax);
  EXPECT_THROW(ParseAggregate("median"), ConfigError);
}

TEST(EmbeddingStoreTest, LoadAndScore) {
  const EmbeddingStore store =
      EmbeddingStore::Load(testing::TestDataDir() / "toy_embeddings.jsonl");
  EXPECT_EQ(store.dimension(), 3u);
  EXPECT_EQ(store.size(), 6u);
  const ChannelScores one = ChannelSemantic("u1", "u1/sysA", store, {"base"});
  EXPECT_NEAR(one.avg, 1.0, 1e-12);
  const ChannelScores two =
      ChannelSemantic("u1", "u1/sysA", store, {"base", "en"});
  EXPECT_NEAR(two.per_channel.at("en"), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(two.avg, (1.0 + 1.0 / std::sqrt(2.0)) / 2.0, 1e-12);
  EXPECT_NEAR(two.max, 1.0, 1e-12);
  EXPECT_THROW(ChannelSemantic("u2", "u2/sysA", store, {"en"}),
               MissingEmbeddingError);
  try {
    ChannelSemantic("u9", "u9/sysA", store, {"base"});
  } catch (const MissingEmbeddingError& e) {
    EXPECT_NE(std::string(e.what()).find("u9"), std::string::npos);
  }
}

TEST(EmbeddingStoreTest, SameIdOnBothSidesIsSelfSimilar) {
  std::istringstream in(
      R"({"id": "s", "side": "ref", "channel": "base", "vector": [0.3, -2]})"
      "\n"
      R"({"id": "s", "side": "hyp", "channel": "base", "vector": [0.3, -2]})");
  const EmbeddingStore store = EmbeddingStore::Parse(in);
  EXPECT_NEAR(ChannelSemantic("s", store, {"base"}).avg, 1.0, 1e-12);
}

TEST(EmbeddingStoreTest, Errors) {
  std::istringstream dim(
      R"({"id": "a", "side": "ref", "channel": "base", "vector": [1, 2]})"
      "\n"
      R"({"id": "b", "side": "ref", "channel": "base", "vector": [1, 2, 3]})");
  EXPECT_THROW(EmbeddingStore::Parse(dim), DimensionMismatchError);
  std::istringstream dup(
      R"({"id": "a", "side": "ref", "channel": "base", "vector": [1, 2]})"
      "\n"
      R"({"id": "a", "side": "ref", "channel": "base", "vector": [3, 4]})");
  EXPECT_THROW(EmbeddingStore::Parse(dup), DuplicateIdError);
  std::istringstream side(
      R"({"id": "a", "side": "left", "channel": "base", "vector": [1]})");
  EXPECT_THROW(EmbeddingStore::Parse(side), ParseError);
  std::istringstream json("{not json}\n");
  try {
    EmbeddingStore::Parse(json);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(TranslationStoreTest, LoadWithFailureMarker) {
  TranslationStore store;
  store.Load(testing::TestDataDir() / "toy_translations_en.tsv", "en");
  EXPECT_EQ(store.size(), 3u);
  ASSERT_NE(store.Find("u1", Side::kRef, "en"), nullptr);
  EXPECT_EQ(*store.Find("u2", Side::kRef, "en"), "the project was very hard");
  EXPECT_EQ(store.Find("u2/sysA", Side::kHyp, "en"), nullptr);
  EXPECT_TRUE(store.Failed("u2/sysA", Side::kHyp, "en"));
  EXPECT_FALSE(store.Failed("u1/sysA", Side::kHyp, "en"));
}

TEST(TranslationStoreTest, Errors) {
  TranslationStore store;
  std::istringstream bad("u1\tref\n");
  EXPECT_THROW(store.Parse(bad, "ar"), ParseError);
  std::istringstream marker("u1\tref\tx\t!oops\n");
  EXPECT_THROW(store.Parse(marker, "ar"), ParseError);
  std::istringstream dup("u1\tref\tx\nu1\tref\ty\n");
  EXPECT_THROW(store.Parse(dup, "ar"), DuplicateIdError);
}

}  // namespace
}  // namespace cseval
